#ifndef QCOL_ERRORS_HPP
#define QCOL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qcol {

// Base for all library errors; what() carries the detail.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Arithmetic / ring errors.
struct ZeroDivisor : Error { using Error::Error; };
struct BothZero : Error { using Error::Error; };
struct NonInvertibleT : Error { using Error::Error; };

// Parsing and input validation.
struct SyntaxError : Error { using Error::Error; };
struct EmptyInput : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// Linear algebra.
struct NotSquare : Error { using Error::Error; };
struct ZeroModulus : Error { using Error::Error; };
struct InconsistentAssignment : Error { using Error::Error; };

// Coloring pipeline.
struct NotADivisor : Error { using Error::Error; };
struct WrongVerdict : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

// Dataset / table verification.
struct DatasetError : Error { using Error::Error; };

// Violated internal invariant; indicates a bug, not bad input.
struct InternalError : Error { using Error::Error; };

}  // namespace qcol

#endif
