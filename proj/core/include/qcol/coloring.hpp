#ifndef QCOL_COLORING_HPP
#define QCOL_COLORING_HPP

#include <optional>
#include <vector>

#include "qcol/braid.hpp"
#include "qcol/laurent.hpp"
#include "qcol/linalg.hpp"
#include "qcol/quotient.hpp"

namespace qcol {

enum class Verdict {
  ZeroDelta,     // non-trivial coloring by any non-trivial Alexander quandle
  UnitDelta,     // only trivial colorings by any Alexander quandle
  NonUnitDelta,  // non-trivial coloring over Lambda/(Delta)
};

struct Classification {
  Laurent delta;
  Verdict verdict = Verdict::UnitDelta;
};

const char* verdict_name(Verdict v);

// Assignment of ring elements to the top strands of a braid. An empty ring
// means the values live in Lambda itself (the Delta = 0 case).
struct Coloring {
  int strands = 0;
  std::vector<Laurent> values;
  std::optional<QuotientCtx> ring;
};

// Z_m with the quandle operation a*b = t a + (1-t) b at t = tval;
// gcd(tval, m) must be 1 so that t acts invertibly.
struct FiniteQuandle {
  long modulus = 0;
  long tval = 0;
  FiniteQuandle(long m, long a);
};

Classification classify(const BraidWord& w);

// Pushes top colors through the braid; the result equals burau_unreduced(w)
// applied to the input.
std::vector<Laurent> propagate(const BraidWord& w, const std::vector<Laurent>& top);

// true iff the bottom tuple equals the top tuple in the coloring's ring.
// Throws LengthMismatch when strand counts disagree.
bool verify_coloring(const BraidWord& w, const Coloring& c);

// For Delta = 0: at least two Lambda-independent exact kernel vectors of
// phi(w) - id, the all-ones vector first, the rest with unit entry gcd.
// Throws WrongVerdict otherwise.
std::vector<std::vector<Laurent>> kernel_basis_zero_delta(const BraidWord& w);

// For Delta != 0 and non-unit, and f a non-unit divisor of Delta: a verified
// non-trivial coloring over Lambda/(f), built from the echelon of phi(w)-id
// by zeroing the tail past the first pivot sharing a factor with f, seeding
// that variable with f / gcd(pivot, f), and back-substituting with
// rescale-on-inexact-division. Throws WrongVerdict, NotADivisor,
// InternalError.
Coloring construct_coloring(const BraidWord& w, const Laurent& f);

struct ColoringSpaceSummary {
  int rank_mod_f = 0;
  bool generated_by_one = false;           // rank_mod_f == strands - 2
  std::optional<bool> multiplicity_bounds_ok;  // n-k-1 <= rank <= n-2 when k given
  bool echelon_valid = false;
};

// Rank of phi(w) - id over Lambda/(f) and the derived structure flags;
// multiplicity is the caller-supplied multiplicity of f in Delta when f is
// an irreducible factor. Throws ZeroModulus.
ColoringSpaceSummary coloring_space_summary(const BraidWord& w, const Laurent& f,
                                            std::optional<int> multiplicity = std::nullopt);

// Exact number of colorings of the closure by the finite quandle, counted by
// exhaustive strand propagation over Z_m tuples. Throws BudgetExceeded when
// m^strands exceeds the candidate budget.
long long count_colorings_finite(const BraidWord& w, const FiniteQuandle& q,
                                 long long budget = 10'000'000);

}  // namespace qcol

#endif
