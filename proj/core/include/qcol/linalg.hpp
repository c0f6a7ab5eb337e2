#ifndef QCOL_LINALG_HPP
#define QCOL_LINALG_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qcol/matrix.hpp"

namespace qcol {

// Row-echelon form of a matrix over Z[t,t^-1], produced with row switching,
// row scaling by nonzero polynomials, and row addition only. Every non-unit
// polynomial a row was multiplied or divided by is recorded in `multipliers`:
// over a quotient ring Lambda/(f) the echelon certifies the same solution set
// as the input exactly when all of them are coprime to f.
struct EchelonResult {
  Matrix echelon;
  int rank = 0;
  std::vector<std::pair<int, int>> pivots;  // (row, col), cols strictly increasing
  std::vector<Laurent> multipliers;
};

// Fraction-limited elimination: each cross-elimination uses the gcd-reduced
// multiplier pair, and the common divisor of every touched row is stripped.
// When `modulus` is given, pivots are chosen to keep multipliers coprime to
// it where possible and row contents are only stripped of their
// modulus-coprime part (so validity over Lambda/(modulus) is preserved).
EchelonResult echelonize(const Matrix& a,
                         const std::optional<Laurent>& modulus = std::nullopt);

// Exact determinant by fraction-free (Bareiss) elimination. Throws NotSquare.
Laurent det_bareiss(const Matrix& a);

struct QuotientRankReport {
  int rank_mod_f = 0;  // pivots whose entry f does not divide
  std::vector<std::pair<int, Laurent>> diagonal_gcds;  // (pivot index, gcd(a_ii, f))
  bool valid = false;  // all recorded multipliers coprime to f
};

// Rank analysis of an echelon over Lambda/(f). Throws ZeroModulus.
QuotientRankReport quotient_rank_report(const EchelonResult& e, const Laurent& f);

// A Lambda-vector x with echelon * x = 0, obtained by assigning the given
// values to free columns (missing free columns get 0) and back-substituting;
// inexact pivot divisions rescale the whole partial solution by the pivot.
// Throws InconsistentAssignment when a pivot column is assigned.
std::vector<Laurent> solve_with_free_vars(const EchelonResult& e,
                                          const std::map<int, Laurent>& assignments);

}  // namespace qcol

#endif
