#include "qcol/intsolve.hpp"

#include <algorithm>

namespace qcol {

std::optional<std::vector<Int>> solve_integer_linear(
    const std::vector<std::vector<Int>>& a, const std::vector<Int>& b) {
  const int m = (int)a.size();
  const int k = m ? (int)a[0].size() : 0;
  std::vector<std::vector<Int>> h = a;
  // U starts as the identity; columns of H are unimodular combinations of
  // columns of A, with H = A * U throughout.
  std::vector<std::vector<Int>> u(k, std::vector<Int>(k, 0));
  for (int i = 0; i < k; ++i) u[i][i] = 1;

  std::vector<std::pair<int, int>> pivots;
  int pc = 0;
  for (int r = 0; r < m && pc < k; ++r) {
    std::vector<int> cols;
    for (int c = pc; c < k; ++c)
      if (h[r][c] != 0) cols.push_back(c);
    if (cols.empty()) continue;
    int c0 = cols[0];
    for (std::size_t idx = 1; idx < cols.size(); ++idx) {
      int c = cols[idx];
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                 h[r][c0].get_mpz_t(), h[r][c].get_mpz_t());
      Int aa = h[r][c0] / g, bb = h[r][c] / g;
      for (int i = 0; i < m; ++i) {
        Int x = h[i][c0], y = h[i][c];
        h[i][c0] = s * x + t * y;
        h[i][c] = -bb * x + aa * y;
      }
      for (int i = 0; i < k; ++i) {
        Int x = u[i][c0], y = u[i][c];
        u[i][c0] = s * x + t * y;
        u[i][c] = -bb * x + aa * y;
      }
    }
    if (c0 != pc) {
      for (int i = 0; i < m; ++i) std::swap(h[i][c0], h[i][pc]);
      for (int i = 0; i < k; ++i) std::swap(u[i][c0], u[i][pc]);
    }
    pivots.emplace_back(r, pc);
    ++pc;
  }

  // Forward substitution: pivot variables are forced; columns past the
  // pivots never appear in pivot rows, so zero works for them.
  std::vector<Int> v(k, 0);
  for (auto& [r, c] : pivots) {
    Int resid = b[r];
    for (auto& [r2, c2] : pivots)
      if (c2 < c) resid -= h[r][c2] * v[c2];
    if (resid % h[r][c] != 0) return std::nullopt;
    v[c] = resid / h[r][c];
  }
  std::vector<bool> pivot_row(m, false);
  for (auto& [r, c] : pivots) pivot_row[r] = true;
  for (int r = 0; r < m; ++r) {
    if (pivot_row[r]) continue;
    Int acc = 0;
    for (int c = 0; c < k; ++c) acc += h[r][c] * v[c];
    if (acc != b[r]) return std::nullopt;
  }
  std::vector<Int> out(k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) out[i] += u[i][j] * v[j];
  return out;
}

}  // namespace qcol
