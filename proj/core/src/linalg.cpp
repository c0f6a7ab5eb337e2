#include "qcol/linalg.hpp"

#include <algorithm>

#include "qcol/errors.hpp"

namespace qcol {

Matrix::Matrix(std::initializer_list<std::initializer_list<Laurent>> rows) {
  rows_ = (int)rows.size();
  cols_ = rows_ ? (int)rows.begin()->size() : 0;
  e_.reserve((std::size_t)rows_ * cols_);
  for (auto& r : rows) {
    if ((int)r.size() != cols_) throw InternalError("ragged matrix initializer");
    for (auto& x : r) e_.push_back(x);
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Laurent(1);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw InternalError("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Laurent& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += aik * o.at(k, j);
      }
    }
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InternalError("matrix shape mismatch");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

std::vector<Laurent> Matrix::apply(const std::vector<Laurent>& v) const {
  if ((int)v.size() != cols_) throw InternalError("matrix-vector shape mismatch");
  std::vector<Laurent> out(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

namespace {

// Larger divisor of d coprime to f: strips shared prime factors repeatedly.
Laurent coprime_part(Laurent d, const Laurent& f) {
  for (;;) {
    Laurent g = Laurent::gcd(d, f);
    if (g.is_unit()) return d;
    d = Laurent::divide_exact(d, g)->unit_normalized();
  }
}

Laurent row_content(const Matrix& m, int r) {
  Laurent g;
  for (int j = 0; j < m.cols(); ++j) {
    const Laurent& x = m.at(r, j);
    if (x.is_zero()) continue;
    g = g.is_zero() ? x.unit_normalized() : Laurent::gcd(g, x);
    if (g.is_unit()) return g;
  }
  return g;
}

// (span, |leading coeff|) ordering used to pick small pivots.
bool smaller_entry(const Laurent& a, const Laurent& b) {
  if (a.span() != b.span()) return a.span() < b.span();
  Int la = a.leading_coeff() < 0 ? Int(-a.leading_coeff()) : a.leading_coeff();
  Int lb = b.leading_coeff() < 0 ? Int(-b.leading_coeff()) : b.leading_coeff();
  return la < lb;
}

}  // namespace

EchelonResult echelonize(const Matrix& a, const std::optional<Laurent>& modulus) {
  EchelonResult res;
  res.echelon = a;
  Matrix& m = res.echelon;
  const int nrows = m.rows(), ncols = m.cols();

  // Strip row contents up front so pivot choice sees reduced entries.
  auto strip_content = [&](int r) {
    Laurent d = row_content(m, r);
    if (d.is_zero() || d.is_unit()) return;
    if (modulus) d = coprime_part(d, *modulus);
    if (d.is_unit()) return;
    for (int j = 0; j < ncols; ++j)
      if (!m.at(r, j).is_zero()) m.at(r, j) = *Laurent::divide_exact(m.at(r, j), d);
    res.multipliers.push_back(d);
  };
  for (int r = 0; r < nrows; ++r) strip_content(r);

  int prow = 0;
  for (int col = 0; col < ncols && prow < nrows; ++col) {
    std::vector<int> cand;
    for (int r = prow; r < nrows; ++r)
      if (!m.at(r, col).is_zero()) cand.push_back(r);
    if (cand.empty()) continue;

    // Pivot choice: fewest multipliers sharing a factor with the modulus,
    // then smallest entry.
    int best = cand[0];
    if (cand.size() > 1) {
      auto badness = [&](int r) {
        if (!modulus) return 0;
        int bad = 0;
        for (int r2 : cand) {
          if (r2 == r) continue;
          Laurent g = Laurent::gcd(m.at(r, col), m.at(r2, col));
          Laurent mult = *Laurent::divide_exact(m.at(r, col), g);
          if (!Laurent::coprime(mult, *modulus)) ++bad;
        }
        return bad;
      };
      int best_bad = badness(best);
      for (std::size_t i = 1; i < cand.size(); ++i) {
        int r = cand[i];
        int b = badness(r);
        if (b < best_bad ||
            (b == best_bad && smaller_entry(m.at(r, col), m.at(best, col)))) {
          best = r;
          best_bad = b;
        }
      }
    }
    if (best != prow)
      for (int j = 0; j < ncols; ++j) std::swap(m.at(prow, j), m.at(best, j));

    for (int r = prow + 1; r < nrows; ++r) {
      if (m.at(r, col).is_zero()) continue;
      Laurent g = Laurent::gcd(m.at(prow, col), m.at(r, col));
      Laurent mult = *Laurent::divide_exact(m.at(prow, col), g);
      Laurent sub = *Laurent::divide_exact(m.at(r, col), g);
      if (!mult.is_unit()) res.multipliers.push_back(mult);
      for (int j = 0; j < ncols; ++j)
        m.at(r, j) = mult * m.at(r, j) - sub * m.at(prow, j);
      strip_content(r);
    }
    res.pivots.emplace_back(prow, col);
    ++prow;
  }
  res.rank = (int)res.pivots.size();
  return res;
}

Laurent det_bareiss(const Matrix& a) {
  if (a.rows() != a.cols()) throw NotSquare("determinant of non-square matrix");
  const int n = a.rows();
  if (n == 0) return Laurent(1);
  Matrix m = a;
  Laurent prev(1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k).is_zero()) {
      int swap_row = -1;
      for (int r = k + 1; r < n; ++r)
        if (!m.at(r, k).is_zero()) { swap_row = r; break; }
      if (swap_row < 0) return Laurent();  // singular
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(swap_row, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Laurent num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        auto q = Laurent::divide_exact(num, prev);
        if (!q) throw InternalError("Bareiss division not exact");
        m.at(i, j) = *q;
      }
      m.at(i, k) = Laurent();
    }
    prev = m.at(k, k);
  }
  Laurent d = m.at(n - 1, n - 1);
  return negate ? -d : d;
}

QuotientRankReport quotient_rank_report(const EchelonResult& e, const Laurent& f) {
  if (f.is_zero()) throw ZeroModulus("quotient rank needs a nonzero modulus");
  QuotientRankReport rep;
  int idx = 0;
  for (auto& [r, c] : e.pivots) {
    const Laurent& p = e.echelon.at(r, c);
    rep.diagonal_gcds.emplace_back(idx, Laurent::gcd(p, f));
    if (!Laurent::divide_exact(p, f).has_value()) ++rep.rank_mod_f;
    ++idx;
  }
  rep.valid = true;
  for (const auto& mlt : e.multipliers)
    if (!Laurent::coprime(mlt, f)) { rep.valid = false; break; }
  return rep;
}

std::vector<Laurent> solve_with_free_vars(const EchelonResult& e,
                                          const std::map<int, Laurent>& assignments) {
  const Matrix& m = e.echelon;
  const int ncols = m.cols();
  std::vector<bool> is_pivot(ncols, false);
  for (auto& [r, c] : e.pivots) is_pivot[c] = true;
  for (auto& [c, v] : assignments) {
    if (c < 0 || c >= ncols)
      throw InconsistentAssignment("free column index out of range");
    if (is_pivot[c])
      throw InconsistentAssignment("column " + std::to_string(c) + " is a pivot column");
  }
  std::vector<Laurent> x(ncols);
  for (auto& [c, v] : assignments) x[c] = v;
  for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
    auto [r, c] = *it;
    Laurent b;
    for (int j = c + 1; j < ncols; ++j)
      if (!m.at(r, j).is_zero() && !x[j].is_zero()) b -= m.at(r, j) * x[j];
    if (b.is_zero()) { x[c] = Laurent(); continue; }
    const Laurent& p = m.at(r, c);
    auto q = Laurent::divide_exact(b, p);
    if (q) {
      x[c] = *q;
    } else {
      // rescale the whole partial solution; solutions form a Lambda-module
      for (int j = 0; j < ncols; ++j)
        if (j != c && !x[j].is_zero()) x[j] = p * x[j];
      x[c] = b;
    }
  }
  return x;
}

}  // namespace qcol
