#include "qcol/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "qcol/burau.hpp"
#include "qcol/errors.hpp"

namespace qcol {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::ZeroDelta: return "ZeroDelta";
    case Verdict::UnitDelta: return "UnitDelta";
    case Verdict::NonUnitDelta: return "NonUnitDelta";
  }
  return "?";
}

FiniteQuandle::FiniteQuandle(long m, long a) : modulus(m) {
  if (m < 2) throw IndexOutOfRange("finite quandle modulus must be >= 2");
  tval = ((a % m) + m) % m;
  if (std::gcd(tval, m) != 1)
    throw NonInvertibleT("t value must be invertible modulo m");
}

Classification classify(const BraidWord& w) {
  Classification c;
  c.delta = reduced_alexander(w);
  if (c.delta.is_zero())
    c.verdict = Verdict::ZeroDelta;
  else if (c.delta.is_unit())
    c.verdict = Verdict::UnitDelta;
  else
    c.verdict = Verdict::NonUnitDelta;
  return c;
}

std::vector<Laurent> propagate(const BraidWord& w, const std::vector<Laurent>& top) {
  if ((int)top.size() != w.strands)
    throw LengthMismatch("coloring length does not match strand count");
  std::vector<Laurent> v = top;
  const Laurent t = Laurent::t(1), tinv = Laurent::t(-1);
  const Laurent one(1);
  // phi(w) = M(l_1) ... M(l_k), so the last letter acts on the tuple first.
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    int i = std::abs(*it) - 1;
    Laurent a = v[i], b = v[i + 1];
    if (*it > 0) {
      v[i] = b;
      v[i + 1] = t * a + (one - t) * b;
    } else {
      v[i] = tinv * b + (one - tinv) * a;
      v[i + 1] = a;
    }
  }
  return v;
}

bool verify_coloring(const BraidWord& w, const Coloring& c) {
  if (c.strands != w.strands || (int)c.values.size() != w.strands)
    throw LengthMismatch("coloring strand count does not match braid");
  std::vector<Laurent> bottom = propagate(w, c.values);
  for (int i = 0; i < w.strands; ++i) {
    if (c.ring) {
      if (!c.ring->equal(bottom[i], c.values[i])) return false;
    } else {
      if (bottom[i] != c.values[i]) return false;
    }
  }
  return true;
}

namespace {

// Divides out the content so the gcd of nonzero entries is a unit.
void make_primitive(std::vector<Laurent>& v) {
  Laurent g;
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    g = g.is_zero() ? x.unit_normalized() : Laurent::gcd(g, x);
    if (g.is_unit()) return;
  }
  if (g.is_zero() || g.is_unit()) return;
  for (auto& x : v)
    if (!x.is_zero()) x = *Laurent::divide_exact(x, g);
}

}  // namespace

std::vector<std::vector<Laurent>> kernel_basis_zero_delta(const BraidWord& w) {
  Classification cls = classify(w);
  if (cls.verdict != Verdict::ZeroDelta)
    throw WrongVerdict("kernel basis requires a vanishing Alexander polynomial");
  const int n = w.strands;
  Matrix a = burau_unreduced(w) - Matrix::identity(n);
  EchelonResult e = echelonize(a);
  std::vector<bool> is_pivot(n, false);
  for (auto& [r, c] : e.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  if (free_cols.size() < 2)
    throw InternalError("Delta = 0 but kernel has fewer than two free columns");

  std::vector<std::vector<Laurent>> basis;
  basis.emplace_back(n, Laurent(1));  // the all-ones solution
  for (std::size_t i = 0; i + 1 < free_cols.size(); ++i) {
    std::map<int, Laurent> assign{{free_cols[i], Laurent(1)}};
    std::vector<Laurent> v = solve_with_free_vars(e, assign);
    make_primitive(v);
    basis.push_back(std::move(v));
  }
  for (const auto& v : basis) {
    for (const auto& entry : a.apply(v))
      if (!entry.is_zero())
        throw InternalError("kernel basis vector fails (phi(w)-id) x = 0");
  }
  return basis;
}

namespace {

bool solves_mod(const Matrix& a, const std::vector<Laurent>& x, const Laurent& f) {
  for (const auto& r : a.apply(x))
    if (!Laurent::divide_exact(r, f).has_value()) return false;
  return true;
}

bool trivial_mod(const std::vector<Laurent>& x, const Laurent& f) {
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!Laurent::divide_exact(x[i] - x[0], f).has_value()) return false;
  return true;
}

// Seeds the first pivot sharing a factor with f and back-substitutes upward,
// rescaling the tail by the pivot when a division is inexact. Returns the
// vector only if it genuinely solves a x = 0 over Lambda/(f) non-trivially
// (an echelon whose multipliers share factors with f can produce spurious
// solutions, which the matrix check rejects).
std::optional<std::vector<Laurent>> seed_and_substitute(const Matrix& a,
                                                        const EchelonResult& e,
                                                        const Laurent& f) {
  const int n = a.cols();
  int j = -1;
  Laurent gj;
  for (int i = 0; i < e.rank; ++i) {
    Laurent g = Laurent::gcd(e.echelon.at(i, i), f);
    if (!g.is_unit()) { j = i; gj = g; break; }
  }
  if (j < 0) return std::nullopt;
  std::vector<Laurent> x(n);
  x[j] = *Laurent::divide_exact(f, gj);
  for (int i = j - 1; i >= 0; --i) {
    Laurent b;
    for (int k = i + 1; k < n; ++k)
      if (!e.echelon.at(i, k).is_zero() && !x[k].is_zero())
        b -= e.echelon.at(i, k) * x[k];
    if (b.is_zero()) continue;
    const Laurent& p = e.echelon.at(i, i);
    auto q = Laurent::divide_exact(b, p);
    if (q) {
      x[i] = *q;
    } else {
      for (int k = i + 1; k < n; ++k)
        if (!x[k].is_zero()) x[k] = p * x[k];
      x[i] = b;
    }
  }
  if (trivial_mod(x, f) || !solves_mod(a, x, f)) return std::nullopt;
  return x;
}

// A non-trivial solution of a x = 0 over Lambda/(f). Direct route first;
// when multipliers sharing factors with f spoil it, recurse into a proper
// non-unit divisor d of f and scale the result by f/d, which preserves both
// the congruence and non-triviality.
std::optional<std::vector<Laurent>> construct_mod(const Matrix& a, const Laurent& f,
                                                  int depth) {
  EchelonResult e = echelonize(a, f);
  const int n = a.cols();
  if (e.rank != n - 1)
    throw InternalError("rank of phi(w)-id is not n-1 despite Delta != 0");
  for (int i = 0; i < n - 1; ++i)
    if (e.pivots[i] != std::make_pair(i, i))
      throw InternalError("echelon pivots are not the leading diagonal");

  if (auto x = seed_and_substitute(a, e, f)) return x;
  if (depth >= 4) return std::nullopt;

  std::vector<Laurent> divisors;
  auto consider = [&](const Laurent& cand) {
    Laurent d = Laurent::gcd(cand, f);
    if (d.is_unit() || Laurent::equal_up_to_unit(d, f)) return;
    for (const auto& seen : divisors)
      if (Laurent::equal_up_to_unit(seen, d)) return;
    divisors.push_back(d.unit_normalized());
  };
  for (int i = 0; i < e.rank; ++i) consider(e.echelon.at(i, i));
  for (const auto& mult : e.multipliers) consider(mult);
  std::sort(divisors.begin(), divisors.end(),
            [](const Laurent& a_, const Laurent& b_) { return a_.span() < b_.span(); });
  for (const Laurent& d : divisors) {
    if (auto sub = construct_mod(a, d, depth + 1)) {
      Laurent scale = *Laurent::divide_exact(f, d);
      for (auto& xi : *sub) xi = scale * xi;
      if (!trivial_mod(*sub, f) && solves_mod(a, *sub, f)) return sub;
    }
  }
  return std::nullopt;
}

}  // namespace

Coloring construct_coloring(const BraidWord& w, const Laurent& f) {
  Classification cls = classify(w);
  if (cls.verdict != Verdict::NonUnitDelta)
    throw WrongVerdict(std::string("construct_coloring needs NonUnitDelta, got ") +
                       verdict_name(cls.verdict));
  if (f.is_zero() || f.is_unit())
    throw NotADivisor("modulus must be a non-unit divisor of Delta");
  if (!Laurent::divide_exact(cls.delta, f).has_value())
    throw NotADivisor("\"" + f.str() + "\" does not divide Delta = \"" +
                      cls.delta.str() + "\"");

  QuotientCtx ctx(f);
  const int n = w.strands;
  Matrix a = burau_unreduced(w) - Matrix::identity(n);
  auto x = construct_mod(a, ctx.modulus(), 0);
  if (!x) throw InternalError("no non-trivial coloring found for \"" + f.str() + "\"");
  for (auto& xi : *x) xi = ctx.reduce(xi);

  Coloring col{n, std::move(*x), ctx};
  if (ctx.is_trivial_vector(col.values))
    throw InternalError("constructed coloring is trivial");
  if (!verify_coloring(w, col))
    throw InternalError("constructed coloring fails verification");
  return col;
}

ColoringSpaceSummary coloring_space_summary(const BraidWord& w, const Laurent& f,
                                            std::optional<int> multiplicity) {
  if (f.is_zero()) throw ZeroModulus("summary needs a nonzero modulus");
  const int n = w.strands;
  Matrix a = burau_unreduced(w) - Matrix::identity(n);
  EchelonResult e = echelonize(a, f.unit_normalized());
  QuotientRankReport rep = quotient_rank_report(e, f.unit_normalized());
  ColoringSpaceSummary s;
  s.rank_mod_f = rep.rank_mod_f;
  s.generated_by_one = rep.rank_mod_f == n - 2;
  s.echelon_valid = rep.valid;
  if (multiplicity) {
    int k = *multiplicity;
    s.multiplicity_bounds_ok = (n - k - 1 <= rep.rank_mod_f) && (rep.rank_mod_f <= n - 2);
  }
  return s;
}

long long count_colorings_finite(const BraidWord& w, const FiniteQuandle& q,
                                 long long budget) {
  const int n = w.strands;
  const long m = q.modulus;
  double candidates = 1;
  for (int i = 0; i < n; ++i) candidates *= (double)m;
  if (candidates > (double)budget)
    throw BudgetExceeded("m^strands = " + std::to_string(candidates) +
                         " exceeds the enumeration budget");
  long ainv = 1;
  {  // inverse of tval mod m (exists by construction)
    long r0 = m, r1 = q.tval, s0 = 0, s1 = 1;
    while (r1 != 0) {
      long qu = r0 / r1;
      long r2 = r0 - qu * r1; r0 = r1; r1 = r2;
      long s2 = s0 - qu * s1; s0 = s1; s1 = s2;
    }
    ainv = ((s0 % m) + m) % m;
  }
  std::vector<long> tup(n, 0), v(n);
  long long count = 0;
  for (;;) {
    v = tup;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      int i = std::abs(*it) - 1;
      long a = v[i], b = v[i + 1];
      if (*it > 0) {
        v[i] = b;
        v[i + 1] = (q.tval * a + (1 + m - q.tval) % m * b) % m;
      } else {
        v[i] = (ainv * b + (1 + m - ainv) % m * a) % m;
        v[i + 1] = a;
      }
    }
    if (v == tup) ++count;
    int pos = n - 1;
    while (pos >= 0 && ++tup[pos] == m) tup[pos--] = 0;
    if (pos < 0) break;
  }
  return count;
}

}  // namespace qcol
