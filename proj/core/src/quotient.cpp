#include "qcol/quotient.hpp"

#include "qcol/errors.hpp"

namespace qcol {

QuotientCtx::QuotientCtx(const Laurent& f) {
  if (f.is_zero()) throw ZeroModulus("quotient modulus must be nonzero");
  if (f.is_unit()) throw InternalError("quotient modulus must not be a unit");
  modulus_ = f.unit_normalized();
}

bool QuotientCtx::equal(const Laurent& g1, const Laurent& g2) const {
  return Laurent::divide_exact(g1 - g2, modulus_).has_value();
}

Laurent QuotientCtx::reduce(const Laurent& g) const {
  if (g.is_zero()) return g;
  const int shift = g.min_exp() < 0 ? g.min_exp() : 0;
  Laurent h = g.shifted(-shift);  // min exponent >= 0
  const Int& lead = modulus_.leading_coeff();
  const int dm = modulus_.max_exp();
  while (!h.is_zero() && h.max_exp() >= dm) {
    Int q = h.leading_coeff() / lead;
    if (q * lead != h.leading_coeff()) break;
    h -= Laurent::term(q, h.max_exp() - dm) * modulus_;
  }
  return h.shifted(shift);
}

bool QuotientCtx::is_trivial_vector(std::span<const Laurent> v) const {
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (!equal(v[i], v[j])) return false;
  return true;
}

}  // namespace qcol
