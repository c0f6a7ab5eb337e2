#ifndef QCOL_QUOTIENT_HPP
#define QCOL_QUOTIENT_HPP

#include <span>

#include "qcol/laurent.hpp"

namespace qcol {

// The ring Lambda/(f(t)) for a nonzero non-unit f, with equality decided by
// exact divisibility in Lambda. The modulus need not be monic, so canonical
// representatives are best-effort; equal() is the authoritative equality.
class QuotientCtx {
 public:
  // Normalizes the modulus to min exponent 0 and positive leading
  // coefficient. Throws ZeroModulus for 0 and InternalError for units.
  explicit QuotientCtx(const Laurent& f);

  const Laurent& modulus() const { return modulus_; }

  // true iff modulus divides g1 - g2.
  bool equal(const Laurent& g1, const Laurent& g2) const;

  // A representative congruent to g: the nonnegative-exponent part is
  // top-reduced while the leading coefficient of the modulus divides the
  // current one; negative minimum exponents are handled by reducing the
  // shifted polynomial and shifting back. Span < span(modulus) is guaranteed
  // when the modulus has leading coefficient +-1.
  Laurent reduce(const Laurent& g) const;

  // true iff all pairwise differences are congruent to 0.
  bool is_trivial_vector(std::span<const Laurent> v) const;

  bool operator==(const QuotientCtx& o) const { return modulus_ == o.modulus_; }

 private:
  Laurent modulus_;
};

}  // namespace qcol

#endif
