#ifndef QCOL_LAURENT_HPP
#define QCOL_LAURENT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcol {

using Int = mpz_class;

// Element of the Laurent polynomial ring Z[t, t^-1] with exact integer
// coefficients. Terms are kept sorted by exponent with no zero coefficients,
// so equal ring elements compare equal as values.
class Laurent {
 public:
  using Term = std::pair<int, Int>;  // (exponent, coefficient)

  Laurent() = default;                       // the zero polynomial
  explicit Laurent(long c) { if (c != 0) terms_.emplace_back(0, Int(c)); }
  explicit Laurent(const Int& c) { if (c != 0) terms_.emplace_back(0, c); }

  // c * t^e
  static Laurent term(const Int& c, int e);
  static Laurent t(int e = 1) { return term(1, e); }

  // Builds the canonical form: duplicate exponents summed, zeros dropped.
  static Laurent from_terms(std::vector<Term> ts);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  // true iff +-t^k.
  bool is_unit() const;

  // Exponent range; only defined for nonzero polynomials.
  int min_exp() const;
  int max_exp() const;
  int span() const { return max_exp() - min_exp(); }

  Int coeff(int e) const;
  const Int& leading_coeff() const;   // coefficient at max_exp
  // Positive gcd of all coefficients; 0 for the zero polynomial.
  Int content() const;

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  Laurent operator-() const;
  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const { return *this + (-o); }
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }

  Laurent shifted(int k) const;              // * t^k
  Laurent scaled(const Int& c) const;        // * c

  // Canonical representative up to units: min exponent 0, positive leading
  // coefficient. Zero maps to zero.
  Laurent unit_normalized() const;
  // a ~ b up to multiplication by +-t^k.
  static bool equal_up_to_unit(const Laurent& a, const Laurent& b);

  // Exact division in Z[t,t^-1]: returns h with g = f*h, or nullopt when f
  // does not divide g. Throws ZeroDivisor when f is zero.
  static std::optional<Laurent> divide_exact(const Laurent& g, const Laurent& f);

  // A gcd in the UFD Z[t,t^-1], normalized to min exponent 0 and positive
  // leading coefficient. Primitive-part Euclid over Z[t] plus integer content
  // gcd. Throws BothZero when both arguments vanish.
  static Laurent gcd(const Laurent& a, const Laurent& b);
  static bool coprime(const Laurent& a, const Laurent& f);

  // a(tval) mod m, with negative exponents evaluated through the inverse of
  // tval mod m. Throws NonInvertibleT when gcd(tval, m) != 1.
  long eval_mod(long tval, long m) const;

  // Text form, descending exponents: "3*t^2 - 5*t + 3", "t^-1 + 1", "0".
  std::string str() const;
  // Accepts the printed form plus arbitrary whitespace, optional '*', and
  // optional braces around exponents. Throws SyntaxError.
  static Laurent parse(const std::string& text);

 private:
  std::vector<Term> terms_;
};

inline Laurent operator*(const Int& c, const Laurent& p) { return p.scaled(c); }

}  // namespace qcol

#endif
