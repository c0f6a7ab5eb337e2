#include "qcol/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "qcol/errors.hpp"

namespace qcol {

Laurent Laurent::term(const Int& c, int e) {
  Laurent p;
  if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

Laurent Laurent::from_terms(std::vector<Term> ts) {
  std::map<int, Int> acc;
  for (auto& [e, c] : ts) acc[e] += c;
  Laurent p;
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

bool Laurent::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool Laurent::is_unit() const {
  if (terms_.size() != 1) return false;
  const Int& c = terms_[0].second;
  return c == 1 || c == -1;
}

int Laurent::min_exp() const {
  if (is_zero()) throw InternalError("min_exp of zero polynomial");
  return terms_.front().first;
}

int Laurent::max_exp() const {
  if (is_zero()) throw InternalError("max_exp of zero polynomial");
  return terms_.back().first;
}

Int Laurent::coeff(int e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Int(0);
}

const Int& Laurent::leading_coeff() const {
  if (is_zero()) throw InternalError("leading_coeff of zero polynomial");
  return terms_.back().second;
}

Int Laurent::content() const {
  Int g = 0;
  for (auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Laurent Laurent::operator-() const {
  Laurent p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent p;
  p.terms_.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      p.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      p.terms_.push_back(*b++);
    } else {
      Int c = a->second + b->second;
      if (c != 0) p.terms_.emplace_back(a->first, c);
      ++a, ++b;
    }
  }
  return p;
}

Laurent Laurent::operator*(const Laurent& o) const {
  if (is_zero() || o.is_zero()) return Laurent();
  std::map<int, Int> acc;
  for (auto& [ea, ca] : terms_)
    for (auto& [eb, cb] : o.terms_) acc[ea + eb] += ca * cb;
  Laurent p;
  for (auto& [e, c] : acc)
    if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

Laurent Laurent::shifted(int k) const {
  Laurent p = *this;
  for (auto& [e, c] : p.terms_) e += k;
  return p;
}

Laurent Laurent::scaled(const Int& c) const {
  if (c == 0) return Laurent();
  Laurent p = *this;
  for (auto& [e, cc] : p.terms_) cc *= c;
  return p;
}

Laurent Laurent::unit_normalized() const {
  if (is_zero()) return Laurent();
  Laurent p = shifted(-min_exp());
  if (p.leading_coeff() < 0) p = -p;
  return p;
}

bool Laurent::equal_up_to_unit(const Laurent& a, const Laurent& b) {
  return a.unit_normalized() == b.unit_normalized();
}

std::optional<Laurent> Laurent::divide_exact(const Laurent& g, const Laurent& f) {
  if (f.is_zero()) throw ZeroDivisor("division by the zero polynomial");
  if (g.is_zero()) return Laurent();
  const int shift = g.min_exp() - f.min_exp();
  Laurent rem = g.shifted(-g.min_exp());
  Laurent fs = f.shifted(-f.min_exp());
  Laurent quot;
  while (!rem.is_zero()) {
    if (rem.max_exp() < fs.max_exp()) return std::nullopt;
    Int qc = rem.leading_coeff() / fs.leading_coeff();
    if (qc * fs.leading_coeff() != rem.leading_coeff()) return std::nullopt;
    Laurent mono = term(qc, rem.max_exp() - fs.max_exp());
    quot += mono;
    rem -= mono * fs;
  }
  return quot.shifted(shift);
}

namespace {

// Pseudo-remainder of u by v over Z[t] (both with min exponent 0, v nonzero):
// lc(v)^k * u reduced mod v until deg < deg v.
Laurent pseudo_rem(Laurent u, const Laurent& v) {
  const Int& lv = v.leading_coeff();
  const int dv = v.max_exp();
  while (!u.is_zero() && u.max_exp() >= dv) {
    Laurent mono = Laurent::term(u.leading_coeff(), u.max_exp() - dv);
    u = u.scaled(lv) - mono * v;
  }
  return u;
}

// Content- and unit-free part: min exponent 0, coefficient gcd 1, positive
// leading coefficient. Intermediate Euclid steps may differ from the true
// remainder by units of Z[t,t^-1], which is harmless for gcd purposes.
Laurent lambda_primitive(const Laurent& p) {
  if (p.is_zero()) return Laurent();
  Laurent q = p.unit_normalized();
  Int c = q.content();
  if (c > 1) {
    auto d = Laurent::divide_exact(q, Laurent(c));
    q = *d;
  }
  return q;
}

}  // namespace

Laurent Laurent::gcd(const Laurent& a, const Laurent& b) {
  if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0) is undefined");
  if (a.is_zero()) return b.unit_normalized();
  if (b.is_zero()) return a.unit_normalized();
  Int cg;
  mpz_gcd(cg.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  Laurent u = lambda_primitive(a), v = lambda_primitive(b);
  if (u.max_exp() < v.max_exp()) std::swap(u, v);
  while (!v.is_zero()) {
    Laurent r = pseudo_rem(u, v);
    u = v;
    v = lambda_primitive(r);
  }
  return u.scaled(cg);  // u is primitive with positive lead, min exp 0
}

bool Laurent::coprime(const Laurent& a, const Laurent& f) {
  return gcd(a, f).is_unit();
}

long Laurent::eval_mod(long tval, long m) const {
  if (m <= 0) throw NonInvertibleT("modulus must be positive");
  Int mm(m), base(tval), tinv;
  if (mpz_invert(tinv.get_mpz_t(), base.get_mpz_t(), mm.get_mpz_t()) == 0)
    throw NonInvertibleT("t value not invertible modulo m");
  Int acc = 0;
  for (auto& [e, c] : terms_) {
    Int p;
    const Int& b = e >= 0 ? base : tinv;
    mpz_powm_ui(p.get_mpz_t(), b.get_mpz_t(), (unsigned long)std::abs((long)e),
                mm.get_mpz_t());
    acc = (acc + c * p) % mm;
  }
  acc = ((acc % mm) + mm) % mm;
  return acc.get_si();
}

std::string Laurent::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Int ac = c < 0 ? Int(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (e == 0) {
      out << ac.get_str();
    } else {
      if (ac != 1) out << ac.get_str() << "*";
      out << "t";
      if (e != 1) out << "^" << e;
    }
  }
  return out.str();
}

namespace {

struct Scanner {
  const std::string& s;
  std::size_t i = 0;
  void skip_ws() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
  bool done() { skip_ws(); return i >= s.size(); }
  char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
  char take() { skip_ws(); return s[i++]; }
  [[noreturn]] void fail(const std::string& why) {
    throw SyntaxError("polynomial syntax error at position " + std::to_string(i) +
                      ": " + why + " in \"" + s + "\"");
  }
  Int integer() {
    skip_ws();
    std::string digits;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
    if (digits.empty()) fail("expected digits");
    return Int(digits);
  }
  long signed_int() {
    skip_ws();
    long sign = 1;
    if (peek() == '-') { take(); sign = -1; }
    else if (peek() == '+') { take(); }
    skip_ws();
    std::string digits;
    while (i < s.size() && std::isdigit((unsigned char)s[i])) digits += s[i++];
    if (digits.empty()) fail("expected exponent digits");
    return sign * std::stol(digits);
  }
};

}  // namespace

Laurent Laurent::parse(const std::string& text) {
  Scanner sc{text};
  std::vector<Term> ts;
  if (sc.done()) throw SyntaxError("empty polynomial text");
  bool first = true;
  while (!sc.done()) {
    Int sign = 1;
    char c = sc.peek();
    if (c == '+' || c == '-') {
      sc.take();
      if (c == '-') sign = -1;
    } else if (!first) {
      sc.fail("expected '+' or '-' between terms");
    }
    first = false;
    Int coef = 1;
    bool have_coef = false;
    if (std::isdigit((unsigned char)sc.peek())) {
      coef = sc.integer();
      have_coef = true;
    }
    int exp = 0;
    bool have_t = false;
    if (sc.peek() == '*') {
      sc.take();
      if (sc.peek() != 't') sc.fail("expected 't' after '*'");
    }
    if (sc.peek() == 't') {
      sc.take();
      have_t = true;
      exp = 1;
      if (sc.peek() == '^') {
        sc.take();
        bool braced = sc.peek() == '{';
        if (braced) sc.take();
        exp = (int)sc.signed_int();
        if (braced) {
          if (sc.peek() != '}') sc.fail("expected '}'");
          sc.take();
        }
      }
    }
    if (!have_coef && !have_t) sc.fail("expected a term");
    ts.emplace_back(exp, sign * coef);
  }
  return from_terms(std::move(ts));
}

}  // namespace qcol
