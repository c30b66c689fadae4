#pragma once

// Rational fractions F = P/Q over Q in canonical form: P, Q in Z[X] coprime,
// joint integer content 1, positive leading coefficient of Q.

#include <string>
#include <utility>

#include "weilheight/poly.hpp"
#include "weilheight/subresultant.hpp"

namespace weilheight {

/// Evaluation hit a zero of the denominator.
class PoleError : public DomainError {
 public:
  explicit PoleError(Rational at) : DomainError("pole at x = " + at.to_string()), at_(std::move(at)) {}
  const Rational& at() const noexcept { return at_; }

 private:
  Rational at_;
};

class RationalFraction;
RationalFraction canonicalize_fraction(const DensePoly& p, const DensePoly& q);

class RationalFraction {
 public:
  /// The zero fraction 0/1.
  RationalFraction() : den_{Rational(1L)} {}

  const DensePoly& num() const { return num_; }
  const DensePoly& den() const { return den_; }

  /// deg F = max(deg num, deg den) of the canonical form (0 for the zero fraction).
  int degree() const { return std::max({num_.degree(), den_.degree(), 0}); }

  bool is_polynomial() const { return den_.degree() == 0; }

  friend bool operator==(const RationalFraction& a, const RationalFraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// "num | den" in the polynomial text format.
  std::string to_string() const { return num_.to_string() + " | " + den_.to_string(); }

 private:
  friend RationalFraction canonicalize_fraction(const DensePoly&, const DensePoly&);
  RationalFraction(DensePoly n, DensePoly d) : num_(std::move(n)), den_(std::move(d)) {}

  DensePoly num_;
  DensePoly den_;
};

inline RationalFraction canonicalize_fraction(const DensePoly& p, const DensePoly& q) {
  if (q.is_zero()) throw DomainError("fraction with zero denominator");
  if (p.is_zero()) return RationalFraction{};

  const DensePoly g = prs_gcd(p, q);
  DensePoly n = g.degree() > 0 ? exact_quotient(p, g) : p;
  DensePoly d = g.degree() > 0 ? exact_quotient(q, g) : q;

  Integer common = lcm(coefficient_lcm_denominator(n), coefficient_lcm_denominator(d));
  n *= Rational(common);
  d *= Rational(common);

  Integer content = 0;
  for (const auto& c : n.coeffs()) content = gcd(content, c.num());
  for (const auto& c : d.coeffs()) content = gcd(content, c.num());
  if (d.leading().sign() < 0) content = -content;
  const Rational inv(Integer(1), content);
  return RationalFraction(n * inv, d * inv);
}

/// Canonical fraction for a polynomial.
inline RationalFraction as_fraction(const DensePoly& p) { return canonicalize_fraction(p, DensePoly{Rational(1L)}); }

/// h(F): log of the largest absolute coefficient of the canonical num and den.
inline Height fraction_height(const RationalFraction& f) {
  Integer m = 1;
  for (const auto* poly : {&f.num(), &f.den()}) {
    for (const auto& c : poly->coeffs()) m = std::max(m, Integer(abs(c.num())));
  }
  return log_abs(m);
}

inline Rational evaluate(const RationalFraction& f, const Rational& x) {
  Rational d = f.den()(x);
  if (d.is_zero()) throw PoleError(x);
  return f.num()(x) / d;
}

inline bool is_pole(const RationalFraction& f, const Rational& x) { return f.den()(x).is_zero(); }

}  // namespace weilheight
