#pragma once

/**
 * @file exact_arith.hpp
 * @brief Arbitrary-precision rationals, p-adic valuations and the Weil height
 *        of rationals and of affine/projective tuples of rationals.
 *
 * Heights are natural logarithms carried as doubles. Every height is the log
 * of an exact positive integer or a sum of such logs, so callers needing an
 * exact comparison work on the integers themselves.
 */

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weilheight/errors.hpp"
#include "weilheight/factor.hpp"

namespace weilheight {

using Integer = mpz_class;

/// Height values: natural-log scale, nonnegative and finite.
using Height = double;

/// Additive slack for inequalities between floating-point heights.
inline double slack(double bound) { return 1e-9 * (1.0 + std::fabs(bound)); }

/// `measured <= bound` up to the floating-point slack.
inline bool leq_with_slack(double measured, double bound) {
  return measured <= bound + slack(bound);
}

/// Exact rational in lowest terms with a positive denominator; zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw DomainError("rational with zero denominator");
    q_.get_num() = num;
    q_.get_den() = den;
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  const Integer& num() const { return q_.get_num(); }
  const Integer& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    return Rational(den(), num());
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const {
    return is_integer() ? num().get_str() : num().get_str() + "/" + den().get_str();
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class q_{0};
};

/// Parses "p/q" or "p" (ASCII digits, optional leading '-').
inline Rational parse_rational(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && trimmed.front() == ' ') trimmed.remove_prefix(1);
  while (!trimmed.empty() && trimmed.back() == ' ') trimmed.remove_suffix(1);
  const std::string token(trimmed);
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view body = trimmed;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_part = body.substr(0, slash);
  std::string_view den_part = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num_part) || !digits(den_part)) throw ParseError("malformed rational", token);
  Integer num(std::string(num_part), 10);
  Integer den(std::string(den_part), 10);
  if (sgn(den) == 0) throw ParseError("rational with zero denominator", token);
  if (negative) num = -num;
  return Rational(num, den);
}

/// Natural log of |n|, accurate for integers of any size. n must be nonzero.
inline double log_abs(const Integer& n) {
  if (sgn(n) == 0) throw DomainError("log of zero");
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, n.get_mpz_t());
  return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::numbers::ln2;
}

inline double log_abs(const Rational& x) { return log_abs(x.num()) - log_abs(x.den()); }

/// h(p/q) = log max{|p|, q}.
inline Height height_rational(const Rational& x) {
  Integer m = std::max(Integer(abs(x.num())), x.den());
  return log_abs(m);
}

/// Exponent of p in x. Throws for x = 0 or non-prime p.
inline long vp(const Rational& x, const Integer& p) {
  if (x.is_zero()) throw DomainError("valuation of zero");
  if (!is_prime(p)) throw DomainError("valuation at a non-prime " + p.get_str());
  Integer rest;
  long up = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.num().get_mpz_t(), p.get_mpz_t()));
  long down = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.den().get_mpz_t(), p.get_mpz_t()));
  return up - down;
}

/// Exponent of p in the nonzero integer n (p assumed prime).
inline unsigned long vp_integer(const Integer& n, const Integer& p) {
  if (sgn(n) == 0) throw DomainError("valuation of zero");
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

/// Affine height: sum over the places of Q of log max{1, max_i |x_i|_v}.
/// Computed place by place: the archimedean term, then one term per prime
/// dividing some denominator.
inline Height height_affine_tuple(std::span<const Rational> xs) {
  if (xs.empty()) throw DomainError("affine height of an empty tuple");

  Rational largest(0L);
  for (const auto& x : xs) largest = std::max(largest, x.abs());
  Height total = largest > Rational(1L) ? log_abs(largest) : 0.0;

  std::vector<Integer> primes;
  for (const auto& x : xs) {
    if (x.den() == 1) continue;
    for (auto& p : prime_divisors(x.den())) primes.push_back(p);
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  for (const auto& p : primes) {
    // max_i (-v_p(x_i)), attained on a denominator divisible by p, so positive
    unsigned long worst = 0;
    for (const auto& x : xs) {
      if (x.den() == 1) continue;
      worst = std::max(worst, vp_integer(x.den(), p));
    }
    total += static_cast<double>(worst) * log_abs(p);
  }
  return total;
}

inline Height height_affine_tuple(std::initializer_list<Rational> xs) {
  return height_affine_tuple(std::span<const Rational>(xs.begin(), xs.size()));
}

/// Scales a rational tuple (not all zero) to a coprime integer tuple.
inline std::vector<Integer> primitive_integer_tuple(std::span<const Rational> xs) {
  Integer common_den = 1;
  for (const auto& x : xs) common_den = lcm(common_den, x.den());
  std::vector<Integer> ints;
  ints.reserve(xs.size());
  Integer g = 0;
  for (const auto& x : xs) {
    Integer v = x.num() * (common_den / x.den());
    g = gcd(g, v);
    ints.push_back(std::move(v));
  }
  if (sgn(g) == 0) throw DomainError("degenerate projective point");
  for (auto& v : ints) v /= g;
  return ints;
}

/// Projective height of (x_0 : ... : x_n); invariant under scaling.
inline Height height_projective_tuple(std::span<const Rational> xs) {
  if (xs.empty()) throw DomainError("degenerate projective point");
  auto ints = primitive_integer_tuple(xs);
  Integer largest = 0;
  for (const auto& v : ints) largest = std::max(largest, Integer(abs(v)));
  return log_abs(largest);
}

inline Height height_projective_tuple(std::initializer_list<Rational> xs) {
  return height_projective_tuple(std::span<const Rational>(xs.begin(), xs.size()));
}

/// D! as an exact integer.
inline Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

/// Upper bound on log(n!): exact for n <= 2000, Stirling with the 1/(12n)
/// remainder term (rounded up one ulp) beyond.
inline double log_factorial(unsigned long n) {
  constexpr unsigned long kExactLimit = 2000;
  if (n < 2) return 0.0;
  if (n <= kExactLimit) return log_abs(factorial(n));
  const double x = static_cast<double>(n);
  double v = x * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi * x) + 1.0 / (12.0 * x);
  return std::nextafter(v, HUGE_VAL);
}

}  // namespace weilheight
