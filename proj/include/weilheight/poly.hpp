#pragma once

// Dense univariate polynomials over Q and their per-place magnitudes.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "weilheight/exact_arith.hpp"

namespace weilheight {

/// Coefficient i multiplies X^i. No trailing zero coefficients; the zero
/// polynomial has an empty coefficient list and degree -1.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  DensePoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

  static DensePoly from_integers(const std::vector<Integer>& coeffs) {
    std::vector<Rational> c;
    c.reserve(coeffs.size());
    for (const auto& v : coeffs) c.emplace_back(v);
    return DensePoly(std::move(c));
  }

  static DensePoly monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return DensePoly(std::move(v));
  }

  /// X - root
  static DensePoly linear_root(const Rational& root) { return DensePoly({-root, Rational(1L)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  /// Coefficient of X^i, zero beyond the degree.
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0L); }
  const Rational& leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  bool is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_integer(); });
  }

  /// Coefficients as integers; throws if one is not integral.
  std::vector<Integer> integer_coeffs() const {
    std::vector<Integer> out;
    out.reserve(c_.size());
    for (const auto& r : c_) {
      if (!r.is_integer()) throw DomainError("non-integer coefficient " + r.to_string());
      out.push_back(r.num());
    }
    return out;
  }

  /// Horner evaluation.
  Rational operator()(const Rational& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x.raw() + it->raw();
    return Rational(std::move(acc));
  }

  /// Evaluation at an integer point of an integer polynomial, exactly in Z.
  static Integer eval_integer(const std::vector<Integer>& coeffs, const Integer& x) {
    Integer acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  DensePoly operator-() const {
    DensePoly out = *this;
    for (auto& r : out.c_) r = -r;
    return out;
  }
  DensePoly& operator+=(const DensePoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  DensePoly& operator-=(const DensePoly& o) { return *this += -o; }
  DensePoly& operator*=(const Rational& s) {
    if (s.is_zero()) {
      c_.clear();
      return *this;
    }
    for (auto& r : c_) r *= s;
    return *this;
  }
  friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
  friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
  friend DensePoly operator*(DensePoly a, const Rational& s) { return a *= s; }
  friend DensePoly operator*(const Rational& s, DensePoly a) { return a *= s; }
  friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpq_class> acc(a.c_.size() + b.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] += a.c_[i].raw() * b.c_[j].raw();
    }
    std::vector<Rational> out;
    out.reserve(acc.size());
    for (auto& q : acc) out.emplace_back(std::move(q));
    return DensePoly(std::move(out));
  }
  DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

  friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }

  /// Comma-separated coefficients, lowest degree first; "0" for the zero polynomial.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ',';
      out += c_[i].to_string();
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {DensePoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = b.leading().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] * inv_lead;
    quot[static_cast<std::size_t>(i - db)] = factor;
    if (factor.is_zero()) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
  }
  return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
}

/// a / b where b is known to divide a.
inline DensePoly exact_quotient(const DensePoly& a, const DensePoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

/// Least common denominator of the coefficients (1 for the zero polynomial).
inline Integer coefficient_lcm_denominator(const DensePoly& p) {
  Integer l = 1;
  for (const auto& c : p.coeffs()) l = lcm(l, c.den());
  return l;
}

/// h(P): affine height of the coefficient tuple; 0 for the zero polynomial.
inline Height poly_height(const DensePoly& p) {
  if (p.is_zero()) return 0.0;
  return height_affine_tuple(std::span<const Rational>(p.coeffs()));
}

/// Archimedean norm max_i |a_i| of an integer polynomial.
inline Integer poly_inf_norm(const DensePoly& p) {
  Integer m = 0;
  for (const auto& a : p.integer_coeffs()) m = std::max(m, Integer(abs(a)));
  return m;
}

/// v_p(P) = min over nonzero coefficients of v_p(a_i).
inline long poly_vp(const DensePoly& p, const Integer& prime) {
  if (p.is_zero()) throw DomainError("valuation of the zero polynomial");
  bool first = true;
  long best = 0;
  for (const auto& a : p.coeffs()) {
    if (a.is_zero()) continue;
    long v = vp(a, prime);
    if (first || v < best) best = v;
    first = false;
  }
  return best;
}

/// prod_i (X - x_i)
inline DensePoly product_of_linears(const std::vector<Rational>& roots) {
  DensePoly out{Rational(1L)};
  for (const auto& r : roots) out *= DensePoly::linear_root(r);
  return out;
}

}  // namespace weilheight
