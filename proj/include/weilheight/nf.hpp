#pragma once

/**
 * @file nf.hpp
 * @brief Real quadratic fields Q(sqrt m): norms, the norm-based height proxy
 *        hmod, Weil heights of elements, fundamental units, and reduction of
 *        algebraic integers by units.
 *
 * Embeddings are sigma_1(a + b sqrt m) = a + b sqrt m and
 * sigma_2(a + b sqrt m) = a - b sqrt m. Embedding logarithms are evaluated in
 * double precision without cancellation: the embedding where a and b sqrt m
 * share a sign is computed directly and the other one through the exact norm.
 */

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weilheight/exact_arith.hpp"
#include "weilheight/poly.hpp"

namespace weilheight {

class QuadField {
 public:
  explicit QuadField(long m) : m_(m) {
    if (m < 2) throw DomainError("real quadratic field needs m >= 2");
    for (long p = 2; p * p <= m; ++p) {
      if (m % (p * p) == 0) throw DomainError("m = " + std::to_string(m) + " is not squarefree");
    }
  }
  long m() const { return m_; }
  friend bool operator==(const QuadField&, const QuadField&) = default;

 private:
  long m_;
};

/// a + b sqrt(m)
class QuadElement {
 public:
  QuadElement(QuadField field, Rational a, Rational b = Rational(0L))
      : field_(field), a_(std::move(a)), b_(std::move(b)) {}

  const QuadField& field() const { return field_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  QuadElement conjugate() const { return {field_, a_, -b_}; }

  /// a^2 - m b^2
  Rational norm() const { return a_ * a_ - Rational(field_.m()) * b_ * b_; }
  Rational trace() const { return Rational(2L) * a_; }

  /// Root of a monic integer polynomial: trace and norm are integers.
  bool is_algebraic_integer() const { return trace().is_integer() && norm().is_integer(); }

  QuadElement inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    const Rational n = norm();
    return {field_, a_ / n, -b_ / n};
  }

  QuadElement pow(long e) const {
    QuadElement base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    QuadElement out(field_, Rational(1L));
    while (k > 0) {
      if (k & 1) out = out * base;
      base = base * base;
      k >>= 1;
    }
    return out;
  }

  friend QuadElement operator+(const QuadElement& x, const QuadElement& y) {
    check_same(x, y);
    return {x.field_, x.a_ + y.a_, x.b_ + y.b_};
  }
  friend QuadElement operator-(const QuadElement& x, const QuadElement& y) {
    check_same(x, y);
    return {x.field_, x.a_ - y.a_, x.b_ - y.b_};
  }
  friend QuadElement operator*(const QuadElement& x, const QuadElement& y) {
    check_same(x, y);
    const Rational m(x.field_.m());
    return {x.field_, x.a_ * y.a_ + m * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend bool operator==(const QuadElement& x, const QuadElement& y) {
    return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const { return a_.to_string() + "," + b_.to_string(); }

 private:
  static void check_same(const QuadElement& x, const QuadElement& y) {
    if (!(x.field_ == y.field_)) throw DomainError("elements of different fields");
  }

  QuadField field_;
  Rational a_;
  Rational b_;
};

/// Per-embedding (d_v/d_L) log|x|_v; both weights are 1/2.
struct LogVector {
  double first = 0.0;
  double second = 0.0;
  double sum() const { return first + second; }
};

/// (log|sigma_1 x|, log|sigma_2 x|), unweighted. x must be nonzero.
inline std::pair<double, double> embedding_logs(const QuadElement& x) {
  if (x.is_zero()) throw DomainError("embedding log of zero");
  const double half_log_m = 0.5 * std::log(static_cast<double>(x.field().m()));
  if (x.b().is_zero()) {
    const double l = log_abs(x.a());
    return {l, l};
  }
  if (x.a().is_zero()) {
    const double l = log_abs(x.b()) + half_log_m;
    return {l, l};
  }
  const double la = log_abs(x.a());
  const double lb = log_abs(x.b()) + half_log_m;
  const double big = std::max(la, lb) + std::log1p(std::exp(std::min(la, lb) - std::max(la, lb)));
  const double small = log_abs(x.norm()) - big;
  if (x.a().sign() == x.b().sign()) return {big, small};
  return {small, big};
}

inline LogVector log_embedding(const QuadElement& x) {
  auto [l1, l2] = embedding_logs(x);
  return {0.5 * l1, 0.5 * l2};
}

inline Rational norm(const QuadElement& x) { return x.norm(); }

/// Exact sign of u + v sqrt(m).
inline int sign_with_root(const Rational& u, const Rational& v, long m) {
  if (v.is_zero()) return u.sign();
  if (u.is_zero() || u.sign() == v.sign()) return v.sign();
  // opposite signs: compare u^2 with m v^2
  const auto c = u * u <=> Rational(m) * v * v;
  if (c == 0) return 0;
  return c > 0 ? u.sign() : v.sign();
}

/// |sigma_i(x)| >= 1 for i = 1 (a + b sqrt m) or i = 2 (a - b sqrt m), exactly.
inline bool embedding_at_least_one(const QuadElement& x, int which) {
  const Rational b = which == 1 ? x.b() : -x.b();
  const Rational one(1L);
  return sign_with_root(x.a() - one, b, x.field().m()) >= 0 || sign_with_root(x.a() + one, b, x.field().m()) <= 0;
}

/// hmod(x) = (1/2) log |N(x)|
inline Height hmod(const QuadElement& x) {
  if (x.is_zero()) throw DomainError("hmod of zero");
  return 0.5 * log_abs(x.norm());
}

/// Weil height of x, via the Mahler measure of its minimal polynomial:
/// h(x) = (1/deg x) (log |lead| + sum_i log max{1, |x_i|}) over the conjugates.
inline Height height_quad(const QuadElement& x) {
  if (x.is_zero()) return 0.0;
  if (x.b().is_zero()) return height_rational(x.a());
  // X^2 - tr X + N, scaled to a primitive integer polynomial
  const Rational tr = x.trace();
  const Rational n = x.norm();
  const Integer common = lcm(tr.den(), n.den());
  Integer c1 = tr.num() * (common / tr.den());
  Integer c0 = n.num() * (common / n.den());
  Integer g = gcd(gcd(common, c1), c0);
  const Integer lead = common / g;
  auto [l1, l2] = embedding_logs(x);
  return 0.5 * (log_abs(lead) + std::max(0.0, l1) + std::max(0.0, l2));
}

/// Partial quotients of one period of the continued fraction of the reduced
/// generator w = (P0 + sqrt m)/Q0 of the ring of integers, with P0, Q0.
struct ContinuedFractionPeriod {
  Integer p0;
  Integer q0;
  std::vector<Integer> partial_quotients;
};

inline ContinuedFractionPeriod continued_fraction_period(const QuadField& k) {
  const Integer m(k.m());
  Integer root;
  mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
  ContinuedFractionPeriod out;
  if (k.m() % 4 == 1) {
    // (1 + sqrt m)/2 shifted by c so that its conjugate lies in (-1, 0)
    Integer c = (root - 1) / 2;
    out.p0 = 1 + 2 * c;
    out.q0 = 2;
  } else {
    out.p0 = root;
    out.q0 = 1;
  }
  Integer p = out.p0;
  Integer q = out.q0;
  do {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), Integer(p + root).get_mpz_t(), q.get_mpz_t());
    out.partial_quotients.push_back(a);
    p = a * q - p;
    Integer next_q = (m - p * p);
    mpz_divexact(next_q.get_mpz_t(), next_q.get_mpz_t(), q.get_mpz_t());
    q = std::move(next_q);
  } while (!(p == out.p0 && q == out.q0));
  return out;
}

/// Fundamental unit eps_0 > 1 of the ring of integers: for the reduced
/// generator w with period length r, eps_0 = q_{r-1} w + q_{r-2} where q_i are
/// the convergent denominators.
inline QuadElement fundamental_unit(const QuadField& k) {
  const auto cf = continued_fraction_period(k);
  Integer q_prev2 = 1;  // q_{-2}
  Integer q_prev1 = 0;  // q_{-1}
  for (const auto& a : cf.partial_quotients) {
    Integer next = a * q_prev1 + q_prev2;
    q_prev2 = std::move(q_prev1);
    q_prev1 = std::move(next);
  }
  // q_prev1 = q_{r-1}, q_prev2 = q_{r-2}
  const Rational a = Rational(q_prev1 * cf.p0, cf.q0) + Rational(q_prev2);
  const Rational b = Rational(q_prev1, cf.q0);
  return {k, a, b};
}

/// C = 2 d_L h(eps_0) = 4 h(eps_0)
inline double unit_reduction_constant(const QuadField& k) { return 4.0 * height_quad(fundamental_unit(k)); }

struct UnitReduction {
  long exponent = 0;  ///< eps = eps_0^exponent
  QuadElement unit;
  QuadElement reduced;  ///< eps * x
};

/// Multiplies the nonzero algebraic integer x by the power of eps_0 that
/// balances its two embedding logs: n = round((l2 - l1) / (2 log eps_0)),
/// then the best of n - 1, n, n + 1 (ties go to the smaller |n|).
inline UnitReduction unit_reduce(const QuadElement& x) {
  if (x.is_zero()) throw DomainError("unit reduction of zero");
  if (!x.is_algebraic_integer()) throw DomainError("unit reduction needs an algebraic integer");
  const QuadElement eps0 = fundamental_unit(x.field());
  const double lambda = std::max(embedding_logs(eps0).first, embedding_logs(eps0).second);
  const auto [l1, l2] = embedding_logs(x);
  auto height_at = [&](long n) {
    const double s = static_cast<double>(n) * lambda;
    return 0.5 * (std::max(0.0, l1 + s) + std::max(0.0, l2 - s));
  };
  const long center = std::lround((l2 - l1) / (2.0 * lambda));
  long best = center;
  double best_h = height_at(center);
  for (long n : {center - 1, center + 1}) {
    const double h = height_at(n);
    const bool tie = std::fabs(h - best_h) <= 1e-12 * (1.0 + best_h);
    if ((!tie && h < best_h) || (tie && std::labs(n) < std::labs(best))) {
      best = n;
      best_h = h;
    }
  }
  QuadElement unit = eps0.pow(best);
  QuadElement reduced = unit * x;
  return {best, std::move(unit), std::move(reduced)};
}

/// a = least common denominator, so aP has integer coefficients.
struct ClearedPoly {
  Integer a;
  DensePoly cleared;
};

inline ClearedPoly clear_denominators(const DensePoly& p) {
  Integer a = coefficient_lcm_denominator(p);
  return {a, p * Rational(a)};
}

}  // namespace weilheight
