#pragma once

// Counting lemmas used to control the simplifications occurring when a
// fraction is evaluated: a pigeonhole window, a prime-divisor log sum, and a
// bound on truncated p-adic valuations of polynomial values.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "weilheight/interpolate.hpp"
#include "weilheight/poly.hpp"

namespace weilheight {

/// [lo, hi] with hi - lo <= ceil(2 eta k) holding at least k + 1 elements of S.
struct SubintervalWitness {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<std::int64_t> members;
};

/// ceil of a rational
inline Integer ceil_rational(const Rational& r) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
  return out;
}

/// Leftmost window: lo is the first element of S whose k-th successor lies
/// within ceil(2 eta k); hi is the largest element of S within that reach.
inline SubintervalWitness find_dense_subinterval(std::int64_t a, std::int64_t b, std::vector<std::int64_t> s,
                                                 const Rational& eta, std::int64_t k) {
  if (b - a < 1) throw DomainError("interval must have width at least 1");
  if (eta < Rational(1L)) throw DomainError("eta must be at least 1");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (auto x : s) {
    if (x < a || x > b) throw DomainError("S is not contained in the interval");
  }
  const Rational width(static_cast<long>(b - a));
  if (Rational(static_cast<long>(s.size())) * eta < width) throw DomainError("S has fewer than D/eta elements");
  if (k < 1 || Rational(2L) * eta * Rational(static_cast<long>(k)) > width) {
    throw DomainError("k must satisfy 1 <= k <= D/(2 eta)");
  }

  const Integer reach_big = ceil_rational(Rational(2L) * eta * Rational(static_cast<long>(k)));
  const auto reach = static_cast<std::int64_t>(reach_big.get_si());
  const auto need = static_cast<std::size_t>(k);
  for (std::size_t i = 0; i + need < s.size(); ++i) {
    if (s[i + need] - s[i] > reach) continue;
    SubintervalWitness w;
    w.lo = s[i];
    auto end = std::upper_bound(s.begin(), s.end(), s[i] + reach);
    w.members.assign(s.begin() + static_cast<std::ptrdiff_t>(i), end);
    w.hi = w.members.back();
    return w;
  }
  throw std::logic_error("no dense subinterval although the counting hypotheses hold");
}

struct PrimeLogSum {
  double sum = 0.0;    ///< sum over distinct p | R of log(p)/(p-1)
  double bound = 0.0;  ///< 2 log log |R| + 3.5
  bool holds() const { return leq_with_slack(sum, bound); }
};

inline PrimeLogSum prime_log_sum(const Integer& r) {
  if (abs(r) <= 1) throw DomainError("prime log sum needs a non-unit |R| >= 2");
  PrimeLogSum out;
  for (const auto& pp : factorize(r)) {
    const double p = pp.prime.get_d();
    out.sum += log_abs(pp.prime) / (p - 1.0);
  }
  out.bound = 2.0 * std::log(log_abs(r)) + 3.5;
  return out;
}

struct ValuationSumCheck {
  long lhs = 0;      ///< sum_i min{beta, v_p(Q(x_i))}
  double rhs = 0.0;  ///< d (beta + log D / log p + D / (p - 1))
  bool holds() const { return leq_with_slack(static_cast<double>(lhs), rhs); }
};

/// Truncated valuation sum of an integer polynomial Q with v_p(Q) = 0 over
/// distinct nodes in [A, B]. A node where Q vanishes contributes beta.
inline ValuationSumCheck valuation_sum_bound_check(const DensePoly& q, const Integer& p, const NodeSet& nodes,
                                                   long beta) {
  if (!is_prime(p)) throw DomainError("valuation at a non-prime");
  if (beta < 0) throw DomainError("beta must be nonnegative");
  if (q.is_zero() || poly_vp(q, p) != 0) throw DomainError("polynomial must have p-adic valuation 0");
  const auto coeffs = q.integer_coeffs();
  ValuationSumCheck out;
  for (auto x : nodes.points()) {
    Integer value = DensePoly::eval_integer(coeffs, Integer(static_cast<long>(x)));
    const long v = sgn(value) == 0 ? beta : static_cast<long>(vp_integer(value, p));
    out.lhs += std::min(beta, v);
  }
  const double width = static_cast<double>(nodes.width());
  const double pd = p.get_d();
  out.rhs = q.degree() * (static_cast<double>(beta) + std::log(width) / std::log(pd) + width / (pd - 1.0));
  return out;
}

}  // namespace weilheight
