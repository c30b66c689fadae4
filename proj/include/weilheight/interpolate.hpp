#pragma once

/**
 * @file interpolate.hpp
 * @brief Interpolation of polynomials at integer nodes and the height bounds
 *        that control the interpolant by the heights of its values.
 *
 * Throughout, nodes live in an integer interval [A, B] with D = B - A >= 1 and
 * M = max{|A|, |B|}.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilheight/poly.hpp"

namespace weilheight {

/// Distinct integer nodes x_1 < ... < x_N inside [A, B].
class NodeSet {
 public:
  NodeSet(std::vector<std::int64_t> points, std::int64_t lower, std::int64_t upper)
      : points_(std::move(points)), lower_(lower), upper_(upper) {
    if (upper_ - lower_ < 1) throw DomainError("node interval must have width at least 1");
    std::sort(points_.begin(), points_.end());
    if (std::adjacent_find(points_.begin(), points_.end()) != points_.end()) {
      throw DomainError("duplicate interpolation node");
    }
    for (auto x : points_) {
      if (x < lower_ || x > upper_) throw DomainError("node " + std::to_string(x) + " outside the interval");
    }
  }

  /// Interval [min, max] of the points; a single point x gets [x, x + 1].
  static NodeSet spanning(std::vector<std::int64_t> points) {
    if (points.empty()) throw DomainError("empty node set");
    auto [lo, hi] = std::minmax_element(points.begin(), points.end());
    std::int64_t a = *lo;
    std::int64_t b = *hi == *lo ? *lo + 1 : *hi;
    return NodeSet(std::move(points), a, b);
  }

  /// Consecutive integers lower, lower + 1, ..., upper.
  static NodeSet interval(std::int64_t lower, std::int64_t upper) {
    std::vector<std::int64_t> pts;
    for (auto x = lower; x <= upper; ++x) pts.push_back(x);
    return NodeSet(std::move(pts), lower, upper);
  }

  /// The first `count` nodes, same interval.
  NodeSet prefix(std::size_t count) const {
    return NodeSet(std::vector<std::int64_t>(points_.begin(), points_.begin() + static_cast<std::ptrdiff_t>(count)),
                   lower_, upper_);
  }

  const std::vector<std::int64_t>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::int64_t lower() const { return lower_; }
  std::int64_t upper() const { return upper_; }
  std::int64_t width() const { return upper_ - lower_; }
  std::int64_t magnitude() const { return std::max(std::abs(lower_), std::abs(upper_)); }

 private:
  std::vector<std::int64_t> points_;
  std::int64_t lower_;
  std::int64_t upper_;
};

/// The unique polynomial of degree <= d through (x_i, values_i), by Newton
/// divided differences.
inline DensePoly lagrange_interpolate(const NodeSet& nodes, const std::vector<Rational>& values, int d) {
  const auto n = static_cast<std::size_t>(d + 1);
  if (d < 0 || nodes.size() != n || values.size() != n) {
    throw DomainError("interpolation needs exactly d + 1 nodes and values");
  }
  const auto& xs = nodes.points();
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
    }
  }
  // Horner on the Newton form: dd_0 + (X - x_0)(dd_1 + (X - x_1)(...)).
  DensePoly out{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    out = out * DensePoly::linear_root(Rational(xs[i])) + DensePoly{dd[i]};
  }
  return out;
}

/// Outcome of checking the scaled Lagrange basis Q_i = D! prod_{j != i} (X - x_j)/(x_i - x_j).
struct LagrangeBasisCheck {
  std::vector<DensePoly> basis;     ///< the Q_i
  std::vector<Integer> sup_norms;   ///< |Q_i|_inf
  Integer bound;                    ///< D! (2M)^d
  double max_ratio = 0.0;           ///< max_i |Q_i|_inf / bound
  bool passed = false;
};

/// Builds every Q_i exactly, requires integral coefficients, and compares the
/// sup norms with D! (2M)^d as integers.
inline LagrangeBasisCheck lagrange_basis_bound_check(const NodeSet& nodes, int d) {
  if (d < 0 || nodes.size() != static_cast<std::size_t>(d + 1)) {
    throw DomainError("basis check needs exactly d + 1 nodes");
  }
  if (nodes.width() > 2000) throw DomainError("interval too wide for an exact factorial");
  const Integer dfact = factorial(static_cast<unsigned long>(nodes.width()));
  Integer two_m_pow;
  mpz_ui_pow_ui(two_m_pow.get_mpz_t(), 2UL * static_cast<unsigned long>(nodes.magnitude()),
                static_cast<unsigned long>(d));

  LagrangeBasisCheck out;
  out.bound = dfact * two_m_pow;
  out.passed = true;
  const auto& xs = nodes.points();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Integer denom = 1;
    std::vector<Rational> roots;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      denom *= Integer(static_cast<long>(xs[i] - xs[j]));
      roots.emplace_back(static_cast<long>(xs[j]));
    }
    if (!mpz_divisible_p(dfact.get_mpz_t(), denom.get_mpz_t())) {
      throw DomainError("scaled Lagrange basis polynomial is not integral");
    }
    Integer scale = dfact / denom;
    DensePoly qi = product_of_linears(roots) * Rational(scale);
    Integer norm = poly_inf_norm(qi);
    out.max_ratio = std::max(out.max_ratio, mpq_class(norm, out.bound).get_d());
    if (norm > out.bound) out.passed = false;
    out.basis.push_back(std::move(qi));
    out.sup_norms.push_back(std::move(norm));
  }
  return out;
}

namespace detail {
inline void require_bound_inputs(int d, double h, std::int64_t width, std::int64_t magnitude) {
  if (d < 1 || width < 1 || magnitude < 1 || h < 0.0) throw DomainError("bound needs d >= 1, D >= 1, M >= 1, H >= 0");
}
}  // namespace detail

/// (d+1) H + D log D + d log(2M) + log(d+1), for d + 1 nodes.
inline double poly_bound_basic(int d, double h, std::int64_t width, std::int64_t magnitude) {
  detail::require_bound_inputs(d, h, width, magnitude);
  const double dd = d;
  const double big_d = static_cast<double>(width);
  return (dd + 1) * h + big_d * std::log(big_d) + dd * std::log(2.0 * static_cast<double>(magnitude)) +
         std::log(dd + 1);
}

/// N/(N-d) H + D log D + d log(2M) + log(d+1), for N > d nodes.
inline double poly_bound_oversampled(std::int64_t n, int d, double h, std::int64_t width, std::int64_t magnitude) {
  if (n <= d) throw DomainError("oversampled bound needs N > d");
  detail::require_bound_inputs(d, h, width, magnitude);
  const double dd = d;
  const double big_d = static_cast<double>(width);
  const double nn = static_cast<double>(n);
  return nn / (nn - dd) * h + big_d * std::log(big_d) + dd * std::log(2.0 * static_cast<double>(magnitude)) +
         std::log(dd + 1);
}

/// A place of Q: archimedean, or p-adic for a prime p.
struct Place {
  std::optional<Integer> prime;

  static Place archimedean() { return {}; }
  static Place padic(Integer p) { return {std::move(p)}; }
  bool is_archimedean() const { return !prime.has_value(); }
  std::string to_string() const { return prime ? "p=" + prime->get_str() : "inf"; }
};

/// Number of x in [A, B] where the integer polynomial P is unusually small at
/// the place: |P(x)|_p < |D! P|_p, or |P(x)| < |P|_inf / ((2M)^d (d+1)).
/// At most deg P such points exist.
inline long count_bad_points(const DensePoly& p, std::int64_t lower, std::int64_t upper, const Place& place) {
  if (p.is_zero()) throw DomainError("bad-point count of the zero polynomial");
  if (upper - lower < 1) throw DomainError("interval must have width at least 1");
  const auto coeffs = p.integer_coeffs();
  const int d = p.degree();
  const std::int64_t magnitude = std::max(std::abs(lower), std::abs(upper));
  long count = 0;

  if (place.is_archimedean()) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2UL * static_cast<unsigned long>(magnitude), static_cast<unsigned long>(d));
    scale *= d + 1;
    const Integer norm = poly_inf_norm(p);
    for (auto x = lower; x <= upper; ++x) {
      Integer value = DensePoly::eval_integer(coeffs, Integer(static_cast<long>(x)));
      if (Integer(abs(value)) * scale < norm) ++count;
    }
    return count;
  }

  const Integer& prime = *place.prime;
  if (!is_prime(prime)) throw DomainError("place at a non-prime");
  const long threshold =
      static_cast<long>(vp_integer(factorial(static_cast<unsigned long>(upper - lower)), prime)) + poly_vp(p, prime);
  for (auto x = lower; x <= upper; ++x) {
    Integer value = DensePoly::eval_integer(coeffs, Integer(static_cast<long>(x)));
    if (sgn(value) == 0 || static_cast<long>(vp_integer(value, prime)) > threshold) ++count;
  }
  return count;
}

/// One place-wise instance of the oversampled interpolation bound.
struct LocalBoundCheck {
  Place place;
  double lhs = 0.0;  ///< log max{1, |F|_v}
  double rhs = 0.0;  ///< C_v + (1/(N-d)) sum_i log max{1, |F(x_i)|_v}
  bool holds = false;
};

/// Place-wise checks of the oversampled bound for F of degree <= d sampled at
/// every node. The archimedean check runs on the denominator-cleared integer
/// polynomial aF; p-adic checks run on F itself for each prime p <= 50
/// dividing a numerator or denominator of some coefficient or value.
inline std::vector<LocalBoundCheck> local_bound_check(const DensePoly& f, const NodeSet& nodes, int d) {
  const auto n = static_cast<std::int64_t>(nodes.size());
  if (d < 1 || n <= d) throw DomainError("local bound check needs d >= 1 and N > d");
  if (f.degree() > d) throw DomainError("polynomial degree exceeds the declared bound");
  const double inv_excess = 1.0 / static_cast<double>(n - d);
  std::vector<Rational> values;
  for (auto x : nodes.points()) values.push_back(f(Rational(static_cast<long>(x))));

  std::vector<LocalBoundCheck> out;

  {
    const Integer a = coefficient_lcm_denominator(f);
    const DensePoly cleared = f * Rational(a);
    LocalBoundCheck c;
    c.place = Place::archimedean();
    const Integer norm = cleared.is_zero() ? Integer(0) : poly_inf_norm(cleared);
    c.lhs = norm > 1 ? log_abs(norm) : 0.0;
    double sum = 0.0;
    for (const auto& v : values) {
      const Rational w = v * Rational(a);
      const Rational aw = w.abs();
      if (aw > Rational(1L)) sum += log_abs(aw);
    }
    c.rhs = d * std::log(2.0 * static_cast<double>(nodes.magnitude())) + std::log(d + 1.0) + inv_excess * sum;
    c.holds = leq_with_slack(c.lhs, c.rhs);
    out.push_back(std::move(c));
  }

  std::vector<long> primes;
  auto collect = [&](const Rational& r) {
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
      if (r.is_zero()) continue;
      if (mpz_divisible_ui_p(r.num().get_mpz_t(), static_cast<unsigned long>(p)) ||
          mpz_divisible_ui_p(r.den().get_mpz_t(), static_cast<unsigned long>(p))) {
        primes.push_back(p);
      }
    }
  };
  for (const auto& c : f.coeffs()) collect(c);
  for (const auto& v : values) collect(v);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

  const Integer dfact = factorial(static_cast<unsigned long>(nodes.width()));
  for (long p : primes) {
    const Integer prime(p);
    const double logp = std::log(static_cast<double>(p));
    LocalBoundCheck c;
    c.place = Place::padic(prime);
    c.lhs = f.is_zero() ? 0.0 : static_cast<double>(std::max(0L, -poly_vp(f, prime))) * logp;
    double sum = 0.0;
    for (const auto& v : values) {
      if (!v.is_zero()) sum += static_cast<double>(std::max(0L, -vp(v, prime))) * logp;
    }
    c.rhs = static_cast<double>(vp_integer(dfact, prime)) * logp + inv_excess * sum;
    c.holds = leq_with_slack(c.lhs, c.rhs);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace weilheight
