#pragma once

/**
 * @file bounds.hpp
 * @brief Height bounds for rational fractions over Q sampled at many integer
 *        points: hypothesis checking, bound evaluation (C_Q = 960), the
 *        simplification gcd and its divisibility into the resultant, and the
 *        explicit constants of the growth-condition corollary.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "weilheight/cauchy.hpp"
#include "weilheight/fraction.hpp"
#include "weilheight/report.hpp"

namespace weilheight {

/// Explicit constant of the main bound over Q.
inline constexpr double kMainConstantQ = 960.0;

struct MainTheoremInput {
  RationalFraction f;
  std::int64_t a = 0;
  std::int64_t b = 1;
  std::vector<std::int64_t> s;
  Rational eta{1L};
  double h = 0.0;
  /// Degree bound d; defaults to max(1, deg F).
  std::optional<int> degree;

  int degree_bound() const { return degree.value_or(std::max(1, f.degree())); }
  std::int64_t width() const { return b - a; }
  std::int64_t magnitude() const { return std::max(std::abs(a), std::abs(b)); }
};

struct MainHypotheses {
  bool s_in_interval = false;
  bool h_floor = false;          ///< H >= max{4, log 2M}
  bool values_bounded = false;   ///< h(F(x)) <= H on S
  bool enough_points = false;    ///< #S >= D / eta
  bool wide_enough = false;      ///< D >= max{eta d^3 H, 4 eta d}
  double max_value_height = 0.0;

  bool all() const { return s_in_interval && h_floor && values_bounded && enough_points && wide_enough; }

  std::vector<std::pair<std::string, bool>> detail() const {
    return {{"s_in_interval", s_in_interval}, {"h_floor", h_floor}, {"values_bounded", values_bounded},
            {"enough_points", enough_points}, {"wide_enough", wide_enough}};
  }
};

/// Evaluates F on all of S; throws PoleError when S contains a pole.
inline MainHypotheses check_main_hypotheses(const MainTheoremInput& in) {
  MainHypotheses out;
  const int d = in.degree_bound();
  const double width = static_cast<double>(in.width());

  std::set<std::int64_t> distinct(in.s.begin(), in.s.end());
  out.s_in_interval = in.width() >= 1 && std::all_of(distinct.begin(), distinct.end(),
                                                     [&](std::int64_t x) { return x >= in.a && x <= in.b; });
  out.h_floor = in.h >= std::max(4.0, std::log(2.0 * static_cast<double>(in.magnitude())));

  for (auto x : distinct) {
    out.max_value_height = std::max(out.max_value_height, height_rational(evaluate(in.f, Rational(x))));
  }
  out.values_bounded = out.max_value_height <= in.h;

  const Rational dd(static_cast<long>(in.width()));
  out.enough_points = Rational(static_cast<long>(distinct.size())) * in.eta >= dd;
  const double eta = in.eta.to_double();
  out.wide_enough = width >= eta * d * d * d * in.h && dd >= Rational(4L) * in.eta * Rational(static_cast<long>(d));
  return out;
}

/// H + 960 eta d log(eta d H) + d log(2M) + log(d+1)
inline double main_bound(int d, double h, std::int64_t magnitude, double eta) {
  if (d < 1 || h <= 0.0 || magnitude < 1 || eta < 1.0) throw DomainError("main bound needs d >= 1, H > 0, M >= 1, eta >= 1");
  return h + kMainConstantQ * eta * d * std::log(eta * d * h) + d * std::log(2.0 * static_cast<double>(magnitude)) +
         std::log(d + 1.0);
}

/// gcd(|P(x)|, |Q(x)|) for the canonical integer numerator and denominator.
inline Integer simplification_gcd(const RationalFraction& f, std::int64_t x) {
  const Integer xi(static_cast<long>(x));
  const Integer q = DensePoly::eval_integer(f.den().integer_coeffs(), xi);
  if (sgn(q) == 0) throw PoleError(Rational(xi));
  const Integer p = DensePoly::eval_integer(f.num().integer_coeffs(), xi);
  return gcd(p, q);
}

/// log s_x over S: how much cancellation happens when F is evaluated there.
inline std::vector<double> simplification_profile(const RationalFraction& f, const std::vector<std::int64_t>& s) {
  std::vector<double> out;
  out.reserve(s.size());
  for (auto x : s) out.push_back(log_abs(simplification_gcd(f, x)));
  return out;
}

struct GcdResultantCheck {
  Integer resultant;
  Integer max_gcd;
  bool all_divide = true;
};

/// Every s_x divides Res(P, Q).
inline GcdResultantCheck gcd_divides_resultant_check(const RationalFraction& f, const std::vector<std::int64_t>& xs) {
  GcdResultantCheck out;
  out.resultant = f.num().is_zero() ? Integer(1) : resultant(f.num(), f.den());
  if (sgn(out.resultant) == 0) throw DomainError("numerator and denominator share a root");
  out.max_gcd = 0;
  for (auto x : xs) {
    const Integer g = simplification_gcd(f, x);
    out.max_gcd = std::max(out.max_gcd, g);
    if (!mpz_divisible_p(out.resultant.get_mpz_t(), g.get_mpz_t())) out.all_divide = false;
  }
  return out;
}

inline std::string digest_of(const MainTheoremInput& in) {
  Digest d;
  d.add("F", in.f.to_string()).add("A", in.a).add("B", in.b).add("eta", in.eta.to_string());
  d.add("H", std::to_string(in.h)).add("d", in.degree_bound());
  std::string s;
  for (auto x : in.s) s += std::to_string(x) + ",";
  d.add("S", s);
  return d.hex();
}

/// Checks the hypotheses and, when they hold, compares h(F) with main_bound.
inline BoundReport verify_main_theorem(const MainTheoremInput& in) {
  const MainHypotheses hyp = check_main_hypotheses(in);
  const int d = in.degree_bound();
  // main_bound is undefined below the H floor; such a report is informational
  const double bound = hyp.h_floor ? main_bound(d, in.h, in.magnitude(), std::max(1.0, in.eta.to_double())) : 0.0;
  auto report = BoundReport::make("main_bound", hyp.detail(), bound, fraction_height(in.f), digest_of(in));
  return report;
}

/// (4c + 1923)(12 + log max{1, #V} + 2 log c)
inline double corollary_constant(double c, std::int64_t n_v) {
  if (c < 1.0 || n_v < 0) throw DomainError("corollary constant needs c >= 1 and #V >= 0");
  return (4.0 * c + 1923.0) * (12.0 + std::log(std::max<double>(1.0, static_cast<double>(n_v))) + 2.0 * std::log(c));
}

/// max{2 #V, ceil(4 c d^4 log(4 c d^4))}
inline std::int64_t corollary_D(double c, int d, std::int64_t n_v) {
  if (c < 1.0 || d < 1 || n_v < 0) throw DomainError("corollary D needs c >= 1, d >= 1, #V >= 0");
  const double t = 4.0 * c * std::pow(static_cast<double>(d), 4);
  return std::max<std::int64_t>(2 * n_v, static_cast<std::int64_t>(std::ceil(t * std::log(t))));
}

/// The inequalities on H(D) = max{4, log 2D, c(d log d + d log D)} used to
/// derive the corollary constant, evaluated at D = corollary_D.
struct CorollaryChain {
  std::int64_t d_value = 0;
  double h_of_d = 0.0;
  bool h_within_log = false;   ///< H(D) <= 4 c d log(dD)
  bool h_within_width = false; ///< 2 d H(D) <= D
  bool theorem_width = false;  ///< D >= max{2 d^3 H(D), 8d}: the main hypotheses with eta = 2
};

inline CorollaryChain corollary_chain(double c, int d, std::int64_t n_v) {
  CorollaryChain out;
  out.d_value = corollary_D(c, d, n_v);
  const double big_d = static_cast<double>(out.d_value);
  const double dd = d;
  out.h_of_d = std::max({4.0, std::log(2.0 * big_d), c * (dd * std::log(dd) + dd * std::log(big_d))});
  out.h_within_log = out.h_of_d <= 4.0 * c * dd * std::log(dd * big_d);
  out.h_within_width = 2.0 * dd * out.h_of_d <= big_d;
  out.theorem_width = big_d >= std::max(2.0 * dd * dd * dd * out.h_of_d, 8.0 * dd);
  return out;
}

/// Integer roots of the denominator, from the Cauchy root bound.
inline std::vector<std::int64_t> integer_poles(const RationalFraction& f) {
  const auto q = f.den().integer_coeffs();
  if (q.size() < 2) return {};
  Integer ratio_max = 0;
  for (std::size_t i = 0; i + 1 < q.size(); ++i) ratio_max = std::max(ratio_max, Integer(abs(q[i])));
  Integer reach = ratio_max / abs(q.back()) + 1;
  if (!reach.fits_slong_p()) throw DomainError("denominator root bound too large to scan");
  std::vector<std::int64_t> out;
  for (long x = -reach.get_si(); x <= reach.get_si(); ++x) {
    if (sgn(DensePoly::eval_integer(q, Integer(x))) == 0) out.push_back(x);
  }
  return out;
}

/// Hypothesis scans are capped at this many integers.
inline constexpr std::int64_t kCorollaryScanCap = 100000;

/// Checks h(F(x)) <= c max{1, d log d + d h(x)} on [0, D] minus V and, if it
/// holds, compares h(F) with C(c, #V) d log(4d).
inline BoundReport verify_corollary_bound(const RationalFraction& f, double c, const std::vector<std::int64_t>& v) {
  const std::set<std::int64_t> excluded(v.begin(), v.end());
  const int d = std::max(1, f.degree());
  const auto n_v = static_cast<std::int64_t>(excluded.size());
  const std::int64_t big_d = corollary_D(c, d, n_v);
  const std::int64_t last = std::min(big_d, kCorollaryScanCap);
  const double dd = d;

  bool hypothesis = true;
  for (std::int64_t x = 0; x <= last; ++x) {
    if (excluded.count(x)) continue;
    const Rational xr(x);
    const double allowed = c * std::max(1.0, dd * std::log(dd) + dd * height_rational(xr));
    if (!leq_with_slack(height_rational(evaluate(f, xr)), allowed)) {
      hypothesis = false;
      break;
    }
  }
  const double bound = corollary_constant(c, n_v) * dd * std::log(4.0 * dd);
  Digest dig;
  dig.add("F", f.to_string()).add("c", std::to_string(c)).add("V", static_cast<long>(n_v));
  auto report = BoundReport::make("corollary_bound", {{"growth_condition", hypothesis}}, bound, fraction_height(f),
                                  dig.hex());
  if (last < big_d) report.note = "hypothesis sampled, not exhaustive";
  return report;
}

}  // namespace weilheight
