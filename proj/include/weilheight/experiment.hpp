#pragma once

// Instance builders for the main bound and the tightness experiment that
// compares the basic reconstruction bound with the main bound as d grows.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weilheight/bounds.hpp"
#include "weilheight/cauchy.hpp"
#include "weilheight/random.hpp"

namespace weilheight {

/// S = [A, B] minus the poles of f, eta = max{1, D/#S}, and
/// H = max{4, log 2M, max_S h(F(x))}, so the value and point-count
/// hypotheses hold by construction and the width condition decides feasibility.
inline MainTheoremInput make_main_instance(const RationalFraction& f, std::int64_t a, std::int64_t b) {
  MainTheoremInput in;
  in.f = f;
  in.a = a;
  in.b = b;
  in.h = std::max(4.0, std::log(2.0 * static_cast<double>(in.magnitude())));
  for (auto x = a; x <= b; ++x) {
    const Rational xr(static_cast<long>(x));
    if (is_pole(f, xr)) continue;
    in.s.push_back(x);
    in.h = std::max(in.h, height_rational(evaluate(f, xr)));
  }
  const Rational ratio(Integer(static_cast<long>(b - a)), Integer(static_cast<long>(std::max<std::size_t>(1, in.s.size()))));
  in.eta = std::max(Rational(1L), ratio);
  return in;
}

/// Smallest D >= 1 for which [0, D] gives an instance satisfying every
/// hypothesis, scanning D upward with a running maximum of h(F(x)).
/// Returns nullopt if none is found up to max_width.
inline std::optional<MainTheoremInput> smallest_main_instance(const RationalFraction& f, std::int64_t max_width) {
  const int d = std::max(1, f.degree());
  std::vector<std::int64_t> s;
  double value_max = 0.0;
  for (std::int64_t big_d = 0; big_d <= max_width; ++big_d) {
    const Rational xr(static_cast<long>(big_d));
    if (!is_pole(f, xr)) {
      s.push_back(big_d);
      value_max = std::max(value_max, height_rational(evaluate(f, xr)));
    }
    if (big_d == 0 || s.empty()) continue;
    const Rational eta = std::max(Rational(1L), Rational(Integer(static_cast<long>(big_d)),
                                                         Integer(static_cast<long>(s.size()))));
    const double h = std::max({4.0, std::log(2.0 * static_cast<double>(big_d)), value_max});
    const double e = eta.to_double();
    if (static_cast<double>(big_d) < e * d * d * d * h) continue;
    if (Rational(static_cast<long>(big_d)) < Rational(4L) * eta * Rational(static_cast<long>(d))) continue;
    MainTheoremInput in;
    in.f = f;
    in.a = 0;
    in.b = big_d;
    in.s = s;
    in.eta = eta;
    in.h = h;
    return in;
  }
  return std::nullopt;
}

struct TightnessRow {
  std::uint64_t trial = 0;
  int d = 0;
  double h_f = 0.0;
  double bound_basic = 0.0;
  double bound_main = 0.0;
  double ratio_basic = 0.0;
  double ratio_main = 0.0;
  std::int64_t main_width = 0;  ///< D of the main-bound instance
};

inline constexpr std::uint64_t kTightnessStream = 0x7469676874ULL;
inline constexpr std::int64_t kTightnessMaxWidth = 2'000'000;

/// One row per (d, trial), d = 1..d_max. F is random with canonical degree d,
/// coefficients in [-coeff_bound, coeff_bound] and h(F) > 0.
/// bound_basic: reconstruction bound on the first 2d + 1 non-pole integers
/// >= 0. bound_main: main bound on the smallest hypothesis-satisfying [0, D].
inline std::vector<TightnessRow> tightness_experiment(int d_max, std::uint64_t trials, std::uint64_t seed,
                                                      std::int64_t coeff_bound = 10) {
  std::vector<TightnessRow> rows;
  for (int d = 1; d <= d_max; ++d) {
    for (std::uint64_t t = 0; t < trials; ++t) {
      Rng rng = trial_rng(seed, kTightnessStream + static_cast<std::uint64_t>(d), t);
      RationalFraction f;
      do f = random_fraction_of_degree(rng, d, coeff_bound); while (fraction_height(f) <= 0.0);

      TightnessRow row;
      row.trial = t;
      row.d = d;
      row.h_f = fraction_height(f);

      const auto nodes = consecutive_non_poles(f, static_cast<std::size_t>(2 * d + 1));
      double h = 0.0;
      for (auto x : nodes) h = std::max(h, height_rational(evaluate(f, Rational(static_cast<long>(x)))));
      const std::int64_t last = nodes.back();
      row.bound_basic = fraction_bound_basic(d, h, last, last);

      const auto inst = smallest_main_instance(f, kTightnessMaxWidth);
      if (!inst) throw std::runtime_error("no main-bound instance within the width cap");
      row.main_width = inst->width();
      row.bound_main = main_bound(d, inst->h, inst->magnitude(), inst->eta.to_double());

      row.ratio_basic = row.bound_basic / row.h_f;
      row.ratio_main = row.bound_main / row.h_f;
      rows.push_back(row);
    }
  }
  return rows;
}

struct TightnessSummary {
  int d = 0;
  double mean_ratio_basic = 0.0;
  double mean_ratio_main = 0.0;
  double mean_h_f = 0.0;
};

inline std::vector<TightnessSummary> summarize(const std::vector<TightnessRow>& rows) {
  std::vector<TightnessSummary> out;
  std::vector<int> counts;
  for (const auto& r : rows) {
    auto it = std::find_if(out.begin(), out.end(), [&](const TightnessSummary& s) { return s.d == r.d; });
    if (it == out.end()) {
      out.push_back({r.d, 0.0, 0.0, 0.0});
      counts.push_back(0);
      it = out.end() - 1;
    }
    const auto i = static_cast<std::size_t>(it - out.begin());
    it->mean_ratio_basic += r.ratio_basic;
    it->mean_ratio_main += r.ratio_main;
    it->mean_h_f += r.h_f;
    ++counts[i];
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].mean_ratio_basic /= counts[i];
    out[i].mean_ratio_main /= counts[i];
    out[i].mean_h_f /= counts[i];
  }
  return out;
}

}  // namespace weilheight
