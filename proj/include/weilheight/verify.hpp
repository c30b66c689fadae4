#pragma once

/**
 * @file verify.hpp
 * @brief Seeded randomized verification suites. Each check draws its trials
 *        from an independent stream keyed by the check name, so a check's
 *        output does not depend on which other checks run.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "weilheight/bounds.hpp"
#include "weilheight/cauchy.hpp"
#include "weilheight/experiment.hpp"
#include "weilheight/nf.hpp"
#include "weilheight/padic.hpp"
#include "weilheight/random.hpp"

namespace weilheight {

struct SuiteOptions {
  std::uint64_t trials = 200;
  std::uint64_t seed = 0;
  int degree_max = 0;  ///< 0: the check's own default
  double c = 2.0;
  int degree = 3;

  int degree_or(int fallback) const { return degree_max > 0 ? degree_max : fallback; }
};

using Reports = std::vector<BoundReport>;

namespace detail {

inline std::uint64_t stream_of(std::string_view name) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : name) h = (h ^ c) * 0x100000001b3ULL;
  return h;
}

inline std::string trial_digest(std::string_view check, const SuiteOptions& o, std::uint64_t t) {
  Digest d;
  d.add("check", check).add("seed", std::to_string(o.seed)).add("trial", std::to_string(t));
  return d.hex();
}

/// Runs body(rng, digest, out) for each trial.
template <class Body>
Reports for_trials(std::string_view check, const SuiteOptions& o, Body body) {
  Reports out;
  const auto stream = stream_of(check);
  for (std::uint64_t t = 0; t < o.trials; ++t) {
    Rng rng = trial_rng(o.seed, stream, t);
    body(rng, trial_digest(check, o, t), out);
  }
  return out;
}

/// `count` distinct integers in [lower, upper] (no pole avoidance).
inline std::vector<std::int64_t> distinct_ints(Rng& rng, std::size_t count, std::int64_t lower, std::int64_t upper) {
  return random_nodes(rng, RationalFraction{}, count, lower, upper);
}

/// Random interval [A, A + D] that holds at least `count` integers.
inline std::pair<std::int64_t, std::int64_t> random_interval(Rng& rng, std::size_t count, std::int64_t max_extra) {
  const auto width = static_cast<std::int64_t>(count) + uniform_int(rng, 0, max_extra);
  const auto a = uniform_int(rng, -50, 50);
  return {a, a + width};
}

inline NodeSet nodes_in(Rng& rng, const RationalFraction& f, std::size_t count, std::int64_t lower,
                        std::int64_t upper) {
  return NodeSet(random_nodes(rng, f, count, lower, upper), lower, upper);
}

inline std::vector<Rational> values_at(const RationalFraction& f, const NodeSet& nodes) {
  std::vector<Rational> v;
  for (auto x : nodes.points()) v.push_back(evaluate(f, Rational(static_cast<long>(x))));
  return v;
}

inline std::vector<Rational> values_at(const DensePoly& p, const NodeSet& nodes) {
  std::vector<Rational> v;
  for (auto x : nodes.points()) v.push_back(p(Rational(static_cast<long>(x))));
  return v;
}

inline double max_value_height(const std::vector<Rational>& values) {
  double h = 0.0;
  for (const auto& v : values) h = std::max(h, height_rational(v));
  return h;
}

}  // namespace detail

// --- scalar heights ------------------------------------------------------

inline Reports check_height_product(const SuiteOptions& o) {
  return detail::for_trials("height_product", o, [](Rng& rng, const std::string& dig, Reports& out) {
    const Rational x = random_nonzero_rational(rng, 1'000'000);
    const Rational y = random_nonzero_rational(rng, 1'000'000);
    out.push_back(BoundReport::make("height_product", {}, height_rational(x) + height_rational(y),
                                    height_rational(x * y), dig));
    const Rational inv = x.inverse();
    const bool same = std::max(Integer(abs(inv.num())), inv.den()) == std::max(Integer(abs(x.num())), x.den());
    out.push_back(BoundReport::identity("height_inverse", same, dig));
  });
}

inline Reports check_projective_scaling(const SuiteOptions& o) {
  return detail::for_trials("projective_scaling", o, [](Rng& rng, const std::string& dig, Reports& out) {
    std::vector<Rational> xs;
    const auto n = uniform_int(rng, 1, 6);
    for (std::int64_t i = 0; i < n; ++i) xs.push_back(random_rational(rng, 10'000));
    if (std::all_of(xs.begin(), xs.end(), [](const Rational& r) { return r.is_zero(); })) xs[0] = Rational(1L);
    const Rational lambda = random_nonzero_rational(rng, 10'000);
    std::vector<Rational> scaled;
    for (const auto& x : xs) scaled.push_back(lambda * x);
    const double h = height_projective_tuple(std::span<const Rational>(xs));
    const double hs = height_projective_tuple(std::span<const Rational>(scaled));
    out.push_back(BoundReport::make("projective_scaling", {}, 0.0, std::fabs(h - hs), dig));

    std::vector<Rational> with_one{Rational(1L)};
    with_one.insert(with_one.end(), xs.begin(), xs.end());
    const double ha = height_affine_tuple(std::span<const Rational>(xs));
    const double hp = height_projective_tuple(std::span<const Rational>(with_one));
    out.push_back(BoundReport::make("affine_projective", {}, 0.0, std::fabs(ha - hp), dig));
  });
}

inline Reports check_vp_additive(const SuiteOptions& o) {
  static const long primes[] = {2, 3, 5, 7, 11, 13};
  return detail::for_trials("vp_additive", o, [](Rng& rng, const std::string& dig, Reports& out) {
    const Rational x = random_nonzero_rational(rng, 100'000);
    const Rational y = random_nonzero_rational(rng, 100'000);
    const Integer p(primes[uniform_below(rng, 6)]);
    out.push_back(BoundReport::identity("vp_additive", vp(x * y, p) == vp(x, p) + vp(y, p), dig));
  });
}

/// h(F(x)) <= d h(x) + h(F) + log(d + 1)
inline Reports check_evaluation_height(const SuiteOptions& o) {
  const int dmax = o.degree_or(8);
  return detail::for_trials("evaluation_height", o, [dmax](Rng& rng, const std::string& dig, Reports& out) {
    const auto f = random_fraction(rng, dmax, 1000);
    Rational x;
    do x = random_rational(rng, 1'000'000); while (is_pole(f, x));
    const int d = f.degree();
    const double bound = d * height_rational(x) + fraction_height(f) + std::log(d + 1.0);
    out.push_back(BoundReport::make("evaluation_height", {}, bound, height_rational(evaluate(f, x)), dig));
  });
}

// --- polynomial interpolation --------------------------------------------

/// Coefficient heights <= 20: |num|, den <= e^20.
inline constexpr std::int64_t kHeight20 = 485'165'195;

inline Reports check_lagrange_roundtrip(const SuiteOptions& o) {
  const int dmax = o.degree_or(8);
  return detail::for_trials("lagrange_roundtrip", o, [dmax](Rng& rng, const std::string& dig, Reports& out) {
    const int d = static_cast<int>(uniform_int(rng, 0, dmax));
    const DensePoly p = random_poly(rng, d, kHeight20);
    const auto nodes = NodeSet::spanning(detail::distinct_ints(rng, static_cast<std::size_t>(d + 1), -60, 60));
    const DensePoly back = lagrange_interpolate(nodes, detail::values_at(p, nodes), d);
    out.push_back(BoundReport::identity("lagrange_roundtrip", back == p, dig));
  });
}

/// Global bounds: the basic one on d + 1 nodes, the oversampled one on N > d.
inline Reports check_poly_bounds(const SuiteOptions& o) {
  const int dmax = o.degree_or(6);
  return detail::for_trials("poly_bounds", o, [dmax](Rng& rng, const std::string& dig, Reports& out) {
    const int d = static_cast<int>(uniform_int(rng, 1, dmax));
    const DensePoly p = random_poly(rng, d, 100);
    const auto n = static_cast<std::size_t>(d + 1 + uniform_int(rng, 0, 2 * d));
    const auto [a, b] = detail::random_interval(rng, n, 40);

    const NodeSet basic = detail::nodes_in(rng, RationalFraction{}, static_cast<std::size_t>(d + 1), a, b);
    const double hb = detail::max_value_height(detail::values_at(p, basic));
    out.push_back(BoundReport::make("poly_bound_basic", {}, poly_bound_basic(d, hb, b - a, basic.magnitude()),
                                    poly_height(p), dig));

    const NodeSet over = detail::nodes_in(rng, RationalFraction{}, n, a, b);
    const double ho = detail::max_value_height(detail::values_at(p, over));
    out.push_back(BoundReport::make("poly_bound_oversampled", {},
                                    poly_bound_oversampled(static_cast<std::int64_t>(n), d, ho, b - a,
                                                           over.magnitude()),
                                    poly_height(p), dig));
    for (const auto& c : local_bound_check(p, over, d)) {
      auto r = BoundReport::make("poly_bound_local", {}, c.rhs, c.lhs, dig);
      r.note = c.place.to_string();
      out.push_back(std::move(r));
    }
  });
}

/// |Q_i|_inf <= D! (2M)^d, exact.
inline Reports check_lagrange_basis(const SuiteOptions& o) {
  const int dmax = o.degree_or(8);
  return detail::for_trials("lagrange_basis", o, [dmax](Rng& rng, const std::string& dig, Reports& out) {
    const int d = static_cast<int>(uniform_int(rng, 1, dmax));
    const auto [a, b] = detail::random_interval(rng, static_cast<std::size_t>(d + 1), 30);
    const NodeSet nodes = detail::nodes_in(rng, RationalFraction{}, static_cast<std::size_t>(d + 1), a, b);
    out.push_back(BoundReport::identity("lagrange_basis", lagrange_basis_bound_check(nodes, d).passed, dig));
  });
}

/// At most d bad points per place.
inline Reports check_bad_points(const SuiteOptions& o) {
  const int dmax = o.degree_or(6);
  return detail::for_trials("bad_points", o, [dmax](Rng& rng, const std::string& dig, Reports& out) {
    const int d = static_cast<int>(uniform_int(rng, 0, dmax));
    const DensePoly p = random_integer_poly(rng, d, 50);
    const auto a = uniform_int(rng, -40, 40);
    const auto b = a + uniform_int(rng, 1, 40);
    static const long places[] = {0, 2, 3, 5};
    const long pick = places[uniform_below(rng, 4)];
    const Place place = pick == 0 ? Place::archimedean() : Place::padic(Integer(pick));
    auto r = BoundReport::make("bad_points", {}, d, static_cast<double>(count_bad_points(p, a, b, place)), dig);
    r.note = place.to_string();
    out.push_back(std::move(r));
  });
}

// --- fractions -------------------------------------------------------------

/// Bezout identity, degree bounds, and the three height bounds.
inline Reports check_subresultants(const SuiteOptions& o) {
  const int dmax = o.degree_or(8);
  return detail::for_trials("subresultants", o, [dmax](Rng& rng, const std::string& dig, Reports& out) {
    const int dp = static_cast<int>(uniform_int(rng, 1, dmax));
    const int dq = static_cast<int>(uniform_int(rng, 1, dmax));
    const DensePoly p = random_integer_poly(rng, dp, 10'000);
    const DensePoly q = random_integer_poly(rng, dq, 10'000);
    const double hp = poly_height(p);
    const double hq = poly_height(q);
    bool identity = true;
    for (int k = 0; k <= max_subresultant_index(dp, dq); ++k) {
      const auto s = subresultant(p, q, k);
      identity = identity && s.U * p + s.V * q == s.R && s.R.degree() <= k && s.U.degree() <= dq - k - 1 &&
                 s.V.degree() <= dp - k - 1;
      if (k > std::min(dp, dq) - 1) continue;
      const auto b = subresultant_height_bound(dp, dq, k, hp, hq);
      out.push_back(BoundReport::make("subresultant_height_R", {}, b.r, poly_height(s.R), dig));
      out.push_back(BoundReport::make("subresultant_height_U", {}, b.u, poly_height(s.U), dig));
      out.push_back(BoundReport::make("subresultant_height_V", {}, b.v, poly_height(s.V), dig));
    }
    out.push_back(BoundReport::identity("subresultant_bezout", identity, dig));
  });
}

/// Exact reconstruction, agreement of the automatic split, and the basic
/// fraction bound on 2d + 1 nodes.
inline Reports check_cauchy(const SuiteOptions& o) {
  const int dmax = o.degree_or(5);
  return detail::for_trials("cauchy", o, [dmax](Rng& rng, const std::string& dig, Reports& out) {
    const auto f = random_fraction(rng, dmax, 1'000'000);
    const int dp = std::max(0, f.num().degree());
    const int dq = f.den().degree();
    const int d = std::max(1, f.degree());
    const auto count = static_cast<std::size_t>(dp + dq + 1);
    // room for 2d + 1 nodes after removing up to dq poles
    const auto [a, b] = detail::random_interval(rng, static_cast<std::size_t>(2 * d + 1 + dq), 60);
    const NodeSet nodes = detail::nodes_in(rng, f, count, a, b);
    const auto back = cauchy_interpolate(nodes, detail::values_at(f, nodes), dp, dq);
    out.push_back(BoundReport::identity("cauchy_roundtrip", back == f, dig));

    const NodeSet wide = detail::nodes_in(rng, f, static_cast<std::size_t>(2 * d + 1), a, b);
    const auto values = detail::values_at(f, wide);
    out.push_back(BoundReport::identity("cauchy_auto_agrees", cauchy_interpolate_auto(wide, values, d) == f, dig));
    out.push_back(BoundReport::make("fraction_bound_basic", {},
                                    fraction_bound_basic(d, detail::max_value_height(values), b - a, wide.magnitude()),
                                    fraction_height(f), dig));
  });
}

// --- counting lemmas -------------------------------------------------------

inline Reports check_dense_subinterval(const SuiteOptions& o) {
  return detail::for_trials("dense_subinterval", o, [](Rng& rng, const std::string& dig, Reports& out) {
    const Rational eta(Integer(static_cast<long>(uniform_int(rng, 4, 16))), Integer(4));
    const auto a = uniform_int(rng, -100, 100);
    const auto width = uniform_int(rng, 8, 200);
    const auto b = a + width;
    const Rational w(static_cast<long>(width));
    const auto need = static_cast<std::size_t>(ceil_rational(w / eta).get_si());
    const auto size = need + static_cast<std::size_t>(uniform_below(rng, static_cast<std::uint64_t>(width) + 2 - need));
    const auto s = detail::distinct_ints(rng, size, a, b);
    const Rational half = w / (Rational(2L) * eta);
    const auto k = uniform_int(rng, 1, Integer(half.num() / half.den()).get_si());
    const auto wit = find_dense_subinterval(a, b, s, eta, k);
    const auto reach = ceil_rational(Rational(2L) * eta * Rational(static_cast<long>(k)));
    const std::set<std::int64_t> in_s(s.begin(), s.end());
    bool ok = Integer(static_cast<long>(wit.hi - wit.lo)) <= reach &&
              wit.members.size() >= static_cast<std::size_t>(k + 1);
    for (auto m : wit.members) ok = ok && in_s.count(m) && m >= wit.lo && m <= wit.hi;
    out.push_back(BoundReport::identity("dense_subinterval", ok, dig));
  });
}

inline Reports check_prime_log_sum(const SuiteOptions& o) {
  return detail::for_trials("prime_log_sum", o, [](Rng& rng, const std::string& dig, Reports& out) {
    Integer r;
    if (coin(rng)) {
      r = Integer(static_cast<unsigned long>(uniform_int(rng, 2, 1'000'000)));
    } else {
      mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(rng() | 2ULL));
    }
    const auto s = prime_log_sum(r);
    out.push_back(BoundReport::make("prime_log_sum", {}, s.bound, s.sum, dig));
  });
}

inline Reports check_valuation_sum(const SuiteOptions& o) {
  static const long primes[] = {2, 3, 5, 7, 11};
  return detail::for_trials("valuation_sum", o, [](Rng& rng, const std::string& dig, Reports& out) {
    const Integer p(primes[uniform_below(rng, 5)]);
    DensePoly q;
    do q = random_integer_poly(rng, static_cast<int>(uniform_int(rng, 0, 6)), 100); while (poly_vp(q, p) != 0);
    const auto a = uniform_int(rng, -100, 100);
    const auto b = a + uniform_int(rng, 1, 200);
    const auto count = static_cast<std::size_t>(uniform_int(rng, 1, b - a + 1));
    const NodeSet nodes(detail::distinct_ints(rng, count, a, b), a, b);
    const long beta = static_cast<long>(uniform_int(rng, 0, 10));
    const auto c = valuation_sum_bound_check(q, p, nodes, beta);
    out.push_back(BoundReport::make("valuation_sum", {}, c.rhs, static_cast<double>(c.lhs), dig));
  });
}

// --- real quadratic fields -------------------------------------------------

inline constexpr long kQuadFields[] = {2, 3, 5, 7, 13};

inline Reports check_hmod(const SuiteOptions& o) {
  return detail::for_trials("hmod", o, [](Rng& rng, const std::string& dig, Reports& out) {
    const QuadField k(kQuadFields[uniform_below(rng, 5)]);
    QuadElement x(k, Rational(0L));
    while (x.is_zero()) {
      x = QuadElement(k, Rational(static_cast<long>(uniform_int(rng, -100, 100))),
                      Rational(static_cast<long>(uniform_int(rng, -100, 100))));
    }
    const double hm = hmod(x);
    const double h = height_quad(x);
    out.push_back(BoundReport::make("hmod_below_height", {}, h, hm, dig));
    const bool equal = std::fabs(h - hm) <= slack(h);
    const bool both = embedding_at_least_one(x, 1) && embedding_at_least_one(x, 2);
    out.push_back(BoundReport::identity("hmod_equality_case", equal == both, dig));

    const long n = static_cast<long>(uniform_int(rng, -20, 20));
    const QuadElement moved = fundamental_unit(k).pow(n) * x;
    out.push_back(BoundReport::identity("hmod_unit_invariant", moved.norm().abs() == x.norm().abs(), dig));
  });
}

inline Reports check_unit_reduce(const SuiteOptions& o) {
  return detail::for_trials("unit_reduce", o, [](Rng& rng, const std::string& dig, Reports& out) {
    const QuadField k(kQuadFields[uniform_below(rng, 5)]);
    QuadElement base(k, Rational(0L));
    while (base.is_zero()) {
      base = QuadElement(k, Rational(static_cast<long>(uniform_int(rng, -100, 100))),
                         Rational(static_cast<long>(uniform_int(rng, -100, 100))));
    }
    const QuadElement eps0 = fundamental_unit(k);
    const QuadElement x = base * eps0.pow(static_cast<long>(uniform_int(rng, -15, 15)));
    const auto red = unit_reduce(x);
    const double bound = std::max(4.0 * height_quad(eps0), hmod(x));
    out.push_back(BoundReport::make("unit_reduce", {}, bound, height_quad(red.reduced), dig));
  });
}

inline Reports check_fundamental_units(const SuiteOptions& o) {
  return detail::for_trials("fundamental_unit", o, [](Rng& rng, const std::string& dig, Reports& out) {
    long m = 0;
    for (;;) {
      m = static_cast<long>(uniform_int(rng, 2, 500));
      bool squarefree = true;
      for (long p = 2; p * p <= m; ++p) squarefree = squarefree && m % (p * p) != 0;
      if (squarefree) break;
    }
    const QuadElement e = fundamental_unit(QuadField(m));
    const bool ok = e.norm().abs() == Rational(1L) && e.is_algebraic_integer() && e.a().sign() > 0 && e.b().sign() > 0;
    out.push_back(BoundReport::identity("fundamental_unit", ok, dig));
  });
}

inline Reports check_clear_denominators(const SuiteOptions& o) {
  return detail::for_trials("clear_denominators", o, [](Rng& rng, const std::string& dig, Reports& out) {
    const DensePoly p = random_poly(rng, static_cast<int>(uniform_int(rng, 0, 6)), 1000);
    const auto c = clear_denominators(p);
    const double h = poly_height(p);
    out.push_back(BoundReport::make("clear_denominators_a", {}, h, log_abs(c.a), dig));
    out.push_back(BoundReport::make("clear_denominators_aP", {}, h, poly_height(c.cleared), dig));
  });
}

// --- main bound and corollary ----------------------------------------------

/// d in {1, 2}, eta = 1, D in [16, 512]; instances whose hypotheses fail are
/// reported as informational.
inline Reports check_main_theorem(const SuiteOptions& o) {
  return detail::for_trials("main_theorem", o, [](Rng& rng, const std::string&, Reports& out) {
    const int d = static_cast<int>(uniform_int(rng, 1, 2));
    const auto f = random_fraction_of_degree(rng, d, 5);
    const auto width = uniform_int(rng, 16, 512);
    const auto a = uniform_int(rng, -8, 8);
    MainTheoremInput in = make_main_instance(f, a, a + width);
    in.eta = Rational(1L);
    in.degree = d;
    out.push_back(verify_main_theorem(in));
  });
}

inline Reports check_corollary(const SuiteOptions& o) {
  const int dmax = std::max(1, o.degree);
  const double c = o.c;
  return detail::for_trials("corollary", o, [dmax, c](Rng& rng, const std::string&, Reports& out) {
    const int d = static_cast<int>(uniform_int(rng, 1, dmax));
    const auto f = random_fraction_of_degree(rng, d, 3);
    out.push_back(verify_corollary_bound(f, c, integer_poles(f)));
  });
}

inline Reports check_gcd_resultant(const SuiteOptions& o) {
  const int dmax = o.degree_or(5);
  return detail::for_trials("gcd_resultant", o, [dmax](Rng& rng, const std::string& dig, Reports& out) {
    const auto f = random_fraction(rng, dmax, 1000);
    const auto xs = random_nodes(rng, f, 50, -1000, 1000);
    const auto c = gcd_divides_resultant_check(f, xs);
    out.push_back(BoundReport::identity("gcd_divides_resultant", c.all_divide, dig));
  });
}

// --- suites ------------------------------------------------------------------

using Check = std::function<Reports(const SuiteOptions&)>;

inline const std::map<std::string, std::vector<Check>>& suites() {
  static const std::map<std::string, std::vector<Check>> table = {
      {"arith", {check_height_product, check_projective_scaling, check_vp_additive, check_evaluation_height}},
      {"poly-bounds", {check_lagrange_roundtrip, check_poly_bounds, check_lagrange_basis, check_bad_points}},
      {"fractions", {check_subresultants, check_cauchy}},
      {"padic", {check_dense_subinterval, check_prime_log_sum, check_valuation_sum}},
      {"nf", {check_hmod, check_unit_reduce, check_fundamental_units, check_clear_denominators}},
      {"main", {check_main_theorem}},
      {"corollary", {check_corollary}},
      {"gcd-resultant", {check_gcd_resultant}},
  };
  return table;
}

/// Suite names in the order `all` runs them.
inline std::vector<std::string> suite_order() {
  return {"arith", "poly-bounds", "fractions", "padic", "nf", "main", "corollary", "gcd-resultant"};
}

inline Reports run_suite(const std::string& name, const SuiteOptions& o) {
  Reports out;
  const auto names = name == "all" ? suite_order() : std::vector<std::string>{name};
  for (const auto& n : names) {
    const auto it = suites().find(n);
    if (it == suites().end()) throw DomainError("unknown suite '" + name + "'");
    for (const auto& check : it->second) {
      auto part = check(o);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
  }
  return out;
}

}  // namespace weilheight
