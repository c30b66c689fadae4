#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "weilheight/cauchy.hpp"
#include "weilheight/random.hpp"
#include "weilheight/text.hpp"

using namespace weilheight;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

std::vector<mpq_class> raw(const DensePoly& p) {
  std::vector<mpq_class> out;
  for (const auto& c : p.coeffs()) out.push_back(c.raw());
  return out;
}

std::vector<Rational> values_of(const RationalFraction& f, const NodeSet& nodes) {
  std::vector<Rational> v;
  for (auto x : nodes.points()) v.push_back(evaluate(f, q(x)));
  return v;
}

NodeSet nodes_avoiding(Rng& rng, const RationalFraction& f, std::size_t count, std::int64_t extra) {
  const auto a = uniform_int(rng, -50, 50);
  const auto b = a + static_cast<std::int64_t>(count) + 6 + uniform_int(rng, 0, extra);
  return NodeSet(random_nodes(rng, f, count, a, b), a, b);
}

}  // namespace

TEST(Subresultant, GoldenSignConvention) {
  const auto s = subresultant(DensePoly{q(-1), q(1)}, DensePoly{q(1), q(1)}, 0);
  EXPECT_EQ(s.R, DensePoly{q(2)});
  EXPECT_EQ(s.U, DensePoly{q(-1)});
  EXPECT_EQ(s.V, DensePoly{q(1)});
  EXPECT_EQ(resultant(DensePoly{q(1), q(1)}, DensePoly{q(-1), q(1)}), -2);
}

TEST(Subresultant, SharedRootGivesZeroResultant) {
  const auto s = subresultant(DensePoly{q(0), q(0), q(1)}, DensePoly{q(0), q(1)}, 0);
  EXPECT_TRUE(s.R.is_zero());
}

TEST(Subresultant, IndexRange) {
  const DensePoly t{q(1), q(2), q(3)};
  const DensePoly z{q(4), q(5), q(6)};
  EXPECT_THROW(subresultant(t, z, 2), DomainError);
  EXPECT_THROW(subresultant(t, z, -1), DomainError);
  EXPECT_NO_THROW(subresultant(t, DensePoly{q(1), q(0), q(0), q(1)}, 2));
  EXPECT_THROW(subresultant(DensePoly{}, z, 0), DomainError);
  EXPECT_THROW(subresultant(DensePoly{q(1, 2), q(1)}, z, 0), DomainError);
}

TEST(Subresultant, ResultantMatchesSylvesterDeterminant) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng = trial_rng(51, 0, t);
    const DensePoly p = random_integer_poly(rng, static_cast<int>(uniform_int(rng, 1, 6)), 100);
    const DensePoly z = random_integer_poly(rng, static_cast<int>(uniform_int(rng, 1, 6)), 100);
    EXPECT_EQ(mpq_class(resultant(p, z)), oracle::sylvester_resultant(raw(p), raw(z)));
  }
}

TEST(Subresultant, BezoutIdentityAndDegrees) {
  for (std::uint64_t t = 0; t < 150; ++t) {
    Rng rng = trial_rng(52, 0, t);
    const int m = static_cast<int>(uniform_int(rng, 1, 8));
    const int n = static_cast<int>(uniform_int(rng, 1, 8));
    const DensePoly p = random_integer_poly(rng, m, 10'000);
    const DensePoly z = random_integer_poly(rng, n, 10'000);
    for (int k = 0; k <= max_subresultant_index(m, n); ++k) {
      const auto s = subresultant(p, z, k);
      EXPECT_EQ(s.U * p + s.V * z, s.R);
      EXPECT_LE(s.R.degree(), k);
      EXPECT_LE(s.U.degree(), n - k - 1);
      EXPECT_LE(s.V.degree(), m - k - 1);
      EXPECT_TRUE(s.R.is_integral() && s.U.is_integral() && s.V.is_integral());
    }
  }
}

TEST(Subresultant, DegreeFourAndFive) {
  Rng rng = trial_rng(53, 0, 0);
  const DensePoly t = random_integer_poly(rng, 4, 50);
  const DensePoly z = random_integer_poly(rng, 5, 50);
  const auto s = subresultant(t, z, 2);
  EXPECT_EQ(s.U * t + s.V * z, s.R);
}

TEST(SubresultantHeightBound, Examples) {
  const auto a = subresultant_height_bound(1, 1, 0, 0, 0);
  EXPECT_NEAR(a.r, std::log(2.0), 1e-12);
  EXPECT_NEAR(a.u, 0.0, 1e-12);
  EXPECT_NEAR(a.v, 0.0, 1e-12);
  const auto b = subresultant_height_bound(2, 2, 1, std::log(3.0), std::log(5.0));
  EXPECT_NEAR(b.r, std::log(3.0) + std::log(5.0) + std::log(2.0), 1e-12);
  const double hp = 1.5;
  const double hq = 0.25;
  const auto c = subresultant_height_bound(3, 2, 0, hp, hq);
  EXPECT_NEAR(c.r, 2 * hp + 3 * hq + 2.5 * std::log(5.0), 1e-12);
  EXPECT_NEAR(c.u, 1 * hp + 3 * hq + 2.0 * std::log(4.0), 1e-12);
  EXPECT_NEAR(c.v, 2 * hp + 2 * hq + 2.0 * std::log(4.0), 1e-12);
  EXPECT_THROW(subresultant_height_bound(2, 2, 2, 0, 0), DomainError);
}

TEST(SubresultantHeightBound, HoldsOnRandomPairs) {
  for (std::uint64_t t = 0; t < 200; ++t) {
    Rng rng = trial_rng(54, 0, t);
    const int m = static_cast<int>(uniform_int(rng, 1, 8));
    const int n = static_cast<int>(uniform_int(rng, 1, 8));
    const DensePoly p = random_integer_poly(rng, m, 10'000);
    const DensePoly z = random_integer_poly(rng, n, 10'000);
    for (int k = 0; k <= std::min(m, n) - 1; ++k) {
      const auto s = subresultant(p, z, k);
      const auto b = subresultant_height_bound(m, n, k, poly_height(p), poly_height(z));
      EXPECT_TRUE(leq_with_slack(poly_height(s.R), b.r));
      EXPECT_TRUE(leq_with_slack(poly_height(s.U), b.u));
      EXPECT_TRUE(leq_with_slack(poly_height(s.V), b.v));
    }
  }
}

TEST(Cauchy, Examples) {
  EXPECT_EQ(cauchy_interpolate(NodeSet::spanning({0, 1}), {q(1), q(1, 2)}, 0, 1), parse_fraction("1 | 1,1"));
  EXPECT_EQ(cauchy_interpolate(NodeSet::spanning({0, 1}), {q(0), q(1)}, 1, 0), parse_fraction("0,1 | 1"));
  const auto f = parse_fraction("-1,0,1 | 1,0,1");
  const NodeSet nodes = NodeSet::spanning({0, 1, 2, 3, 4});
  EXPECT_EQ(cauchy_interpolate(nodes, values_of(f, nodes), 2, 2), f);
}

TEST(Cauchy, NodeCountAndUnfittableData) {
  EXPECT_THROW(cauchy_interpolate(NodeSet::spanning({0, 1, 2}), {q(1), q(2), q(3)}, 0, 1), DomainError);
  // 0, 1, 0 is not of the form a/(X + b) or a constant
  try {
    cauchy_interpolate(NodeSet::spanning({0, 1, 2}), {q(0), q(1), q(0)}, 1, 1);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "no fraction of this degree profile fits");
  }
}

TEST(Cauchy, DegenerateSplitFromSmallerFraction) {
  // values of 1/(X+1) fed with the larger split (1, 1)
  const auto f = parse_fraction("1 | 1,1");
  const NodeSet nodes = NodeSet::spanning({0, 1, 2});
  EXPECT_EQ(cauchy_interpolate(nodes, values_of(f, nodes), 1, 1), f);
  const auto c = parse_fraction("5 | 1");
  EXPECT_EQ(cauchy_interpolate(nodes, values_of(c, nodes), 1, 1), c);
}

TEST(CauchyAuto, Examples) {
  const NodeSet three = NodeSet::spanning({0, 1, 2});
  EXPECT_EQ(cauchy_interpolate_auto(three, {q(1), q(1, 2), q(1, 3)}, 1), parse_fraction("1 | 1,1"));
  EXPECT_EQ(cauchy_interpolate_auto(three, {q(5), q(5), q(5)}, 1), parse_fraction("5 | 1"));
  const auto f = parse_fraction("1,2 | -5,1");
  const NodeSet five = NodeSet::spanning({0, 1, 2, 3, 4});
  EXPECT_EQ(cauchy_interpolate_auto(five, values_of(f, five), 2), f);
  EXPECT_THROW(cauchy_interpolate_auto(three, {q(0), q(1), q(0)}, 1), DomainError);
  EXPECT_THROW(cauchy_interpolate_auto(three, {q(0), q(1), q(0)}, 2), DomainError);
}

TEST(Cauchy, ReconstructionAndBasicBound) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = trial_rng(55, 0, t);
    const auto f = random_fraction(rng, 5, 1'000'000);
    ASSERT_LE(fraction_height(f), 15.0);
    const int dp = std::max(0, f.num().degree());
    const int dq = f.den().degree();
    const NodeSet nodes = nodes_avoiding(rng, f, static_cast<std::size_t>(dp + dq + 1), 40);
    EXPECT_EQ(cauchy_interpolate(nodes, values_of(f, nodes), dp, dq), f);

    const int d = std::max(1, f.degree());
    const NodeSet wide = nodes_avoiding(rng, f, static_cast<std::size_t>(2 * d + 1), 40);
    const auto values = values_of(f, wide);
    EXPECT_EQ(cauchy_interpolate_auto(wide, values, d), f);
    double h = 0.0;
    for (const auto& v : values) h = std::max(h, height_rational(v));
    EXPECT_TRUE(leq_with_slack(fraction_height(f), fraction_bound_basic(d, h, wide.width(), wide.magnitude())));
  }
}

TEST(FractionBoundBasic, Examples) {
  const double base = 4 * std::log(2.0) + 7 * std::log(4.0) + 4 * std::log(3.0);
  EXPECT_NEAR(fraction_bound_basic(1, 0, 2, 2), base, 1e-12);
  EXPECT_NEAR(fraction_bound_basic(1, 1, 2, 2), base + 6, 1e-12);
  EXPECT_NEAR(fraction_bound_basic(2, 0, 4, 4), 12 * std::log(4.0) + 22 * std::log(8.0) + 6 * std::log(5.0), 1e-12);
}
