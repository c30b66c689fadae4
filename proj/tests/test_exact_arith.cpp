#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "weilheight/exact_arith.hpp"
#include "weilheight/random.hpp"

using namespace weilheight;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

std::vector<mpq_class> raw(const std::vector<Rational>& xs) {
  std::vector<mpq_class> out;
  for (const auto& x : xs) out.push_back(x.raw());
  return out;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  const Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.num(), -3);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(Rational(0L).den(), 1);
  EXPECT_EQ(Rational(Integer(0), Integer(-7)).to_string(), "0");
  EXPECT_THROW(Rational(Integer(1), Integer(0)), DomainError);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ(q(1, 2) * q(2, 3), q(1, 3));
  EXPECT_EQ(q(1, 2) / q(1, 4), q(2));
  EXPECT_THROW(q(1) / q(0), DomainError);
  EXPECT_LT(q(-1, 2), q(1, 3));
  EXPECT_EQ(q(-7, 5).to_string(), "-7/5");
}

TEST(Rational, Parse) {
  EXPECT_EQ(parse_rational("3/2"), q(3, 2));
  EXPECT_EQ(parse_rational("-7/5"), q(-7, 5));
  EXPECT_EQ(parse_rational("12"), q(12));
  EXPECT_EQ(parse_rational("4/6"), q(2, 3));
  try {
    parse_rational("3/x");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "3/x");
  }
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_THROW(parse_rational("--1"), ParseError);
}

TEST(HeightRational, Examples) {
  EXPECT_DOUBLE_EQ(height_rational(q(3, 2)), std::log(3.0));
  EXPECT_EQ(height_rational(q(0)), 0.0);
  EXPECT_DOUBLE_EQ(height_rational(q(-7, 5)), std::log(7.0));
}

TEST(HeightRational, HugeValues) {
  Integer big;
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 400);
  EXPECT_NEAR(height_rational(Rational(big)), 400 * std::log(10.0), 1e-9);
}

TEST(HeightAffine, Examples) {
  EXPECT_DOUBLE_EQ(height_affine_tuple({q(1, 2)}), std::log(2.0));
  EXPECT_DOUBLE_EQ(height_affine_tuple({q(3), q(5)}), std::log(5.0));
  EXPECT_NEAR(height_affine_tuple({q(2, 3), q(3, 2)}), std::log(9.0), 1e-12);
  EXPECT_THROW(height_affine_tuple(std::span<const Rational>{}), DomainError);
}

TEST(HeightProjective, Examples) {
  EXPECT_DOUBLE_EQ(height_projective_tuple({q(1), q(2)}), std::log(2.0));
  EXPECT_DOUBLE_EQ(height_projective_tuple({q(2), q(4)}), std::log(2.0));
  EXPECT_DOUBLE_EQ(height_projective_tuple({q(1, 3), q(1, 2)}), std::log(3.0));
  try {
    height_projective_tuple({q(0), q(0)});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "degenerate projective point");
  }
}

TEST(HeightAffine, MatchesPlaceOracle) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = trial_rng(11, 1, t);
    std::vector<Rational> xs;
    const auto n = uniform_int(rng, 1, 5);
    for (std::int64_t i = 0; i < n; ++i) xs.push_back(random_rational(rng, 5000));
    EXPECT_NEAR(height_affine_tuple(std::span<const Rational>(xs)), oracle::affine_height_by_places(raw(xs)), 1e-9);
    if (std::any_of(xs.begin(), xs.end(), [](const Rational& x) { return !x.is_zero(); })) {
      EXPECT_NEAR(height_projective_tuple(std::span<const Rational>(xs)),
                  oracle::projective_height_by_places(raw(xs)), 1e-9);
    }
  }
}

TEST(Valuation, Examples) {
  EXPECT_EQ(vp(q(8, 3), Integer(2)), 3);
  EXPECT_EQ(vp(q(8, 3), Integer(3)), -1);
  EXPECT_EQ(vp(q(5), Integer(7)), 0);
  try {
    vp(q(0), Integer(2));
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "valuation of zero");
  }
  EXPECT_THROW(vp(q(4), Integer(4)), DomainError);
}

TEST(HeightProperties, ProductAndInverse) {
  for (std::uint64_t t = 0; t < 500; ++t) {
    Rng rng = trial_rng(12, 2, t);
    const Rational x = random_nonzero_rational(rng, 1'000'000);
    const Rational y = random_nonzero_rational(rng, 1'000'000);
    const double bound = height_rational(x) + height_rational(y);
    EXPECT_TRUE(leq_with_slack(height_rational(x * y), bound));
    EXPECT_EQ(height_rational(x.inverse()), height_rational(x));
  }
}

TEST(HeightProperties, ProjectiveScalingAndAffineEmbedding) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng = trial_rng(13, 3, t);
    std::vector<Rational> xs;
    const auto n = uniform_int(rng, 1, 6);
    for (std::int64_t i = 0; i < n; ++i) xs.push_back(random_rational(rng, 10'000));
    xs[0] = random_nonzero_rational(rng, 10'000);
    const Rational lambda = random_nonzero_rational(rng, 10'000);
    std::vector<Rational> scaled;
    for (const auto& x : xs) scaled.push_back(lambda * x);
    const double h = height_projective_tuple(std::span<const Rational>(xs));
    EXPECT_LE(std::fabs(height_projective_tuple(std::span<const Rational>(scaled)) - h), slack(h));

    std::vector<Rational> with_one{Rational(1L)};
    with_one.insert(with_one.end(), xs.begin(), xs.end());
    const double ha = height_affine_tuple(std::span<const Rational>(xs));
    EXPECT_LE(std::fabs(height_projective_tuple(std::span<const Rational>(with_one)) - ha), slack(ha));
  }
}

TEST(Valuation, Additive) {
  for (std::uint64_t t = 0; t < 500; ++t) {
    Rng rng = trial_rng(14, 4, t);
    const Rational x = random_nonzero_rational(rng, 100'000);
    const Rational y = random_nonzero_rational(rng, 100'000);
    for (long p : {2L, 3L, 5L, 7L}) {
      EXPECT_EQ(vp(x * y, Integer(p)), vp(x, Integer(p)) + vp(y, Integer(p)));
      EXPECT_EQ(vp(x, Integer(p)), oracle::valuation(x.raw(), p));
    }
  }
}

TEST(Slack, Definition) {
  EXPECT_DOUBLE_EQ(slack(0.0), 1e-9);
  EXPECT_DOUBLE_EQ(slack(-9.0), 1e-8);
  EXPECT_TRUE(leq_with_slack(1.0 + 1e-10, 1.0));
  EXPECT_FALSE(leq_with_slack(1.0 + 1e-8, 1.0));
}

TEST(Factorial, LogMatchesExactAndStirlingIsUpper) {
  EXPECT_EQ(factorial(5), 120);
  EXPECT_NEAR(log_factorial(10), std::log(3628800.0), 1e-12);
  for (unsigned long n : {2001UL, 2500UL, 5000UL}) {
    EXPECT_GE(log_factorial(n), std::lgamma(static_cast<double>(n) + 1.0));
    EXPECT_NEAR(log_factorial(n), std::lgamma(static_cast<double>(n) + 1.0), 1e-6);
  }
}
