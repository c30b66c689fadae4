#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "weilheight/padic.hpp"
#include "weilheight/random.hpp"

using namespace weilheight;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

std::vector<std::int64_t> range(std::int64_t a, std::int64_t b, std::int64_t step = 1) {
  std::vector<std::int64_t> out;
  for (auto x = a; x <= b; x += step) out.push_back(x);
  return out;
}

}  // namespace

TEST(DenseSubinterval, Examples) {
  const auto w = find_dense_subinterval(0, 20, range(0, 20, 2), q(2), 2);
  EXPECT_EQ(w.lo, 0);
  EXPECT_EQ(w.hi, 8);
  EXPECT_EQ(w.members, (std::vector<std::int64_t>{0, 2, 4, 6, 8}));

  const auto full = find_dense_subinterval(0, 10, range(0, 10), q(1), 3);
  EXPECT_EQ(full.lo, 0);
  EXPECT_EQ(full.hi, 6);

  // a sparse prefix pushes the window right
  std::vector<std::int64_t> s{0, 10};
  for (std::int64_t x = 12; x <= 20; ++x) s.push_back(x);
  const auto shifted = find_dense_subinterval(0, 20, s, q(2), 3);
  EXPECT_EQ(shifted.lo, 10);
  EXPECT_GE(shifted.members.size(), 4u);
}

TEST(DenseSubinterval, Errors) {
  EXPECT_THROW(find_dense_subinterval(0, 10, {0, 5, 10}, q(1), 1), DomainError);
  EXPECT_THROW(find_dense_subinterval(0, 10, range(0, 10), q(1, 2), 1), DomainError);
  EXPECT_THROW(find_dense_subinterval(0, 10, range(0, 10), q(1), 6), DomainError);
  EXPECT_THROW(find_dense_subinterval(0, 10, range(0, 10), q(1), 0), DomainError);
  EXPECT_THROW(find_dense_subinterval(0, 10, {-1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, q(1), 1), DomainError);
  EXPECT_THROW(find_dense_subinterval(3, 3, {3}, q(1), 1), DomainError);
}

TEST(DenseSubinterval, MatchesWindowOracleOnRandomSets) {
  for (std::uint64_t t = 0; t < 500; ++t) {
    Rng rng = trial_rng(61, 0, t);
    const std::int64_t a = uniform_int(rng, -100, 100);
    const std::int64_t d = uniform_int(rng, 2, 200);
    const Rational eta(Integer(uniform_int(rng, 2, 8)), Integer(uniform_int(rng, 1, 2)));
    const Integer need_big = ceil_rational(Rational(static_cast<long>(d)) / eta);
    auto need = static_cast<std::size_t>(need_big.get_si());
    need += static_cast<std::size_t>(uniform_int(rng, 0, 3));
    need = std::min<std::size_t>(need, static_cast<std::size_t>(d + 1));
    std::vector<std::int64_t> s;
    for (auto x : range(a, a + d)) s.push_back(x);
    while (s.size() > need) s.erase(s.begin() + static_cast<std::ptrdiff_t>(uniform_below(rng, s.size())));

    const Rational half = Rational(static_cast<long>(d)) / (Rational(2L) * eta);
    const long k_max = Integer(half.num() / half.den()).get_si();
    if (k_max < 1) continue;
    const long k = uniform_int(rng, 1, k_max);

    const auto w = find_dense_subinterval(a, a + d, s, eta, k);
    const long reach = ceil_rational(Rational(2L) * eta * Rational(k)).get_si();
    EXPECT_GE(w.members.size(), static_cast<std::size_t>(k + 1));
    EXPECT_LE(w.hi - w.lo, reach);
    for (auto x : w.members) EXPECT_TRUE(x >= w.lo && x <= w.hi);

    std::vector<long> sl(s.begin(), s.end());
    // the leftmost window start, moved right to its first member
    const long start = oracle::leftmost_window(sl, a, a + d, reach, static_cast<std::size_t>(k + 1));
    ASSERT_GE(start, a);
    EXPECT_EQ(w.lo, *std::lower_bound(s.begin(), s.end(), start));
  }
}

TEST(PrimeLogSum, Examples) {
  const auto thirty = prime_log_sum(Integer(30));
  EXPECT_NEAR(thirty.sum, std::log(2.0) + std::log(3.0) / 2 + std::log(5.0) / 4, 1e-12);
  EXPECT_NEAR(thirty.bound, 2 * std::log(std::log(30.0)) + 3.5, 1e-12);
  EXPECT_TRUE(thirty.holds());

  const auto two = prime_log_sum(Integer(-2));
  EXPECT_NEAR(two.sum, std::log(2.0), 1e-12);
  EXPECT_TRUE(two.holds());

  Integer primorial = 1;
  double expect = 0.0;
  for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}) {
    primorial *= p;
    expect += std::log(static_cast<double>(p)) / (p - 1.0);
  }
  const auto big = prime_log_sum(primorial);
  EXPECT_NEAR(big.sum, expect, 1e-12);
  EXPECT_TRUE(big.holds());

  // prime powers count once
  EXPECT_NEAR(prime_log_sum(Integer(1024)).sum, std::log(2.0), 1e-12);
}

TEST(PrimeLogSum, Errors) {
  EXPECT_THROW(prime_log_sum(Integer(0)), DomainError);
  EXPECT_THROW(prime_log_sum(Integer(1)), DomainError);
  EXPECT_THROW(prime_log_sum(Integer(-1)), DomainError);
}

TEST(PrimeLogSum, HoldsForRandomIntegers) {
  for (std::uint64_t t = 0; t < 1000; ++t) {
    Rng rng = trial_rng(62, 0, t);
    Integer r = 1;
    const auto factors = uniform_int(rng, 1, 6);
    for (std::int64_t i = 0; i < factors; ++i) r *= uniform_int(rng, 2, 1'000'000);
    EXPECT_TRUE(prime_log_sum(r).holds()) << r;
  }
}

TEST(ValuationSum, Examples) {
  const NodeSet nodes = NodeSet::spanning(range(1, 8));
  // sum of v_2(x) for x in 1..8 is v_2(8!) = 7; each term below beta = 10
  const auto x = valuation_sum_bound_check(DensePoly{q(0), q(1)}, Integer(2), nodes, 10);
  EXPECT_EQ(x.lhs, oracle::legendre(8, 2));
  EXPECT_EQ(x.lhs, 7);
  EXPECT_NEAR(x.rhs, 10 + std::log(7.0) / std::log(2.0) + 7, 1e-12);
  EXPECT_TRUE(x.holds());

  const auto one = valuation_sum_bound_check(DensePoly{q(1)}, Integer(2), nodes, 10);
  EXPECT_EQ(one.lhs, 0);
  EXPECT_EQ(one.rhs, 0.0);
  EXPECT_TRUE(one.holds());

  // X^2 + 1 vanishes mod 5 at 2 and 3; at 7 it is 50
  const auto sq = valuation_sum_bound_check(DensePoly{q(1), q(0), q(1)}, Integer(5), NodeSet::spanning(range(0, 7)), 1);
  EXPECT_EQ(sq.lhs, 3);
  EXPECT_TRUE(sq.holds());

  // a root among the nodes contributes beta
  const auto root = valuation_sum_bound_check(DensePoly{q(-3), q(1)}, Integer(3), NodeSet::spanning(range(0, 4)), 4);
  EXPECT_EQ(root.lhs, 1 + 4);
}

TEST(ValuationSum, Errors) {
  const NodeSet nodes = NodeSet::spanning(range(0, 4));
  EXPECT_THROW(valuation_sum_bound_check(DensePoly{q(0), q(1)}, Integer(4), nodes, 1), DomainError);
  EXPECT_THROW(valuation_sum_bound_check(DensePoly{q(0), q(2)}, Integer(2), nodes, 1), DomainError);
  EXPECT_THROW(valuation_sum_bound_check(DensePoly{}, Integer(2), nodes, 1), DomainError);
  EXPECT_THROW(valuation_sum_bound_check(DensePoly{q(1)}, Integer(2), nodes, -1), DomainError);
}

TEST(ValuationSum, HoldsAndMatchesBruteForce) {
  for (std::uint64_t t = 0; t < 500; ++t) {
    Rng rng = trial_rng(63, 0, t);
    const long p = std::vector<long>{2, 3, 5, 7, 11}[uniform_below(rng, 5)];
    DensePoly poly;
    do poly = random_integer_poly(rng, static_cast<int>(uniform_int(rng, 0, 5)), 200);
    while (poly_vp(poly, Integer(p)) != 0);
    const std::int64_t a = uniform_int(rng, -60, 60);
    const std::int64_t b = a + uniform_int(rng, 1, 80);
    const auto count = static_cast<std::size_t>(uniform_int(rng, 1, b - a + 1));
    const NodeSet nodes(random_nodes(rng, RationalFraction{}, count, a, b), a, b);
    const long beta = uniform_int(rng, 0, 12);
    const auto check = valuation_sum_bound_check(poly, Integer(p), nodes, beta);
    EXPECT_TRUE(check.holds());
    long expect = 0;
    for (auto x : nodes.points()) {
      const mpq_class v = poly(q(x)).raw();
      expect += v == 0 ? beta : std::min(beta, oracle::valuation(v, p));
    }
    EXPECT_EQ(check.lhs, expect);
  }
}
