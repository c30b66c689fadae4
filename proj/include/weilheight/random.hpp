#pragma once

// Seeded generators for randomized verification. The engine is mt19937_64
// (fixed by the standard) and every draw goes through uniform_below, so
// streams are identical on every platform; std distributions are avoided
// because their algorithms are implementation-defined.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "weilheight/fraction.hpp"
#include "weilheight/interpolate.hpp"

namespace weilheight {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent stream for (seed, suite, trial); results do not depend on the
/// order in which trials run.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t trial) {
  return Rng(splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ trial));
}

/// Uniform in [0, n) by rejection; n > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t r;
  do r = rng(); while (r >= limit);
  return r % n;
}

/// Uniform in [lo, hi].
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

inline bool coin(Rng& rng) { return uniform_below(rng, 2) == 1; }

/// Uniform nonzero integer with |n| <= bound.
inline std::int64_t nonzero_int(Rng& rng, std::int64_t bound) {
  const auto n = uniform_int(rng, 1, bound);
  return coin(rng) ? n : -n;
}

/// num in [-bound, bound], den in [1, bound].
inline Rational random_rational(Rng& rng, std::int64_t bound) {
  return Rational(Integer(static_cast<long>(uniform_int(rng, -bound, bound))),
                  Integer(static_cast<long>(uniform_int(rng, 1, bound))));
}

inline Rational random_nonzero_rational(Rng& rng, std::int64_t bound) {
  return Rational(Integer(static_cast<long>(nonzero_int(rng, bound))),
                  Integer(static_cast<long>(uniform_int(rng, 1, bound))));
}

/// Rational coefficients, degree exactly `degree`.
inline DensePoly random_poly(Rng& rng, int degree, std::int64_t bound) {
  std::vector<Rational> c;
  for (int i = 0; i < degree; ++i) c.push_back(random_rational(rng, bound));
  c.push_back(random_nonzero_rational(rng, bound));
  return DensePoly(std::move(c));
}

/// Integer coefficients in [-bound, bound], degree exactly `degree`.
inline DensePoly random_integer_poly(Rng& rng, int degree, std::int64_t bound) {
  std::vector<Integer> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(static_cast<long>(uniform_int(rng, -bound, bound)));
  c.emplace_back(static_cast<long>(nonzero_int(rng, bound)));
  return DensePoly::from_integers(c);
}

/// Canonical P/Q from random integer P, Q of degrees <= max_degree. The
/// canonical degree can be smaller when P and Q happen to share a factor.
inline RationalFraction random_fraction(Rng& rng, int max_degree, std::int64_t bound) {
  const int dp = static_cast<int>(uniform_int(rng, 0, max_degree));
  const int dq = static_cast<int>(uniform_int(rng, 0, max_degree));
  return canonicalize_fraction(random_integer_poly(rng, dp, bound), random_integer_poly(rng, dq, bound));
}

/// Like random_fraction but with canonical degree exactly `degree` >= 1.
inline RationalFraction random_fraction_of_degree(Rng& rng, int degree, std::int64_t bound) {
  for (;;) {
    const bool num_full = coin(rng);
    const int other = static_cast<int>(uniform_int(rng, 0, degree));
    const int dp = num_full ? degree : other;
    const int dq = num_full ? other : degree;
    auto f = canonicalize_fraction(random_integer_poly(rng, dp, bound), random_integer_poly(rng, dq, bound));
    if (f.degree() == degree) return f;
  }
}

/// `count` distinct integers of [lower, upper] avoiding the poles of f, in
/// increasing order. Needs enough room in the interval.
inline std::vector<std::int64_t> random_nodes(Rng& rng, const RationalFraction& f, std::size_t count,
                                              std::int64_t lower, std::int64_t upper) {
  std::set<std::int64_t> chosen;
  std::size_t attempts = 0;
  while (chosen.size() < count) {
    if (++attempts > 100 * count + 1000) throw DomainError("interval too small for the requested nodes");
    const auto x = uniform_int(rng, lower, upper);
    if (!is_pole(f, Rational(static_cast<long>(x)))) chosen.insert(x);
  }
  return {chosen.begin(), chosen.end()};
}

/// The first `count` integers >= start that are not poles of f.
inline std::vector<std::int64_t> consecutive_non_poles(const RationalFraction& f, std::size_t count,
                                                       std::int64_t start = 0) {
  std::vector<std::int64_t> out;
  for (auto x = start; out.size() < count; ++x) {
    if (!is_pole(f, Rational(static_cast<long>(x)))) out.push_back(x);
  }
  return out;
}

}  // namespace weilheight
