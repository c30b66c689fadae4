#pragma once

// Integer factorization: trial division by the primes below 10^6, then
// Miller-Rabin and Brent's variant of Pollard rho. Values that fit in 64 bits
// take a native fast path; larger ones go through GMP.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "weilheight/errors.hpp"

namespace weilheight {

using Integer = mpz_class;

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;
};

namespace detail {

inline constexpr std::uint32_t kTrialLimit = 1'000'000;

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i < kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j < kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

// Deterministic for all 64-bit inputs with these witnesses.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline std::uint64_t absdiff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

// Brent's cycle detection; returns a nontrivial factor of the odd composite n.
inline std::uint64_t rho_u64(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t v) {
      return static_cast<std::uint64_t>((static_cast<unsigned __int128>(mulmod(v, v, n)) + c) % n);
    };
    std::uint64_t y = 2, x = 2, ys = 2, g = 1, q = 1;
    const std::uint64_t m = 128;
    for (std::uint64_t r = 1; g == 1; r *= 2) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, absdiff(x, y), n);
        }
        g = std::gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(absdiff(x, ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split_u64(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t f = rho_u64(n);
  split_u64(f, out);
  split_u64(n / f, out);
}

inline Integer rho_big(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    auto f = [&](const Integer& v) -> Integer {
      Integer r = v * v + c;
      mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
      return r;
    };
    Integer y = 2, x = 2, ys = 2, g = 1, q = 1;
    const unsigned long m = 128;
    for (unsigned long r = 1; g == 1; r *= 2) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * abs(x - y);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
      }
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split_big(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (n.fits_ulong_p()) {
    std::vector<std::uint64_t> small;
    split_u64(n.get_ui(), small);
    for (auto p : small) out.emplace_back(static_cast<unsigned long>(p));
    return;
  }
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    out.push_back(n);
    return;
  }
  Integer f = rho_big(n);
  split_big(f, out);
  split_big(Integer(n / f), out);
}

}  // namespace detail

/// Prime factorization of |n|, primes ascending. |n| = 1 gives an empty list.
inline std::vector<PrimePower> factorize(const Integer& n) {
  if (sgn(n) == 0) throw DomainError("factorization of zero");
  Integer rest = abs(n);
  std::vector<Integer> primes;
  if (rest.fits_ulong_p()) {
    std::uint64_t r = rest.get_ui();
    for (std::uint64_t p : detail::small_primes()) {
      if (p * p > r) break;
      while (r % p == 0) {
        primes.emplace_back(static_cast<unsigned long>(p));
        r /= p;
      }
    }
    std::vector<std::uint64_t> large;
    detail::split_u64(r, large);
    for (auto p : large) primes.emplace_back(static_cast<unsigned long>(p));
  } else {
    for (std::uint32_t p : detail::small_primes()) {
      if (rest.fits_ulong_p()) break;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
        primes.emplace_back(static_cast<unsigned long>(p));
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      }
    }
    if (rest.fits_ulong_p()) {
      // Remaining cofactor is small enough for the native path.
      for (auto& pp : factorize(rest)) {
        for (unsigned long e = 0; e < pp.exponent; ++e) primes.push_back(pp.prime);
      }
    } else {
      detail::split_big(rest, primes);
    }
  }
  std::sort(primes.begin(), primes.end());

  std::vector<PrimePower> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

/// Distinct prime divisors of |n|, ascending.
inline std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

inline bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return detail::is_prime_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

}  // namespace weilheight
