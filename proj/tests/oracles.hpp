#pragma once

// Reference computations for the tests. They deliberately avoid the library's
// own algorithms: plain trial division, dense Gaussian elimination over
// mpq_class, brute-force searches.

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

/// Prime -> exponent of |n| by trial division. n != 0.
inline std::map<long, long> trial_factor(mpz_class n) {
  n = abs(n);
  std::map<long, long> out;
  for (long p = 2; mpz_class(p) * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) out[n.get_si()] += 1;
  return out;
}

inline long valuation(mpz_class n, long p) {
  long v = 0;
  while (n != 0 && n % p == 0) {
    ++v;
    n /= p;
  }
  return v;
}

inline long valuation(const mpq_class& x, long p) { return valuation(x.get_num(), p) - valuation(x.get_den(), p); }

/// Sum over places of log max{1, max_i |x_i|_v}, the places being infinity
/// and every prime dividing a numerator or denominator.
inline double affine_height_by_places(const std::vector<mpq_class>& xs) {
  std::set<long> primes;
  for (const auto& x : xs) {
    if (x == 0) continue;
    for (auto [p, e] : trial_factor(x.get_num())) primes.insert(p);
    for (auto [p, e] : trial_factor(x.get_den())) primes.insert(p);
  }
  double arch = 0.0;
  for (const auto& x : xs) arch = std::max(arch, std::log(std::fabs(x.get_d())));
  double total = std::max(0.0, arch);
  for (long p : primes) {
    long most_negative = 0;  // log max{1, |x|_p} = max{0, -v_p(x)} log p
    for (const auto& x : xs) {
      if (x != 0) most_negative = std::min(most_negative, valuation(x, p));
    }
    total += static_cast<double>(-most_negative) * std::log(static_cast<double>(p));
  }
  return total;
}

/// Sum over places of log max_i |x_i|_v; not all x_i zero.
inline double projective_height_by_places(const std::vector<mpq_class>& xs) {
  std::set<long> primes;
  for (const auto& x : xs) {
    if (x == 0) continue;
    for (auto [p, e] : trial_factor(x.get_num())) primes.insert(p);
    for (auto [p, e] : trial_factor(x.get_den())) primes.insert(p);
  }
  double arch = -1e300;
  for (const auto& x : xs) {
    if (x != 0) arch = std::max(arch, std::log(std::fabs(x.get_d())));
  }
  double total = arch;
  for (long p : primes) {
    long least = 1L << 40;
    for (const auto& x : xs) {
      if (x != 0) least = std::min(least, valuation(x, p));
    }
    total += -static_cast<double>(least) * std::log(static_cast<double>(p));
  }
  return total;
}

using Matrix = std::vector<std::vector<mpq_class>>;

/// Determinant by Gaussian elimination with row swaps.
inline mpq_class determinant(Matrix a) {
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// Res(p, q) as the Sylvester determinant, coefficients low-first. Rows are
/// deg q shifts of p followed by deg p shifts of q, highest power first.
inline mpq_class sylvester_resultant(const std::vector<mpq_class>& p, const std::vector<mpq_class>& q) {
  const std::size_t m = p.size() - 1;
  const std::size_t n = q.size() - 1;
  const std::size_t s = m + n;
  if (s == 0) return 1;
  Matrix a(s, std::vector<mpq_class>(s, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) a[i][i + j] = p[m - j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) a[n + i][i + j] = q[n - j];
  }
  return determinant(a);
}

/// Coefficients (low-first) of the polynomial of degree < xs.size() through
/// the points, by solving the Vandermonde system.
inline std::vector<mpq_class> solve_interpolation(const std::vector<long>& xs, const std::vector<mpq_class>& ys) {
  const std::size_t n = xs.size();
  Matrix a(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class pw = 1;
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = pw;
      pw *= xs[i];
    }
    a[i][n] = ys[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (a[pivot][c] == 0) ++pivot;
    std::swap(a[pivot], a[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<mpq_class> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][n] / a[i][i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

/// Smallest unit > 1 of the ring of integers of Q(sqrt m) by brute force:
/// (x + y sqrt m)/2 with x^2 - m y^2 = +-4 when m = 1 mod 4, else
/// x + y sqrt m with x^2 - m y^2 = +-1. Returns (a, b) with the unit a + b sqrt m.
inline std::pair<mpq_class, mpq_class> pell_unit(long m) {
  const bool half = m % 4 == 1;
  const long target = half ? 4 : 1;
  for (long y = 1;; ++y) {
    const mpz_class my2 = mpz_class(m) * y * y;
    for (long sign : {-1L, 1L}) {
      const mpz_class x2 = my2 + sign * target;
      if (x2 <= 0) continue;
      mpz_class x = sqrt(x2);
      if (x * x != x2) continue;
      if (half) {
        std::pair<mpq_class, mpq_class> out{mpq_class(x, 2), mpq_class(y, 2)};
        out.first.canonicalize();
        out.second.canonicalize();
        return out;
      }
      return {mpq_class(x), mpq_class(y)};
    }
  }
}

/// v_p(n!) by Legendre's formula.
inline long legendre(long n, long p) {
  long v = 0;
  for (long q = p; q <= n; q *= p) v += n / q;
  return v;
}

/// Every window [lo, lo + reach] over all integer lo, returning the smallest
/// lo whose window holds at least need elements of s; -1 if none.
inline long leftmost_window(const std::vector<long>& s, long lower, long upper, long reach, std::size_t need) {
  for (long lo = lower; lo <= upper; ++lo) {
    std::size_t c = 0;
    for (long x : s) c += (x >= lo && x <= lo + reach) ? 1 : 0;
    if (c >= need) return lo;
  }
  return -1;
}

}  // namespace oracle
