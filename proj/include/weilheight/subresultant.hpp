#pragma once

/**
 * @file subresultant.hpp
 * @brief Determinantal subresultants with Bezout cofactors, resultants, and
 *        the subresultant PRS gcd over Z[X].
 *
 * Sign convention for the k-th subresultant of T (degree m) and Z (degree n):
 * the matrix rows are X^{n-k-1} T, ..., X T, T followed by
 * X^{m-k-1} Z, ..., X Z, Z. Columns hold the coefficients of
 * X^{m+n-k-1}, ..., X^{k+1}, and the last column holds the row polynomial
 * itself. R is the determinant of that matrix; U and V collect the cofactors
 * of the last column, so U*T + V*Z = R by expansion along that column.
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "weilheight/poly.hpp"

namespace weilheight {

using IntMatrix = std::vector<std::vector<Integer>>;

/// Fraction-free (Bareiss) determinant of a square integer matrix. The empty
/// matrix has determinant 1.
inline Integer bareiss_determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(m[swap_row][k]) == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = std::move(t);
      }
    }
    prev = m[k][k];
  }
  return sign > 0 ? Integer(m[n - 1][n - 1]) : Integer(-m[n - 1][n - 1]);
}

/// k-th subresultant R of (T, Z) with cofactors: U*T + V*Z = R.
struct SubresultantTriple {
  DensePoly R;
  DensePoly U;
  DensePoly V;
  int k = 0;
};

/// Largest valid index: min(deg T, deg Z), except that equal degrees allow
/// at most deg - 1.
inline int max_subresultant_index(int deg_t, int deg_z) {
  return deg_t == deg_z ? deg_t - 1 : std::min(deg_t, deg_z);
}

inline SubresultantTriple subresultant(const DensePoly& t, const DensePoly& z, int k) {
  if (t.is_zero() || z.is_zero()) throw DomainError("subresultant of a zero polynomial");
  const auto tc = t.integer_coeffs();
  const auto zc = z.integer_coeffs();
  const int m = t.degree();
  const int n = z.degree();
  if (k < 0 || k > max_subresultant_index(m, n)) {
    throw DomainError("subresultant index " + std::to_string(k) + " out of range");
  }

  const int rows_t = n - k;
  const int rows_z = m - k;
  const int s = rows_t + rows_z;
  const int ncols = m + n - k;  // coefficient columns X^{ncols-1} .. X^0

  // Entry of row polynomial X^shift * P in the column for X^power.
  auto entry = [](const std::vector<Integer>& p, int shift, int power) -> Integer {
    int idx = power - shift;
    return (idx >= 0 && idx < static_cast<int>(p.size())) ? p[static_cast<std::size_t>(idx)] : Integer(0);
  };

  IntMatrix left(static_cast<std::size_t>(s), std::vector<Integer>(static_cast<std::size_t>(s - 1)));
  for (int r = 0; r < s; ++r) {
    const bool is_t = r < rows_t;
    const int shift = is_t ? rows_t - 1 - r : rows_z - 1 - (r - rows_t);
    for (int c = 0; c < s - 1; ++c) {
      left[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = entry(is_t ? tc : zc, shift, ncols - 1 - c);
    }
  }

  std::vector<Rational> u(static_cast<std::size_t>(std::max(rows_t, 0)));
  std::vector<Rational> v(static_cast<std::size_t>(std::max(rows_z, 0)));
  for (int r = 0; r < s; ++r) {
    IntMatrix minor;
    minor.reserve(static_cast<std::size_t>(s - 1));
    for (int i = 0; i < s; ++i) {
      if (i != r) minor.push_back(left[static_cast<std::size_t>(i)]);
    }
    Integer cof = bareiss_determinant(std::move(minor));
    if ((r + s - 1) % 2 != 0) cof = -cof;
    if (r < rows_t) {
      u[static_cast<std::size_t>(rows_t - 1 - r)] = Rational(cof);
    } else {
      v[static_cast<std::size_t>(rows_z - 1 - (r - rows_t))] = Rational(cof);
    }
  }

  SubresultantTriple out;
  out.U = DensePoly(std::move(u));
  out.V = DensePoly(std::move(v));
  out.R = out.U * t + out.V * z;
  out.k = k;
  if (out.R.degree() > k) throw std::logic_error("subresultant degree exceeds its index");
  return out;
}

/// Res(P, Q) of nonzero integer polynomials under the sign convention above.
/// Two nonzero constants have resultant 1.
inline Integer resultant(const DensePoly& p, const DensePoly& q) {
  if (p.is_zero() || q.is_zero()) throw DomainError("resultant of a zero polynomial");
  if (p.degree() == 0 && q.degree() == 0) return 1;
  auto triple = subresultant(p, q, 0);
  return triple.R.is_zero() ? Integer(0) : triple.R.coeffs()[0].num();
}

namespace detail {

using IntPoly = std::vector<Integer>;

inline void trim(IntPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

inline IntPoly primitive_part(IntPoly p) {
  Integer g = content(p);
  if (sgn(g) == 0) return {};
  if (sgn(p.back()) < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, computed in Z[X].
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  int steps = static_cast<int>(a.size()) - 1 - db + 1;
  const Integer& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    Integer lead = a.back();
    for (auto& c : a) c *= lb;
    for (int j = 0; j <= db; ++j) a[static_cast<std::size_t>(da - db + j)] -= lead * b[static_cast<std::size_t>(j)];
    trim(a);
    --steps;
  }
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(std::max(steps, 0)));
  for (auto& c : a) c *= scale;
  return a;
}

inline IntPoly to_int_poly(const DensePoly& p) {
  Integer l = coefficient_lcm_denominator(p);
  IntPoly out;
  for (const auto& c : p.coeffs()) out.push_back(c.num() * (l / c.den()));
  return out;
}

}  // namespace detail

/// gcd over Q of two polynomials, normalized to a primitive integer polynomial
/// with positive leading coefficient. gcd(0, 0) = 0.
inline DensePoly prs_gcd(const DensePoly& p, const DensePoly& q) {
  using detail::IntPoly;
  IntPoly a = detail::primitive_part(detail::to_int_poly(p));
  IntPoly b = detail::primitive_part(detail::to_int_poly(q));
  if (a.empty()) return DensePoly::from_integers(b);
  if (b.empty()) return DensePoly::from_integers(a);
  if (a.size() < b.size()) std::swap(a, b);

  Integer g = 1;
  Integer h = 1;
  while (true) {
    const long delta = static_cast<long>(a.size()) - static_cast<long>(b.size());
    IntPoly r = detail::pseudo_remainder(a, b);
    if (r.empty()) return DensePoly::from_integers(detail::primitive_part(b));
    if (r.size() == 1) return DensePoly{Rational(1L)};
    a = std::move(b);
    Integer hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    Integer divisor = g * hd;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    b = std::move(r);
    g = a.back();
    // h <- g^delta / h^(delta - 1)
    if (delta == 0) {
      // unchanged
    } else {
      Integer gd;
      mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      Integer hprev;
      mpz_pow_ui(hprev.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hprev.get_mpz_t());
    }
  }
}

}  // namespace weilheight
