#pragma once

/**
 * @file cauchy.hpp
 * @brief Rational function reconstruction from point values (Cauchy
 *        interpolation) through a subresultant Bezout relation, and the
 *        height bounds attached to it.
 *
 * Pipeline for a degree profile (dP, dQ) and dP + dQ + 1 nodes:
 *   S = interpolant of the values, a = least common denominator of S,
 *   T = aS, Z = prod (X - x_i), (R, U, V) = dP-th subresultant of (T, Z),
 *   F = R / (aU).
 */

#include <cmath>
#include <cstdint>
#include <vector>

#include "weilheight/fraction.hpp"
#include "weilheight/interpolate.hpp"
#include "weilheight/subresultant.hpp"

namespace weilheight {

namespace detail {

inline bool fits_all(const RationalFraction& f, const NodeSet& nodes, const std::vector<Rational>& values) {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Rational x(static_cast<long>(nodes.points()[i]));
    if (is_pole(f, x) || evaluate(f, x) != values[i]) return false;
  }
  return true;
}

inline bool is_zero_triple(const SubresultantTriple& t) { return t.R.is_zero() && t.U.is_zero() && t.V.is_zero(); }

}  // namespace detail

/// Reconstructs F with deg num <= dP and deg den <= dQ from its values at
/// exactly dP + dQ + 1 nodes. Throws DomainError when no such fraction
/// matches the data.
///
/// When the data comes from a fraction of strictly smaller profile the
/// dP-th subresultant can vanish identically; the index is then lowered to
/// the next nonzero subresultant, which carries the same quotient.
inline RationalFraction cauchy_interpolate(const NodeSet& nodes, const std::vector<Rational>& values, int dp, int dq) {
  if (dp < 0 || dq < 0) throw DomainError("negative degree bound");
  const auto count = static_cast<std::size_t>(dp + dq + 1);
  if (nodes.size() != count || values.size() != count) {
    throw DomainError("Cauchy interpolation needs exactly dP + dQ + 1 nodes and values");
  }
  const DensePoly s = lagrange_interpolate(nodes, values, dp + dq);
  if (s.is_zero()) return RationalFraction{};

  const Integer a = coefficient_lcm_denominator(s);
  const DensePoly t = s * Rational(a);
  std::vector<Rational> roots;
  for (auto x : nodes.points()) roots.emplace_back(static_cast<long>(x));
  const DensePoly z = product_of_linears(roots);

  RationalFraction out;
  if (t.degree() <= dp) {
    // S itself has the profile (deg S, 0).
    out = as_fraction(s);
  } else {
    SubresultantTriple triple = subresultant(t, z, dp);
    for (int k = dp - 1; detail::is_zero_triple(triple) && k >= 0; --k) triple = subresultant(t, z, k);
    if (triple.U.is_zero()) throw DomainError("no fraction of this degree profile fits");
    out = canonicalize_fraction(triple.R, triple.U * Rational(a));
  }
  if (out.num().degree() > dp || out.den().degree() > dq || !detail::fits_all(out, nodes, values)) {
    throw DomainError("no fraction of this degree profile fits");
  }
  return out;
}

/// Tries every split dP, dQ <= d in order of increasing dP + dQ, then
/// increasing dP, on the leading dP + dQ + 1 nodes; accepts the first result
/// that matches all supplied values. Needs at least 2d + 1 nodes.
inline RationalFraction cauchy_interpolate_auto(const NodeSet& nodes, const std::vector<Rational>& values, int d) {
  if (d < 0) throw DomainError("negative degree bound");
  if (nodes.size() < static_cast<std::size_t>(2 * d + 1)) throw DomainError("automatic split needs at least 2d + 1 nodes");
  if (values.size() != nodes.size()) throw DomainError("values and nodes differ in count");
  for (int total = 0; total <= 2 * d; ++total) {
    for (int dp = std::max(0, total - d); dp <= std::min(d, total); ++dp) {
      const int dq = total - dp;
      const auto used = static_cast<std::size_t>(total + 1);
      const std::vector<Rational> head(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(used));
      try {
        RationalFraction f = cauchy_interpolate(nodes.prefix(used), head, dp, dq);
        if (detail::fits_all(f, nodes, values)) return f;
      } catch (const DomainError&) {
        // this split does not fit; try the next one
      }
    }
  }
  throw DomainError("no fraction of total degree <= " + std::to_string(d) + " fits the values");
}

/// Upper bounds on h(R), h(U), h(V) for the k-th subresultant of integer
/// polynomials of degrees dP, dQ and heights hP, hQ.
struct SubresultantHeightBounds {
  double r = 0.0;
  double u = 0.0;
  double v = 0.0;
};

inline SubresultantHeightBounds subresultant_height_bound(int dp, int dq, int k, double hp, double hq) {
  if (k < 0 || k > std::min(dp, dq) - 1) throw DomainError("subresultant index out of range for the height bound");
  auto xlogx_half = [](double t) { return t > 0.0 ? 0.5 * t * std::log(t) : 0.0; };
  const double s = dp + dq;
  SubresultantHeightBounds b;
  b.r = (dq - k) * hp + (dp - k) * hq + xlogx_half(s - 2 * k);
  b.u = (dq - k - 1) * hp + (dp - k) * hq + xlogx_half(s - 2 * k - 1);
  b.v = (dq - k) * hp + (dp - k - 1) * hq + xlogx_half(s - 2 * k - 1);
  return b;
}

/// Height bound for a fraction of degree d reconstructed from 2d + 1 nodes
/// with value heights <= H, over Q (no class-group constant).
inline double fraction_bound_basic(int d, double h, std::int64_t width, std::int64_t magnitude) {
  if (d < 1 || width < 1 || magnitude < 1) throw DomainError("bound needs d >= 1, D >= 1, M >= 1");
  const double dd = d;
  const double big_d = static_cast<double>(width);
  return (dd + 1) * (2 * dd + 1) * h + (dd + 1) * big_d * std::log(big_d) +
         (4 * dd * dd + 3 * dd) * std::log(2.0 * static_cast<double>(magnitude)) +
         (2 * dd + 2) * std::log(2 * dd + 1);
}

}  // namespace weilheight
