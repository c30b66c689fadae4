#pragma once

// Text formats: polynomials as comma-separated rationals, lowest degree
// first ("3/2,0,1" is 3/2 + X^2); fractions as "num | den".

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "weilheight/fraction.hpp"
#include "weilheight/nf.hpp"

namespace weilheight {

inline std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return out;
    start = pos + 1;
  }
}

inline std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (auto tok : split(text, ',')) out.push_back(parse_rational(tok));
  return out;
}

inline std::vector<std::int64_t> parse_integer_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (auto tok : split(text, ',')) {
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::int64_t v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || end != tok.data() + tok.size() || tok.empty()) {
      throw ParseError("malformed integer", std::string(tok));
    }
    out.push_back(v);
  }
  return out;
}

inline DensePoly parse_poly(std::string_view text) { return DensePoly(parse_rational_list(text)); }

inline std::string format_poly(const DensePoly& p) { return p.to_string(); }

/// "num | den", canonicalized. A bare polynomial is read as num | 1.
inline RationalFraction parse_fraction(std::string_view text) {
  const auto parts = split(text, '|');
  if (parts.size() > 2) throw ParseError("fraction has more than one '|'", std::string(text));
  const DensePoly num = parse_poly(parts[0]);
  const DensePoly den = parts.size() == 2 ? parse_poly(parts[1]) : DensePoly{Rational(1L)};
  if (den.is_zero()) throw ParseError("fraction with zero denominator", std::string(parts.size() == 2 ? parts[1] : text));
  return canonicalize_fraction(num, den);
}

inline std::string format_fraction(const RationalFraction& f) { return f.to_string(); }

/// "a,b" for a + b sqrt m.
inline QuadElement parse_quad(const QuadField& k, std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ParseError("quadratic element must be 'a,b'", std::string(text));
  return {k, parse_rational(parts[0]), parse_rational(parts[1])};
}

}  // namespace weilheight
