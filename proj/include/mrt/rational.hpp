#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <charconv>

#include <boost/rational.hpp>

#include "errors.hpp"

namespace mrt {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace detail {

inline std::int64_t parse_int(std::string_view s) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
    throw invalid_argument("not an integer: '" + std::string(s) + "'");
  return value;
}

}  // namespace detail

// Accepts "a" or "a/b".
inline Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_int(s));
  auto num = detail::parse_int(s.substr(0, slash));
  auto den = detail::parse_int(s.substr(slash + 1));
  if (den == 0) throw invalid_argument("zero denominator in '" + std::string(s) + "'");
  return Rational(num, den);
}

}  // namespace mrt
