#pragma once

#include <boost/rational.hpp>

#include <charconv>
#include <cstdint>
#include <string>

#include "latlin/errors.hpp"

namespace latlin {

// Exact rational scalar. All finite carrier values are rationals so that
// endpoint comparisons and exclusion-set decisions are equality-exact.
using Rational = boost::rational<std::int64_t>;

namespace detail {

inline std::int64_t parse_int64(std::string_view text, const std::string& full) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw Error(ErrorCode::ParseError, "bad integer in rational literal '" + full + "'");
  }
  return value;
}

}  // namespace detail

// Accepts "p/q", plain integers, and decimal strings ("2.5" -> 5/2).
inline Rational parse_rational(const std::string& text) {
  std::string_view s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::int64_t num = detail::parse_int64(s.substr(0, slash), text);
    std::int64_t den = detail::parse_int64(s.substr(slash + 1), text);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
    return Rational(num, den);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    bool negative = !s.empty() && s.front() == '-';
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    dot = s.find('.');
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if (frac_part.empty()) throw Error(ErrorCode::ParseError, "bad decimal literal '" + text + "'");
    std::int64_t whole = int_part.empty() ? 0 : detail::parse_int64(int_part, text);
    std::int64_t frac = detail::parse_int64(frac_part, text);
    std::int64_t scale = 1;
    for (std::size_t k = 0; k < frac_part.size(); ++k) {
      if (scale > 100'000'000'000'000'000LL) {
        throw Error(ErrorCode::ParseError, "decimal literal too precise: '" + text + "'");
      }
      scale *= 10;
    }
    Rational magnitude = Rational(whole) + Rational(frac, scale);
    return negative ? -magnitude : magnitude;
  }

  return Rational(detail::parse_int64(s, text));
}

inline std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace latlin
