#ifndef FATPOINT_RATIONAL_HPP
#define FATPOINT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace fatpoint {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Always "p/q" with q > 0, so 1 prints as "1/1".
inline std::string to_fraction_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

/// "p/q" when q != 1, otherwise "p".
inline std::string to_short_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) {
    return boost::multiprecision::numerator(q).str();
  }
  return to_fraction_string(q);
}

/// Accepts "p", "-p", "p/q".
inline Rational parse_rational(std::string_view text) {
  auto is_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto to_int = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(text)) throw std::invalid_argument("bad rational: " + std::string(text));
    return Rational(to_int(text));
  }
  auto num = text.substr(0, slash);
  auto den = text.substr(slash + 1);
  if (!is_int(num) || !is_int(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("bad rational: " + std::string(text));
  }
  Integer d = to_int(den);
  if (d == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(to_int(num), d);
}

}  // namespace fatpoint

#endif
