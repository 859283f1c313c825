#ifndef DMV_RATIONAL_HPP
#define DMV_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "dmv/error.hpp"

namespace dmv {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q".
[[nodiscard]] inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty integer in rational '" + std::string(text) + "'");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw Error(ErrorKind::ParseError, "bad integer in rational '" + std::string(text) + "'");
    for (; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw Error(ErrorKind::ParseError, "bad digit in rational '" + std::string(text) + "'");
    }
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

/// "p" for integers, "p/q" otherwise, in lowest terms.
[[nodiscard]] inline std::string format_rational(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace dmv

#endif  // DMV_RATIONAL_HPP
