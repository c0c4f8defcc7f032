#include "cext/numeric.hpp"

#include <charconv>

namespace cext {

std::string format_rational(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') {
        throw Error(ErrorCode::InvalidArgument, "malformed rational '" + std::string(text) + "'");
      }
    }
    return Integer(std::string(part[0] == '+' ? part.substr(1) : part));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Integer floor_rational(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  Integer quotient = num / den;  // truncates toward zero
  if (num < 0 && quotient * den != num) quotient -= 1;
  return quotient;
}

Integer ceil_rational(const Rational& q) { return -floor_rational(-q); }

}  // namespace cext
