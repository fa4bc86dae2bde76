#include "cxs/bigmath.hpp"

#include <cctype>

namespace cxs {

Rational parse_rational(const std::string& text) {
  auto fail = [&] {
    throw Error(ErrorKind::ParseError, "not an exact rational: \"" + text + "\"");
  };
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == digits_start) fail();
  BigInt num(text.substr(0, pos));
  if (pos == text.size()) return Rational(num);
  if (text[pos] != '/') fail();
  ++pos;
  std::size_t den_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == den_start || pos != text.size()) fail();
  BigInt den(text.substr(den_start));
  if (den == 0) throw Error(ErrorKind::ParseError, "rational with zero denominator: \"" + text + "\"");
  return Rational(num, den);
}

BigInt ceil_rational(const Rational& q) {
  BigInt num = numerator(q), den = denominator(q);  // den > 0 canonically
  BigInt quot = num / den;                          // truncates toward zero
  if (num % den != 0 && num > 0) ++quot;
  return quot;
}

}  // namespace cxs
