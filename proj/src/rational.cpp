#include "graphon/rational.hpp"

namespace graphon {

Rational parse_rational(std::string_view text) {
  const auto fail = [&]() -> Rational {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  };

  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && text[pos] == '-') {
    negative = true;
    ++pos;
  }
  const std::size_t num_begin = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == num_begin) return fail();
  BigInt numerator(std::string(text.substr(num_begin, pos - num_begin)));

  BigInt denominator = 1;
  if (pos < text.size()) {
    if (text[pos] != '/') return fail();
    ++pos;
    const std::size_t den_begin = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == den_begin || pos != text.size()) return fail();
    denominator = BigInt(std::string(text.substr(den_begin, pos - den_begin)));
    if (denominator == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) numerator = -numerator;
  return Rational(numerator, denominator);
}

std::string format_rational(const Rational& r) {
  std::string out = numerator(r).str();
  if (denominator(r) != 1) {
    out += '/';
    out += denominator(r).str();
  }
  return out;
}

}  // namespace graphon
