#include "tsl/rational.hpp"

#include <stdexcept>

namespace tsl {

namespace {

BigInt parse_integer(const std::string& text, const std::string& whole) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("bad rational '" + whole + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad rational '" + whole + "'");
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text, text));
  const BigInt num = parse_integer(text.substr(0, slash), text);
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) { return r.str(); }

bool in_harmonic_tail(const Rational& r, const BigInt& k) {
  return r > 0 && numerator(r) == 1 && denominator(r) >= k;
}

}  // namespace tsl
