#include "pantsgraph/rational.hpp"

#include <stdexcept>

namespace pg {

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      long long p = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing characters");
      return Rational(p);
    }
    std::string num = text.substr(0, slash), den = text.substr(slash + 1);
    long long p = std::stoll(num, &used);
    if (used != num.size()) throw std::invalid_argument("bad numerator");
    long long q = std::stoll(den, &used);
    if (used != den.size()) throw std::invalid_argument("bad denominator");
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

}  // namespace pg
