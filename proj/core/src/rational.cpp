#include "fic/rational.hpp"

#include <limits>
#include <stdexcept>

namespace fic {

bool is_integer(const Rational& x) { return denominator(x) == 1; }

Integer to_integer(const Rational& x) {
  if (!is_integer(x)) {
    throw std::domain_error("expected an integer, got " + to_string(x));
  }
  return numerator(x);
}

long long to_long(const Rational& x) {
  Integer n = to_integer(x);
  if (n > std::numeric_limits<long long>::max() ||
      n < std::numeric_limits<long long>::min()) {
    throw std::domain_error("integer out of range: " + n.str());
  }
  return static_cast<long long>(n);
}

std::string to_string(const Rational& x) {
  if (is_integer(x)) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

}  // namespace fic
