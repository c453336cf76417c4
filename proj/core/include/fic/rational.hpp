#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fic {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_integer(const Rational& x);

// Exact integer value; throws std::domain_error when x has a denominator.
Integer to_integer(const Rational& x);

// Same, narrowed; throws std::domain_error when non-integral or out of range.
long long to_long(const Rational& x);

// "p" for integers, "p/q" otherwise; q > 0, sign on the numerator.
std::string to_string(const Rational& x);

// Accepts "p" and "p/q"; throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& text);

}  // namespace fic
