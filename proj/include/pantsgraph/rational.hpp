#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace pg {

using Rational = boost::rational<std::int64_t>;

// "3" or "-2/5"
std::string to_string(const Rational& q);

// Accepts "p" or "p/q"; throws std::invalid_argument.
Rational parse_rational(const std::string& text);

}  // namespace pg
