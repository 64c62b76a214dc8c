#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace leafbound {

/// Exact rational, always reduced with a positive denominator.
using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational &r) {
  if (r.denominator() == 1)
    return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Smallest integer >= r.
inline std::int64_t ceil(const Rational &r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0)
    ++q;
  return q;
}

/// Parses "p" or "p/q".
Rational parse_rational(const std::string &text);

} // namespace leafbound
