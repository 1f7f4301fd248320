#pragma once

// Exact arithmetic used throughout: multiplicities, dimensions, Euler
// characteristics and Hilbert polynomial coefficients never touch floating
// point and never use fixed-width integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pfhpd {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Weight entries, cohomological degrees and twists are small; they are
/// stored as machine integers. Everything that can grow is an Integer.
using Entry = std::int64_t;

class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline Integer binomial(const Integer& n, std::int64_t k) {
  if (k < 0) return 0;
  if (n < 0) {
    // C(n, k) for negative n via the upper-negation identity.
    Integer r = binomial(Integer(k) - n - 1, k);
    return (k % 2 == 0) ? r : Integer(-r);
  }
  if (Integer(k) > n) return 0;
  Integer result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline Integer factorial(std::int64_t n) {
  Integer r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

inline std::string to_decimal(const Integer& x) { return x.str(); }

inline std::string to_decimal(const Rational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline Integer parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  for (std::size_t j = i; j < s.size(); ++j) {
    if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("bad integer literal: " + s);
  }
  Integer v(s.substr(i));
  return s[0] == '-' ? Integer(-v) : v;
}

}  // namespace pfhpd
