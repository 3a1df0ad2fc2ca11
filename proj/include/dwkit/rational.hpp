#pragma once

#include <cstdlib>
#include <numeric>
#include <string>

#include "dwkit/error.hpp"

namespace dwkit {

// Exact rational with 64-bit components. All quantities in this library are
// desk scale (counts of flat fields, small normalizations), so 64 bits are
// ample once sums have been certified by the cyclotomic reduction.
struct Rational {
  long long num = 0;
  long long den = 1;  // > 0, gcd(|num|, den) = 1

  friend bool operator==(const Rational&, const Rational&) = default;
};

inline Rational make_rational(long long num, long long den) {
  require(den != 0, errc::invalid_input, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

inline Rational operator+(const Rational& a, const Rational& b) {
  return make_rational(a.num * b.den + b.num * a.den, a.den * b.den);
}

inline Rational operator*(const Rational& a, const Rational& b) {
  return make_rational(a.num * b.num, a.den * b.den);
}

inline bool is_integer(const Rational& r) { return r.den == 1; }

inline std::string to_string(const Rational& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return make_rational(std::stoll(s), 1);
    return make_rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(errc::invalid_input, "cannot parse rational '" + s + "'");
  }
}

}  // namespace dwkit
