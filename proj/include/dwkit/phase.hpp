#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <compare>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "dwkit/error.hpp"
#include "dwkit/rational.hpp"

namespace dwkit {

// An element of Q/Z, the additive angle of a root of unity: num/den stands
// for e^{2*pi*i*num/den}. Always stored reduced with 0 <= num < den. All
// cocycle values on finite groups are torsion, so this model is exact.
struct PhaseQ {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const PhaseQ&, const PhaseQ&) = default;
  friend auto operator<=>(const PhaseQ&, const PhaseQ&) = default;
};

inline PhaseQ phase(long long num, long long den) {
  require(den > 0, errc::invalid_input, "phase with non-positive denominator");
  num %= den;
  if (num < 0) num += den;
  long long g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return PhaseQ{num, den};
}

inline PhaseQ phase_add(PhaseQ a, PhaseQ b) {
  long long g = std::gcd(a.den, b.den);
  long long l = a.den / g * b.den;
  return phase(a.num * (l / a.den) + b.num * (l / b.den), l);
}

inline PhaseQ phase_neg(PhaseQ a) { return phase(-a.num, a.den); }

inline PhaseQ phase_sub(PhaseQ a, PhaseQ b) { return phase_add(a, phase_neg(b)); }

inline PhaseQ phase_scale(PhaseQ a, long long m) {
  long long r = (m % a.den + a.den) % a.den;
  return phase(a.num * r, a.den);
}

inline PhaseQ operator+(PhaseQ a, PhaseQ b) { return phase_add(a, b); }
inline PhaseQ operator-(PhaseQ a, PhaseQ b) { return phase_sub(a, b); }
inline PhaseQ operator-(PhaseQ a) { return phase_neg(a); }

inline bool is_zero(PhaseQ a) { return a.num == 0; }

inline std::string to_string(PhaseQ a) {
  return std::to_string(a.num) + "/" + std::to_string(a.den);
}

inline PhaseQ parse_phase(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return phase(std::stoll(s), 1);
    return phase(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    fail(errc::invalid_input, "cannot parse phase '" + s + "'");
  }
}

inline std::complex<double> to_complex(PhaseQ a) {
  double t = 2.0 * std::numbers::pi * double(a.num) / double(a.den);
  return {std::cos(t), std::sin(t)};
}

namespace detail {

using bigint = boost::multiprecision::cpp_int;
using bigpoly = std::vector<bigint>;  // ascending coefficients, no trailing zeros

inline void trim(bigpoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials; the divisors here are monic up to
// sign, so no fractions occur. Throws if the division leaves a remainder.
inline bigpoly divide_exact(bigpoly num, const bigpoly& den) {
  bigpoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  while (num.size() >= den.size() && !num.empty()) {
    size_t shift = num.size() - den.size();
    bigint c = num.back() / den.back();
    require(c * den.back() == num.back(), errc::invalid_input, "non-exact polynomial division");
    quot[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    trim(num);
  }
  require(num.empty(), errc::invalid_input, "non-exact polynomial division");
  return quot;
}

// Remainder of p modulo a monic divisor.
inline bigpoly mod_monic(bigpoly p, const bigpoly& den) {
  trim(p);
  while (p.size() >= den.size()) {
    size_t shift = p.size() - den.size();
    bigint c = p.back();
    for (size_t i = 0; i < den.size(); ++i) p[shift + i] -= c * den[i];
    trim(p);
  }
  return p;
}

inline bigpoly cyclotomic_big(long long n) {
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, by iterated exact division.
  std::vector<bigpoly> phi(size_t(n) + 1);
  for (long long d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bigpoly p(size_t(d) + 1, 0);
    p[0] = -1;
    p[size_t(d)] = 1;  // x^d - 1
    for (long long e = 1; e < d; ++e)
      if (d % e == 0) p = divide_exact(std::move(p), phi[size_t(e)]);
    phi[size_t(d)] = std::move(p);
  }
  return phi[size_t(n)];
}

}  // namespace detail

// Coefficients of the N-th cyclotomic polynomial, ascending.
inline std::vector<long long> cyclotomic_polynomial(long long n) {
  require(n >= 1, errc::invalid_input, "cyclotomic index must be positive");
  auto big = detail::cyclotomic_big(n);
  std::vector<long long> out;
  out.reserve(big.size());
  for (auto& c : big) out.push_back(static_cast<long long>(c));
  return out;
}

// An exact Z-linear combination of N-th roots of unity: coeffs[k] counts
// zeta_N^k. Used as the accumulator for all state sums and counting formulas;
// merging is pointwise, so parallel partial sums are schedule-independent.
class PhaseSum {
public:
  explicit PhaseSum(long long modulus) : modulus_(modulus), coeffs_(size_t(modulus), 0) {
    require(modulus >= 1, errc::invalid_input, "phase sum modulus must be positive");
  }

  long long modulus() const { return modulus_; }
  const std::vector<long long>& coeffs() const { return coeffs_; }

  void add(PhaseQ p, long long coeff = 1) {
    require(modulus_ % p.den == 0, errc::invalid_input,
            "denominator " + std::to_string(p.den) + " does not divide modulus " +
                std::to_string(modulus_));
    coeffs_[size_t(p.num * (modulus_ / p.den) % modulus_)] += coeff;
  }

  void merge(const PhaseSum& other) {
    require(other.modulus_ == modulus_, errc::invalid_input, "merging phase sums of unequal modulus");
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  }

  std::complex<double> numeric() const {
    std::complex<double> z{0.0, 0.0};
    for (long long k = 0; k < modulus_; ++k) {
      if (coeffs_[size_t(k)] == 0) continue;
      z += double(coeffs_[size_t(k)]) * to_complex(phase(k, modulus_));
    }
    return z;
  }

  // Reduces the coefficient polynomial modulo Phi_N. A constant remainder is
  // the exact rational (in fact integer) value of the sum; anything else means
  // the sum is an irrational cyclotomic integer, which signals a non-cocycle
  // input upstream.
  Rational exact_rational() const {
    detail::bigpoly p(coeffs_.begin(), coeffs_.end());
    detail::trim(p);
    if (p.empty()) return Rational{0, 1};
    auto rem = detail::mod_monic(std::move(p), detail::cyclotomic_big(modulus_));
    if (rem.size() > 1)
      fail(errc::not_rational, "sum of roots of unity is not rational (modulus " +
                                   std::to_string(modulus_) + ")");
    if (rem.empty()) return Rational{0, 1};
    require(rem[0] >= std::numeric_limits<long long>::min() &&
                rem[0] <= std::numeric_limits<long long>::max(),
            errc::invalid_input, "exact value exceeds 64-bit range");
    return Rational{static_cast<long long>(rem[0]), 1};
  }

private:
  long long modulus_;
  std::vector<long long> coeffs_;
};

inline Rational exact_rational_value(const PhaseSum& s) { return s.exact_rational(); }
inline std::complex<double> numeric_value(const PhaseSum& s) { return s.numeric(); }

// Sparse rendering as (k, coeff) pairs, e.g. "N=4:[(0,5),(2,-1)]".
inline std::string to_string(const PhaseSum& s) {
  std::string out = "N=" + std::to_string(s.modulus()) + ":[";
  bool first = true;
  for (long long k = 0; k < s.modulus(); ++k) {
    long long c = s.coeffs()[size_t(k)];
    if (c == 0) continue;
    if (!first) out += ",";
    out += "(" + std::to_string(k) + "," + std::to_string(c) + ")";
    first = false;
  }
  return out + "]";
}

inline long long lcm_checked(long long a, long long b) {
  long long l = std::lcm(a, b);
  require(l <= 1'000'000, errc::invalid_input, "phase denominator lcm beyond desk scale");
  return l;
}

}  // namespace dwkit
