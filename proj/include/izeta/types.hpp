#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <cmath>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace izeta {

// Exact arithmetic scalars.  Path counts and characteristic-polynomial
// coefficients overflow int64 long before the default horizons, so every
// exact quantity lives in arbitrary precision.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<int>;      // 0/1 structure matrices
using BigMatrix = DenseMatrix<BigInt>;   // exact powers

// Euler-Mascheroni constant, double-rounded.
inline constexpr double euler_gamma = 0.5772156649015329;

// log|x| for a big integer; -inf for zero.  Takes the top 53 bits as the
// mantissa.  Returned in extended precision: the log of a 1000-bit integer is
// ~700, and representing that in double alone would cost ~1e-13 of relative
// accuracy in anything exponentiated back.
inline long double log_abs(const BigInt& x) {
  if (x == 0) return -std::numeric_limits<long double>::infinity();
  BigInt a = x < 0 ? BigInt(-x) : x;
  const unsigned bits = boost::multiprecision::msb(a);  // a in [2^bits, 2^{bits+1})
  if (bits <= 52) return std::log(static_cast<long double>(a.convert_to<double>()));
  const unsigned shift = bits - 52;
  const long double mant =
      static_cast<long double>(BigInt(a >> shift).convert_to<double>());
  return std::log(mant) + static_cast<long double>(shift) * std::log(2.0L);
}

// coeff * R^n as a double.  Small coefficients convert exactly and use the
// direct product; anything past 2^53 goes through log space so the result
// stays finite and correctly signed even when coeff alone overflows double.
// The log-space sum runs in long double: series with ~2^800-sized
// coefficients would otherwise pick up a slow per-term drift.
inline double scaled_power_term(const BigInt& coeff, double r, long n) {
  if (coeff == 0) return 0.0;
  static const BigInt exact_cap = BigInt(1) << 53;
  const bool neg = coeff < 0;
  BigInt a = neg ? BigInt(-coeff) : coeff;
  double mag;
  if (a < exact_cap) {
    mag = a.convert_to<double>() * std::pow(r, static_cast<double>(n));
  } else {
    const long double lg = log_abs(a) + static_cast<long double>(n) *
                                            std::log(static_cast<long double>(r));
    mag = static_cast<double>(std::exp(lg));
  }
  return neg ? -mag : mag;
}

// Compensated (Kahan) accumulator; series of 10^2..10^3 terms are summed
// with this so the reported tail bounds are not polluted by rounding.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
  double value() const { return sum; }
};

}  // namespace izeta
