#pragma once

// Precision-parameterized real arithmetic shared by every numeric module.
//
// Two instantiations are supported: native double, and BigFloat, an
// MPFR-backed floating type whose working precision is chosen per call
// through PrecisionGuard.  BigInt supplies exact integer arithmetic for
// binomial tables and product-form exponents.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>

namespace wallis {

using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::cpp_int;

// Scoped default working precision (decimal digits) for BigFloat values
// constructed inside the scope.  Values keep their own precision after the
// guard pops, so results can safely outlive it.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(int digits10) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(static_cast<unsigned>(digits10));
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// Guard digits for alternating sums of depth `order`: the binomial-weighted
// sum sigma_{p,m} cancels roughly m bits, i.e. 0.302*m decimal digits, so
// that many digits are added on top of the requested precision.
inline int cancellation_guard_digits(int order) {
  return static_cast<int>(std::ceil(0.30103 * (order + 1))) + 15;
}

inline double real_expm1(double v) { return std::expm1(v); }
inline double real_log1p(double v) { return std::log1p(v); }
inline BigFloat real_expm1(const BigFloat& v) { return boost::multiprecision::expm1(v); }
inline BigFloat real_log1p(const BigFloat& v) { return boost::multiprecision::log1p(v); }

template <class Real>
Real from_bigint(const BigInt& v);
template <>
inline double from_bigint<double>(const BigInt& v) {
  return v.convert_to<double>();
}
template <>
inline BigFloat from_bigint<BigFloat>(const BigInt& v) {
  return BigFloat(v);
}

inline double to_double(double v) { return v; }
inline double to_double(const BigFloat& v) { return v.convert_to<double>(); }

}  // namespace wallis
