#pragma once

// Extended-precision reference enclosures.
//
// The oracle squeezes each target between its own certified lower and upper
// bounds evaluated at a deep order K in MPFR arithmetic, then widens the
// endpoints by 10 units in the last place of the working precision to
// absorb rounding.  The result is a genuine enclosure, not a point
// estimate: lo < target < hi holds mathematically.
//
// The squeeze order is chosen so the truncation gap alone is below
// 10^-(digits-5); the working precision adds cancellation guard digits on
// top of `digits`, so the enclosure width is dominated by truncation, and
// the certified relative width is far smaller than 10^-digits in practice.
// When a squeeze_order is forced explicitly the width target may be
// unreachable; the enclosure is still valid and `certified()` reports
// whether the target was met.  In automatic mode a miss throws
// PrecisionError.

#include <optional>
#include <stdexcept>
#include <string>

#include "core_bounds.hpp"

namespace wallis {

inline constexpr int kMinOracleDigits = 30;

class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrecisionConfig {
  int digits = kExtendedDigits;            // requested certified decimal digits
  std::optional<int> squeeze_order = {};   // default: derived from digits and p
};

class Enclosure {
 public:
  Enclosure(BigFloat lo, BigFloat hi, int digits, bool certified);

  const BigFloat& lo() const { return lo_; }
  const BigFloat& hi() const { return hi_; }
  const BigFloat& mid() const { return mid_; }
  BigFloat width() const { return hi_ - lo_; }
  BigFloat relative_width() const;

  double lo_d() const { return to_double(lo_); }
  double hi_d() const { return to_double(hi_); }
  double mid_d() const { return to_double(mid_); }

  int digits() const { return digits_; }
  bool certified() const { return certified_; }

  std::string mid_str(int digits10) const;

 private:
  BigFloat lo_, hi_, mid_;
  int digits_;
  bool certified_;
};

// Smallest K with 2^-(K+1) * min(1, ln((p+1)/p)) < 10^-(digits-5).
int default_squeeze_order(double p, int digits);

Enclosure ratio_reference(double p, const PrecisionConfig& cfg = {});
Enclosure wallis_reference(double x, const PrecisionConfig& cfg = {});
Enclosure digamma_diff_reference(double x, const PrecisionConfig& cfg = {});

}  // namespace wallis
