#include "precision_oracle.hpp"

#include <cmath>

namespace wallis {

namespace {

void require_digits(int digits) {
  if (digits < kMinOracleDigits || digits > 10000)
    throw std::domain_error("digits must lie in [" + std::to_string(kMinOracleDigits) + ", 10000]");
}

// Widen [lo, hi] by 10 ulps of the current working precision, check the
// width target, and package the result.  Endpoints are positive for every
// target handled here.
Enclosure certify(BigFloat lo, BigFloat hi, int digits, bool strict) {
  using boost::multiprecision::pow;
  const int internal = static_cast<int>(BigFloat::default_precision());
  const BigFloat slack = 10 * pow(BigFloat(10), 1 - internal);
  lo *= 1 - slack;
  hi *= 1 + slack;
  const BigFloat target = pow(BigFloat(10), -(digits - 8));
  const bool met = (hi - lo) < ((lo + hi) / 2) * target;
  if (strict && !met)
    throw PrecisionError("enclosure width exceeds the 10^-(digits-8) target");
  return Enclosure(std::move(lo), std::move(hi), digits, met);
}

Enclosure squeeze_ratio(const BigFloat& p, int order, int digits, bool strict) {
  using std::sqrt;
  BigFloat u, u_succ;
  detail::recursive_upper_pair<BigFloat>(p, order, true, &u, &u_succ);
  BigFloat lo = sqrt(p / (p + 1)) / u_succ;
  return certify(std::move(lo), std::move(u), digits, strict);
}

}  // namespace

Enclosure::Enclosure(BigFloat lo, BigFloat hi, int digits, bool certified)
    : lo_(std::move(lo)), hi_(std::move(hi)), mid_((lo_ + hi_) / 2), digits_(digits),
      certified_(certified) {
  if (!(lo_ < hi_)) throw PrecisionError("enclosure endpoints are not ordered");
}

BigFloat Enclosure::relative_width() const {
  using boost::multiprecision::abs;
  return (hi_ - lo_) / abs(mid_);
}

std::string Enclosure::mid_str(int digits10) const {
  return mid_.str(digits10, std::ios_base::fixed);
}

int default_squeeze_order(double p, int digits) {
  require_dof(p);
  require_digits(digits);
  const double b = std::min(1.0, std::log1p(1.0 / p));
  const double t = (digits - 5) * std::log2(10.0) + std::log2(b);
  int order = std::max(0, static_cast<int>(std::floor(t)));
  while (order + 1 <= t) ++order;
  return order;
}

Enclosure ratio_reference(double p, const PrecisionConfig& cfg) {
  require_dof(p);
  require_digits(cfg.digits);
  const bool automatic = !cfg.squeeze_order.has_value();
  const int order = automatic ? default_squeeze_order(p, cfg.digits) : *cfg.squeeze_order;
  if (order < 0) throw std::domain_error("squeeze_order must be nonnegative");
  PrecisionGuard guard(cfg.digits + cancellation_guard_digits(order));
  return squeeze_ratio(BigFloat(p), order, cfg.digits, automatic);
}

Enclosure wallis_reference(double x, const PrecisionConfig& cfg) {
  require_wallis_arg(x);
  require_digits(cfg.digits);
  const bool automatic = !cfg.squeeze_order.has_value();
  const int order =
      automatic ? default_squeeze_order(2.0 * x + 1.0, cfg.digits) : *cfg.squeeze_order;
  if (order < 0) throw std::domain_error("squeeze_order must be nonnegative");
  PrecisionGuard guard(cfg.digits + cancellation_guard_digits(order));
  using std::sqrt;
  const BigFloat xb(x);
  const BigFloat p = 2 * xb + 1;
  const Enclosure r = squeeze_ratio(p, order, cfg.digits, automatic);
  const BigFloat scale = sqrt(xb + BigFloat(1) / 2);
  return certify(r.lo() * scale, r.hi() * scale, cfg.digits, automatic);
}

Enclosure digamma_diff_reference(double x, const PrecisionConfig& cfg) {
  require_wallis_arg(x);
  require_digits(cfg.digits);
  if (cfg.squeeze_order.has_value() && *cfg.squeeze_order < 1)
    throw std::domain_error("squeeze_order must be positive");
  const bool automatic = !cfg.squeeze_order.has_value();
  PrecisionGuard guard(cfg.digits + 15);
  using boost::multiprecision::pow;
  const BigFloat xb(x);
  const BigFloat p = 2 * xb + 1;
  const BigFloat inv_p = 1 / p;
  const BigFloat c = 1 / (2 * p * (p + 1));
  const BigFloat target = pow(BigFloat(10), -(cfg.digits - 5));
  BigFloat a_p = 1 / (4 * p * (p + 1));
  BigFloat a_succ = 1 / (4 * (p + 1) * (p + 2));
  BigFloat ell_p(0), ell_succ(0);
  BigFloat lo(0), hi(0);
  for (int m = 1;; ++m) {
    if (m > 1) {
      a_p *= BigFloat(m) / (2 * (p + m));
      a_succ *= BigFloat(m) / (2 * (p + 1 + m));
    }
    ell_p += a_p;
    ell_succ += a_succ;
    lo = inv_p + 2 * ell_p;
    hi = inv_p + 2 * (c - ell_succ);
    if (automatic) {
      if (hi - lo < lo * target) break;
    } else if (m >= *cfg.squeeze_order) {
      break;
    }
    if (m > 1000000) throw PrecisionError("digamma squeeze failed to reach the width target");
  }
  return certify(std::move(lo), std::move(hi), cfg.digits, automatic);
}

}  // namespace wallis
