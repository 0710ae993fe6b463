#include "core_bounds.hpp"

#include <cmath>
#include <string>

namespace wallis {

namespace {

int extended_digits_for(int order) { return kExtendedDigits + cancellation_guard_digits(order); }

template <class NativeFn, class ExtendedFn>
double dispatch_by_order(int k, NativeFn native, ExtendedFn extended) {
  if (k <= kNativeOrderCap) return native();
  PrecisionGuard guard(extended_digits_for(k));
  return to_double(extended());
}

}  // namespace

void require_dof(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::domain_error("p must be positive");
}

void require_wallis_arg(double x) {
  if (!(x > -0.5) || !std::isfinite(x)) throw std::domain_error("x must exceed -0.5");
}

void require_order(int k) {
  if (k < 0 || k > kMaxOrder)
    throw std::domain_error("k must lie in [0, " + std::to_string(kMaxOrder) + "]");
}

ExponentCache::ExponentCache(int order) : order_(order) {
  require_order(order);
  std::vector<BigInt> h{BigInt(0)};
  std::vector<BigInt> choose{BigInt(1)};
  for (int k = 0; k < order; ++k) {
    choose.push_back(BigInt(1));
    for (int j = k; j >= 1; --j) choose[static_cast<size_t>(j)] += choose[static_cast<size_t>(j) - 1];
    std::vector<BigInt> next(static_cast<size_t>(k) + 2);
    for (int j = 0; j <= k; ++j)
      next[static_cast<size_t>(j)] = 2 * h[static_cast<size_t>(j)] + choose[static_cast<size_t>(j)];
    next[static_cast<size_t>(k) + 1] = 1;
    h = std::move(next);
  }
  h_ = std::move(h);
}

ExponentCache build_exponent_cache(int order) { return ExponentCache(order); }

double sigma(double p, int m) {
  require_dof(p);
  if (m < 1 || m > kMaxOrder)
    throw std::domain_error("m must lie in [1, " + std::to_string(kMaxOrder) + "]");
  // Repeated mean value theorem on ln pins the magnitude to
  //   (m-1)!/(p+m)^m <= |sigma_{p,m}| <= (m-1)!/p^m,
  // while the alternating sum carries roughly m 2^m max|ln(p+j)| eps of
  // rounding noise.  Pick the working precision so the returned value
  // resolves that floor, otherwise the sign itself would be noise.
  const double lam = std::max(std::abs(std::log(p)), std::log(p + m));
  const double log10_floor = std::lgamma(m) / std::log(10.0) - m * std::log10(p + m);
  const double log10_noise = std::log10(m * (lam + 1.0)) + m * std::log10(2.0) - 15.3;
  if (m <= kNativeOrderCap && log10_floor > log10_noise + 3.0)
    return detail::sigma_impl<double>(p, m);
  const int resolve = static_cast<int>(std::ceil(log10_noise + 15.3 - log10_floor)) + 25;
  PrecisionGuard guard(std::max(extended_digits_for(m), resolve));
  return to_double(detail::sigma_impl<BigFloat>(BigFloat(p), m));
}

double upper_bound_direct(double p, int k, OpCount* tally) {
  require_dof(p);
  require_order(k);
  return dispatch_by_order(
      k, [&] { return detail::upper_bound_direct_impl<double>(p, k, tally); },
      [&] { return detail::upper_bound_direct_impl<BigFloat>(BigFloat(p), k, tally); });
}

double upper_bound_recursive(double p, int k, OpCount* tally) {
  require_dof(p);
  require_order(k);
  return dispatch_by_order(
      k,
      [&] {
        double u = 0.0, unused = 0.0;
        detail::recursive_upper_pair<double>(p, k, false, &u, &unused, tally);
        return u;
      },
      [&] {
        BigFloat u, unused;
        detail::recursive_upper_pair<BigFloat>(BigFloat(p), k, false, &u, &unused, tally);
        return u;
      });
}

double upper_bound_cached(double p, const ExponentCache& cache, OpCount* tally) {
  require_dof(p);
  return dispatch_by_order(
      cache.order(), [&] { return detail::upper_bound_cached_impl<double>(p, cache, tally); },
      [&] { return detail::upper_bound_cached_impl<BigFloat>(BigFloat(p), cache, tally); });
}

double lower_bound(double p, int k) {
  require_dof(p);
  require_order(k);
  const double u_succ = upper_bound_direct(p + 1.0, k);
  return std::sqrt(p / (p + 1.0)) / u_succ;
}

BoundPair ratio_bounds(double p, int k, Strategy strategy, OpCount* tally) {
  require_dof(p);
  require_order(k);
  double u = 0.0, u_succ = 0.0;
  switch (strategy) {
    case Strategy::Direct:
      u = upper_bound_direct(p, k, tally);
      u_succ = upper_bound_direct(p + 1.0, k, tally);
      break;
    case Strategy::Recursive:
      if (k <= kNativeOrderCap) {
        detail::recursive_upper_pair<double>(p, k, true, &u, &u_succ, tally);
      } else {
        PrecisionGuard guard(extended_digits_for(k));
        BigFloat ub, ub_succ;
        detail::recursive_upper_pair<BigFloat>(BigFloat(p), k, true, &ub, &ub_succ, tally);
        u = to_double(ub);
        u_succ = to_double(ub_succ);
      }
      break;
    case Strategy::Cached: {
      const ExponentCache cache(k);
      u = upper_bound_cached(p, cache, tally);
      u_succ = upper_bound_cached(p + 1.0, cache, tally);
      break;
    }
  }
  // The lower endpoint is always assembled in double as
  // fl( fl(sqrt(p/(p+1))) / U_k(p+1) ), so L_k * U_k(p+1) recovers
  // sqrt(p/(p+1)) to within 2 ulps regardless of strategy or backend.
  const double s = std::sqrt(p / (p + 1.0));
  if (tally) {
    tally->adds += 1;
    tally->mults += 2;
    tally->pows += 1;
  }
  return BoundPair{s / u_succ, u, k, Target::RatioR};
}

BoundPair bounds_recursive(double p, int k) { return ratio_bounds(p, k, Strategy::Recursive); }

BoundPair wallis_bounds(double x, int k, Strategy strategy, OpCount* tally) {
  require_wallis_arg(x);
  require_order(k);
  const double p = 2.0 * x + 1.0;
  BoundPair rb = ratio_bounds(p, k, strategy, tally);
  const double scale = std::sqrt(x + 0.5);
  if (tally) {
    tally->adds += 2;
    tally->mults += 3;
    tally->pows += 1;
  }
  return BoundPair{rb.lower * scale, rb.upper * scale, k, Target::WallisW};
}

ShiftResult shift_normalize(double x, double x_min) {
  require_wallis_arg(x);
  if (!std::isfinite(x_min)) throw std::domain_error("x_min must be finite");
  if (x_min - x > 1e9) throw std::domain_error("shift from x to x_min exceeds 10^9 steps");
  int m = 0;
  if (x < x_min) {
    m = static_cast<int>(std::ceil(x_min - x));
    while (x + m < x_min) ++m;
    while (m > 0 && x + (m - 1) >= x_min) --m;
  }
  double factor = 1.0;
  for (int j = 0; j < m; ++j) factor *= (x + 0.5 + j) / (x + 1.0 + j);
  return ShiftResult{x + m, factor, m};
}

double rho_star(double p, int k) {
  require_dof(p);
  require_order(k);
  return detail::rho_star_impl<double>(p, k).first;
}

bool rho_star_uses_log_branch(double p, int k) {
  require_dof(p);
  require_order(k);
  return detail::rho_star_impl<double>(p, k).second;
}

double relative_error_cap(double p, int k) {
  require_dof(p);
  require_order(k);
  return detail::relative_error_cap_impl<double>(p, k);
}

int min_order_for_tolerance(double p, double eps) {
  require_dof(p);
  if (!(eps > 0.0) || !(eps < 1.0)) throw std::domain_error("eps must lie in (0, 1)");
  for (int k = 0; k <= kMaxOrder; ++k) {
    if (relative_error_cap(p, k) < eps) return k;
  }
  throw ToleranceError("no order k <= " + std::to_string(kMaxOrder) +
                       " certifies the requested tolerance");
}

}  // namespace wallis
