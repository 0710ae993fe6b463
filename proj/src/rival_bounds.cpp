#include "rival_bounds.hpp"

#include <cmath>
#include <limits>

#include "precision_oracle.hpp"

namespace wallis {

namespace {

void require_gauss_arg(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("x must be positive");
}

void require_shift_exponent(double s) {
  if (!(s > 0.0) || !(s < 1.0)) throw std::domain_error("s must lie in (0, 1)");
}

double gauss_next_term(double t, double x, long long m) {
  return t * (m - 1.5) * (m - 1.5) / ((x + m - 1.0) * m);
}

}  // namespace

double gauss_watson_lower(double x, long long n_terms) {
  require_gauss_arg(x);
  if (n_terms < 1) throw std::domain_error("n_terms must be at least 1");
  double t = 1.0;
  double sum = 1.0;
  for (long long m = 1; m < n_terms; ++m) {
    t = gauss_next_term(t, x, m);
    sum += t;
  }
  return std::sqrt(sum * x);
}

std::pair<double, double> shanbhag_bounds(double x, double s, long long k) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw std::domain_error("x must be nonnegative");
  require_shift_exponent(s);
  if (k < 1) throw std::domain_error("k must be at least 1");
  double prod = 1.0;
  for (long long j = 0; j < k; ++j) prod *= (x + s + j) / (x + 1.0 + j);
  const double alpha = std::pow(x + k, 1.0 - s) * prod;
  const double beta = std::pow(x + k + s, 1.0 - s) * prod;
  return {alpha, beta};
}

RivalReport gauss_watson_report(double x, long long n_terms, double target_ref) {
  return RivalReport{Family::GaussSeries, n_terms, gauss_watson_lower(x, n_terms),
                     std::numeric_limits<double>::quiet_NaN(), target_ref};
}

RivalReport shanbhag_report(double x, double s, long long k, double target_ref) {
  const auto [alpha, beta] = shanbhag_bounds(x, s, k);
  return RivalReport{Family::WendelShift, k, alpha, beta, target_ref};
}

RaceReport convergence_race(double x, double eps) {
  require_gauss_arg(x);
  if (!(eps > 0.0) || !(eps < 1.0)) throw std::domain_error("eps must lie in (0, 1)");

  RaceReport rep;
  rep.x = x;
  rep.eps = eps;
  const double ref = wallis_reference(x).mid_d();
  rep.reference = ref;

  rep.geometric = RaceEntry{kMaxOrder, true, 0.0};
  for (int k = 0; k <= kMaxOrder; ++k) {
    const BoundPair b = wallis_bounds(x, k);
    const double err = std::max((b.upper - ref) / ref, (ref - b.lower) / ref);
    rep.geometric.rel_err = err;
    if (err < eps) {
      rep.geometric = RaceEntry{k, false, err};
      break;
    }
  }
  try {
    rep.certified_order = min_order_for_tolerance(2.0 * x + 1.0, eps);
  } catch (const ToleranceError&) {
    rep.certified_order = -1;
  }

  {
    double t = 1.0;
    double sum = 1.0;
    rep.gauss_series = RaceEntry{kRaceCap, true, 0.0};
    for (long long n = 1; n <= kRaceCap; ++n) {
      if (n > 1) {
        t = gauss_next_term(t, x, n - 1);
        sum += t;
      }
      const double err = (ref - std::sqrt(sum * x)) / ref;
      rep.gauss_series.rel_err = err;
      if (err < eps) {
        rep.gauss_series = RaceEntry{n, false, err};
        break;
      }
    }
  }

  {
    double prod = 1.0;
    rep.wendel_shift = RaceEntry{kRaceCap, true, 0.0};
    for (long long k = 1; k <= kRaceCap; ++k) {
      prod *= (x + 0.5 + (k - 1)) / (x + k);
      const double alpha = std::sqrt(x + k) * prod;
      const double beta = std::sqrt(x + k + 0.5) * prod;
      const double err = std::max((beta - ref) / ref, (ref - alpha) / ref);
      rep.wendel_shift.rel_err = err;
      if (err < eps) {
        rep.wendel_shift = RaceEntry{k, false, err};
        break;
      }
    }
  }

  return rep;
}

}  // namespace wallis
