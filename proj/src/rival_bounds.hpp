#pragma once

// Rival bound families for the Wallis ratio W(x), used for head-to-head
// convergence comparisons against the geometric enclosures of core_bounds.
//
// Gauss series:  W(x) = sqrt( x * F(x) ),
//   F(x) = sum_{m>=0} t_m,  t_0 = 1,  t_m = t_{m-1} (m-3/2)^2 / ((x+m-1) m),
// valid for x > 0.  Every partial sum gives a lower bound increasing in the
// term count n; the error decays only algebraically (like n^-2), not
// geometrically.
//
// Wendel-shifted family, parameterized by s in (0, 1) with s = 1/2 giving
// Wallis-ratio bounds:
//   P_k(x)     = prod_{j=0..k-1} (x+s+j)/(x+1+j),
//   alpha_k    = (x+k)^(1-s)   * P_k(x)   (lower),
//   beta_k     = (x+k+s)^(1-s) * P_k(x)   (upper),
// valid for x >= 0, k >= 1.  Both converge monotonically, but the relative
// gap beta_k/alpha_k - 1 = ((x+k+s)/(x+k))^(1-s) - 1 shrinks like k^-1, so
// tight tolerances need enormous k.
//
// convergence_race runs all three families at one (x, eps) and reports the
// smallest order / term count at which each family's worst-side relative
// error against the oracle midpoint drops below eps, capping the rivals at
// kRaceCap evaluations.

#include <utility>

#include "core_bounds.hpp"

namespace wallis {

inline constexpr long long kRaceCap = 1000000;

enum class Family { Geometric, GaussSeries, WendelShift };

struct RivalReport {
  Family family;
  long long parameter;  // order k or term count n
  double lower;
  double upper;   // NaN when the family is one-sided
  double target_ref;
};

double gauss_watson_lower(double x, long long n_terms);

// {alpha_k, beta_k}; strict enclosure of Gamma(x+1)/Gamma(x+s) for x >= 0.
std::pair<double, double> shanbhag_bounds(double x, double s, long long k);

RivalReport gauss_watson_report(double x, long long n_terms, double target_ref);
RivalReport shanbhag_report(double x, double s, long long k, double target_ref);

struct RaceEntry {
  long long parameter = 0;  // first order / term count below eps
  bool capped = false;      // scan hit its cap before reaching eps
  double rel_err = 0.0;     // worst-side relative error at `parameter`
};

struct RaceReport {
  double x = 0.0;
  double eps = 0.0;
  double reference = 0.0;   // oracle midpoint for W(x)
  RaceEntry geometric;      // wallis_bounds orders 0..kMaxOrder
  RaceEntry gauss_series;   // term counts 1..kRaceCap
  RaceEntry wendel_shift;   // orders 1..kRaceCap, s = 1/2
  int certified_order = -1; // min_order_for_tolerance, -1 if unreachable
};

RaceReport convergence_race(double x, double eps);

}  // namespace wallis
