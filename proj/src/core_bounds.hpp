#pragma once

// Two-sided geometric enclosures for the Student density ratio
//
//   r(p) = Gamma((p+1)/2) / (sqrt(p/2) * Gamma(p/2)),          p > 0,
//
// and, through p = 2x + 1, for the Wallis ratio
//
//   W(x) = Gamma(x+1) / Gamma(x+1/2) = r(2x+1) * sqrt(x+1/2),  x > -1/2.
//
// Upper bounds:  U_k(p) = exp( sum_{m=1..k} 2^{-1-m} * sigma_{p,m} ),
//                sigma_{p,m} = sum_{j=0..m} (-1)^j C(m,j) ln(p+j)  (< 0),
// lower bounds:  L_k(p) = sqrt(p/(p+1)) / U_k(p+1),
// with the strict chain  L_k < L_{k+1} < r < U_{k+1} < U_k  at every order.
//
// Three interchangeable strategies evaluate the same bounds:
//   Direct     alternating binomial sums, O(k^2) arithmetic per point;
//   Recursive  V_0 = sqrt(p), V_k(p) = sqrt(p * V_{k-1}(p) / V_{k-1}(p+1)),
//              U_k = V_k / sqrt(p), cancellation-free;
//   Cached     U_k(p) = ( prod_{j=0..k} (p+j)^{(-1)^j H_{j,k}} )^{1/2^{k+1}}
//              with the integer exponents H_{j,k} precomputed once; exactly
//              k+1 log calls per evaluation afterwards.
//
// Native double arithmetic is the default and is trusted through order
// kNativeOrderCap; deeper orders transparently evaluate in extended
// precision and round the final result, because sigma_{p,m} cancels about
// m bits of the working significand.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "real_arith.hpp"

namespace wallis {

inline constexpr int kMaxOrder = 64;        // hard cap on the order k
inline constexpr int kNativeOrderCap = 12;  // double is trusted through k = 12
inline constexpr int kExtendedDigits = 50;  // working digits past the cap
inline constexpr double kCrossStrategyRelTol = 1e-12;  // native strategy agreement

enum class Strategy { Direct, Recursive, Cached };
enum class Target { RatioR, WallisW, LogRatioDeriv, DigammaDiff };

// Thrown by min_order_for_tolerance when no order k <= kMaxOrder suffices.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic tally.  Conventions: `logs` counts ln calls; `pows` counts
// exp, sqrt and pow calls; `mults` counts * and /; `adds` counts + and -,
// argument shifts (p + j) included.
struct OpCount {
  std::int64_t logs = 0;
  std::int64_t mults = 0;
  std::int64_t adds = 0;
  std::int64_t pows = 0;
  std::int64_t arithmetic() const { return mults + adds; }
  void reset() { *this = OpCount{}; }
};

struct BoundPair {
  double lower = 0.0;
  double upper = 0.0;
  int order = 0;
  Target target = Target::RatioR;
  double width() const { return upper - lower; }
};

struct ShiftResult {
  double shifted_arg;  // x + m
  double factor;       // W(x) = W(x + m) * factor
  int steps;           // m
};

// Exact integer exponents for the Cached strategy:
//   U_k(p)^(2^{k+1}) = prod_{j=0..k} (p+j)^{(-1)^j H_{j,k}},
//   H_{j,k} = sum_{m=max(1,j)..k} 2^{k-m} C(m,j),
// built by H_{j,k+1} = 2 H_{j,k} + C(k+1,j) with H_{k,k} = 1 for k >= 1.
// H_{0,k} = 2^k - 1 and the alternating row sum is 0.  Rows outgrow 64-bit
// integers at k = 64 (H_{1,64} = 2^65 - 66), so entries are stored exactly.
class ExponentCache {
 public:
  explicit ExponentCache(int order);
  int order() const { return order_; }
  const std::vector<BigInt>& exponents() const { return h_; }

 private:
  int order_;
  std::vector<BigInt> h_;
};

void require_dof(double p);         // p > 0, finite
void require_wallis_arg(double x);  // x > -1/2, finite
void require_order(int k);          // 0 <= k <= kMaxOrder

// sigma_{p,m}; strictly negative for every m >= 1.
double sigma(double p, int m);

double upper_bound_direct(double p, int k, OpCount* tally = nullptr);
double upper_bound_recursive(double p, int k, OpCount* tally = nullptr);
double upper_bound_cached(double p, const ExponentCache& cache, OpCount* tally = nullptr);
double lower_bound(double p, int k);

BoundPair ratio_bounds(double p, int k, Strategy strategy = Strategy::Cached,
                       OpCount* tally = nullptr);
BoundPair bounds_recursive(double p, int k);  // ratio_bounds with Strategy::Recursive
BoundPair wallis_bounds(double x, int k, Strategy strategy = Strategy::Cached,
                        OpCount* tally = nullptr);

ExponentCache build_exponent_cache(int order);

// Smallest integer shift m >= 0 with x + m >= x_min, plus the exact transfer
// factor W(x) = W(x+m) * prod_{j=0..m-1} (x+1/2+j)/(x+1+j), evaluated as a
// running product (never through Gamma).
ShiftResult shift_normalize(double x, double x_min);

// Proven log-scale truncation cap at order k,
//   rho*_{p,k} = 2^{-(k+1)} * min( (k+1)!/p^{k+1}, ln((p+1)/p) ),
// and the derived cap exp(rho*) - 1 on both relative errors
// (U_k - r)/r and (r - L_k)/r.
double rho_star(double p, int k);
bool rho_star_uses_log_branch(double p, int k);
double relative_error_cap(double p, int k);

// Smallest k with relative_error_cap(p, k) < eps, so cap(p, k-1) >= eps
// whenever k > 0.  Throws ToleranceError if no k <= kMaxOrder works.
int min_order_for_tolerance(double p, double eps);

namespace detail {

// sigma_{p,m} by Pascal row + alternating dot product.
template <class Real>
Real sigma_impl(const Real& p, int m) {
  using std::log;
  std::vector<Real> row(static_cast<size_t>(m) + 1);
  row[0] = 1;
  for (int i = 1; i <= m; ++i) {
    row[static_cast<size_t>(i)] = 1;
    for (int j = i - 1; j >= 1; --j) row[static_cast<size_t>(j)] += row[static_cast<size_t>(j) - 1];
  }
  Real acc(0);
  for (int j = 0; j <= m; ++j) {
    Real t = row[static_cast<size_t>(j)] * log(p + j);
    if (j & 1)
      acc -= t;
    else
      acc += t;
  }
  return acc;
}

// Direct strategy.  Tally per evaluation: k+1 logs, k argument adds, and for
// each m in 1..k: m-1 Pascal adds, m+1 dot mults, m dot adds, one weight
// halving mult, one apply mult, one accumulate add; one final exp.
template <class Real>
Real upper_bound_direct_impl(const Real& p, int k, OpCount* tally = nullptr) {
  using std::exp;
  using std::log;
  std::vector<Real> lg(static_cast<size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) lg[static_cast<size_t>(j)] = log(p + j);
  if (tally) {
    tally->logs += k + 1;
    tally->adds += k;
  }
  std::vector<Real> row(static_cast<size_t>(k) + 1);
  row[0] = 1;
  Real w = Real(1) / 2;
  Real acc(0);
  for (int m = 1; m <= k; ++m) {
    row[static_cast<size_t>(m)] = 1;
    for (int j = m - 1; j >= 1; --j) row[static_cast<size_t>(j)] += row[static_cast<size_t>(j) - 1];
    Real s(0);
    for (int j = 0; j <= m; ++j) {
      Real t = row[static_cast<size_t>(j)] * lg[static_cast<size_t>(j)];
      if (j & 1)
        s -= t;
      else
        s += t;
    }
    w = w / 2;
    acc += w * s;
    if (tally) {
      tally->adds += (m - 1) + m + 1;
      tally->mults += (m + 1) + 2;
    }
  }
  if (tally) tally->pows += 1;
  return exp(acc);
}

// Recursive strategy.  Builds the triangular V table bottom-up over the
// shifted arguments p..p+k(+1); with_next additionally yields U_k(p+1) from
// the same table (the natural way to assemble L_k(p)).
template <class Real>
void recursive_upper_pair(const Real& p, int k, bool with_next, Real* u_at_p, Real* u_at_p1,
                          OpCount* tally = nullptr) {
  using std::sqrt;
  const int extra = with_next ? 1 : 0;
  const int n = k + 1 + extra;
  std::vector<Real> v(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = sqrt(p + j);
  if (tally) {
    tally->pows += n;
    tally->adds += n - 1;
  }
  const Real sqrt_p = v[0];
  const Real sqrt_p1 = with_next ? v[1] : Real(0);
  for (int level = 1; level <= k; ++level) {
    const int nodes = n - level;
    for (int j = 0; j < nodes; ++j) {
      v[static_cast<size_t>(j)] = sqrt((p + j) * v[static_cast<size_t>(j)] / v[static_cast<size_t>(j) + 1]);
    }
    if (tally) {
      tally->adds += nodes - 1;
      tally->mults += 2 * nodes;
      tally->pows += nodes;
    }
  }
  *u_at_p = v[0] / sqrt_p;
  if (tally) tally->mults += 1;
  if (with_next) {
    *u_at_p1 = v[1] / sqrt_p1;
    if (tally) tally->mults += 1;
  }
}

// Cached strategy.  Tally per evaluation: exactly k+1 logs, k argument adds,
// k+1 weight mults, k alternating adds, one scaling mult, one exp.
template <class Real>
Real upper_bound_cached_impl(const Real& p, const ExponentCache& cache,
                             OpCount* tally = nullptr) {
  using std::exp;
  using std::ldexp;
  using std::log;
  const int k = cache.order();
  const auto& h = cache.exponents();
  Real acc(0);
  for (int j = 0; j <= k; ++j) {
    Real t = from_bigint<Real>(h[static_cast<size_t>(j)]) * log(p + j);
    if (j & 1)
      acc -= t;
    else
      acc += t;
  }
  acc = ldexp(acc, -(k + 1));
  if (tally) {
    tally->logs += k + 1;
    tally->adds += k + k;
    tally->mults += (k + 1) + 1;
    tally->pows += 1;
  }
  return exp(acc);
}

// Upper bounds U_0..U_kmax at one argument, sharing the log table.
template <class Real>
std::vector<Real> upper_bounds_through(const Real& p, int kmax) {
  using std::exp;
  using std::log;
  std::vector<Real> lg(static_cast<size_t>(kmax) + 1);
  for (int j = 0; j <= kmax; ++j) lg[static_cast<size_t>(j)] = log(p + j);
  std::vector<Real> out;
  out.reserve(static_cast<size_t>(kmax) + 1);
  std::vector<Real> row(static_cast<size_t>(kmax) + 1);
  row[0] = 1;
  Real w = Real(1) / 2;
  Real acc(0);
  out.push_back(Real(1));  // U_0 = 1
  for (int m = 1; m <= kmax; ++m) {
    row[static_cast<size_t>(m)] = 1;
    for (int j = m - 1; j >= 1; --j) row[static_cast<size_t>(j)] += row[static_cast<size_t>(j) - 1];
    Real s(0);
    for (int j = 0; j <= m; ++j) {
      Real t = row[static_cast<size_t>(j)] * lg[static_cast<size_t>(j)];
      if (j & 1)
        s -= t;
      else
        s += t;
    }
    w = w / 2;
    acc += w * s;
    out.push_back(exp(acc));
  }
  return out;
}

// rho*_{p,k}; second member reports whether the ln((p+1)/p) branch was the
// minimum.  The factorial branch is compared in log space so large k and
// small p cannot overflow.
template <class Real>
std::pair<Real, bool> rho_star_impl(const Real& p, int k) {
  using std::exp;
  using std::ldexp;
  using std::log;
  const Real lnb = real_log1p(Real(1) / p);
  Real lf(0);
  for (int i = 2; i <= k + 1; ++i) lf += log(Real(i));
  lf -= Real(k + 1) * log(p);
  const bool log_branch = lf >= log(lnb);
  const Real m = log_branch ? lnb : Real(exp(lf));
  return {ldexp(m, -(k + 1)), log_branch};
}

template <class Real>
Real relative_error_cap_impl(const Real& p, int k) {
  return real_expm1(rho_star_impl(p, k).first);
}

}  // namespace detail

}  // namespace wallis
