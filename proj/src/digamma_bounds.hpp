#pragma once

// Two-sided bounds on the logarithmic derivative of the ratio r(p),
//
//   d/dp ln r(p) = (psi((p+1)/2) - psi(p/2)) / 2 - 1/(2p),
//
// squeezed between the partial sums
//
//   ell_k(p) = sum_{m=1..k} a_m(p),   a_m(p) = 2^{-1-m} m! / p^(m+1),
//   u_k(p)   = 1/(2p(p+1)) - ell_k(p+1),
//
// where p^(n) denotes the rising factorial p(p+1)...(p+n-1).  The chain
//   ell_k < ell_{k+1} < d/dp ln r(p) < u_{k+1} < u_k
// is strict, both one-sided errors are below
//   2^{-k-1} (k+1)! / p^(k+2)
// (coarsely 2^{-k-1} / p), and u_k - ell_k equals that bound identically.
//
// Through p = 2x + 1 the same squeeze encloses the digamma difference
//   psi(x+1) - psi(x+1/2) = 1/p + 2 * (d/dp ln r)(p).
//
// Successive terms satisfy a_{m+1}/a_m = (m+1)/(2(p+m+1)) < 1/2, so every
// quantity here is a short positive sum: plain double arithmetic is
// accurate at all supported orders and no extended backend is involved.

#include "core_bounds.hpp"

namespace wallis {

double pochhammer(double y, int m);  // rising factorial y^(m), m >= 0

double ell(double p, int k);      // lower partial sum, ell_0 = 0
double u_bound(double p, int k);  // upper bound via the shift identity

BoundPair logratio_derivative_bounds(double p, int k);
BoundPair digamma_diff_bounds(double x, int k);

double digamma_error_bound(double p, int k);         // 2^{-k-1} (k+1)! / p^(k+2)
double digamma_error_bound_coarse(double p, int k);  // 2^{-k-1} / p

namespace detail {

template <class Real>
Real ell_impl(const Real& p, int k) {
  Real acc(0);
  if (k < 1) return acc;
  Real a = 1 / (4 * p * (p + 1));
  acc = a;
  for (int m = 2; m <= k; ++m) {
    a *= Real(m) / (2 * (p + m));
    acc += a;
  }
  return acc;
}

template <class Real>
Real u_impl(const Real& p, int k) {
  return 1 / (2 * p * (p + 1)) - ell_impl(p + 1, k);
}

template <class Real>
Real digamma_error_bound_impl(const Real& p, int k) {
  using std::ldexp;
  Real b = ldexp(Real(1), -(k + 1)) / p;
  for (int i = 1; i <= k + 1; ++i) b *= Real(i) / (p + i);
  return b;
}

}  // namespace detail

}  // namespace wallis
