#include "digamma_bounds.hpp"

namespace wallis {

double pochhammer(double y, int m) {
  if (m < 0) throw std::domain_error("m must be nonnegative");
  double r = 1.0;
  for (int j = 0; j < m; ++j) r *= (y + j);
  return r;
}

double ell(double p, int k) {
  require_dof(p);
  require_order(k);
  return detail::ell_impl<double>(p, k);
}

double u_bound(double p, int k) {
  require_dof(p);
  require_order(k);
  return detail::u_impl<double>(p, k);
}

BoundPair logratio_derivative_bounds(double p, int k) {
  require_dof(p);
  require_order(k);
  return BoundPair{detail::ell_impl<double>(p, k), detail::u_impl<double>(p, k), k,
                   Target::LogRatioDeriv};
}

BoundPair digamma_diff_bounds(double x, int k) {
  require_wallis_arg(x);
  require_order(k);
  const double p = 2.0 * x + 1.0;
  return BoundPair{1.0 / p + 2.0 * detail::ell_impl<double>(p, k),
                   1.0 / p + 2.0 * detail::u_impl<double>(p, k), k, Target::DigammaDiff};
}

double digamma_error_bound(double p, int k) {
  require_dof(p);
  require_order(k);
  return detail::digamma_error_bound_impl<double>(p, k);
}

double digamma_error_bound_coarse(double p, int k) {
  require_dof(p);
  require_order(k);
  return std::ldexp(1.0, -(k + 1)) / p;
}

}  // namespace wallis
