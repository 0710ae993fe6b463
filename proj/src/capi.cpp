#include "wallis_enclose.h"

#include <cstdio>
#include <cstring>
#include <new>
#include <string>

#include "core_bounds.hpp"
#include "digamma_bounds.hpp"
#include "precision_oracle.hpp"
#include "rival_bounds.hpp"

namespace {

thread_local std::string g_last_error;

template <class Fn>
we_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return WE_OK;
  } catch (const wallis::ToleranceError& e) {
    g_last_error = e.what();
    return WE_ERR_TOLERANCE;
  } catch (const wallis::PrecisionError& e) {
    g_last_error = e.what();
    return WE_ERR_PRECISION;
  } catch (const std::overflow_error& e) {
    g_last_error = e.what();
    return WE_ERR_OVERFLOW;
  } catch (const std::domain_error& e) {
    g_last_error = e.what();
    return WE_ERR_DOMAIN;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return WE_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return WE_ERR_INVALID;
  }
}

we_status invalid(const char* msg) {
  g_last_error = msg;
  return WE_ERR_INVALID;
}

wallis::OpCount* borrow_tally(we_op_count* tally, wallis::OpCount& local) {
  if (!tally) return nullptr;
  local.logs = tally->logs;
  local.mults = tally->mults;
  local.adds = tally->adds;
  local.pows = tally->pows;
  return &local;
}

void return_tally(we_op_count* tally, const wallis::OpCount& local) {
  if (!tally) return;
  tally->logs = local.logs;
  tally->mults = local.mults;
  tally->adds = local.adds;
  tally->pows = local.pows;
}

bool to_strategy(we_strategy in, wallis::Strategy& out) {
  switch (in) {
    case WE_STRATEGY_DIRECT: out = wallis::Strategy::Direct; return true;
    case WE_STRATEGY_RECURSIVE: out = wallis::Strategy::Recursive; return true;
    case WE_STRATEGY_CACHED: out = wallis::Strategy::Cached; return true;
  }
  return false;
}

we_target to_c_target(wallis::Target t) {
  switch (t) {
    case wallis::Target::RatioR: return WE_TARGET_RATIO;
    case wallis::Target::WallisW: return WE_TARGET_WALLIS;
    case wallis::Target::LogRatioDeriv: return WE_TARGET_LOGRATIO_DERIV;
    case wallis::Target::DigammaDiff: return WE_TARGET_DIGAMMA_DIFF;
  }
  return WE_TARGET_RATIO;
}

void store_pair(const wallis::BoundPair& bp, we_bound_pair* out) {
  out->lower = bp.lower;
  out->upper = bp.upper;
  out->order = bp.order;
  out->target = to_c_target(bp.target);
}

wallis::PrecisionConfig make_config(int digits, int squeeze_order) {
  wallis::PrecisionConfig cfg;
  cfg.digits = digits;
  if (squeeze_order >= 0) cfg.squeeze_order = squeeze_order;
  return cfg;
}

}  // namespace

struct we_exponent_cache {
  wallis::ExponentCache impl;
};

struct we_enclosure {
  wallis::Enclosure impl;
};

extern "C" {

const char* we_version(void) { return "1.0.0"; }

const char* we_last_error(void) { return g_last_error.c_str(); }

we_status we_sigma(double p, int m, double* out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { *out = wallis::sigma(p, m); });
}

we_status we_upper_bound_direct(double p, int k, we_op_count* tally, double* out) {
  if (!out) return invalid("out must not be null");
  wallis::OpCount local;
  const we_status st =
      guarded([&] { *out = wallis::upper_bound_direct(p, k, borrow_tally(tally, local)); });
  if (st == WE_OK) return_tally(tally, local);
  return st;
}

we_status we_upper_bound_recursive(double p, int k, we_op_count* tally, double* out) {
  if (!out) return invalid("out must not be null");
  wallis::OpCount local;
  const we_status st =
      guarded([&] { *out = wallis::upper_bound_recursive(p, k, borrow_tally(tally, local)); });
  if (st == WE_OK) return_tally(tally, local);
  return st;
}

we_status we_lower_bound(double p, int k, double* out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { *out = wallis::lower_bound(p, k); });
}

we_status we_ratio_bounds(double p, int k, we_strategy strategy, we_op_count* tally,
                          we_bound_pair* out) {
  if (!out) return invalid("out must not be null");
  wallis::Strategy strat;
  if (!to_strategy(strategy, strat)) return invalid("unknown strategy");
  wallis::OpCount local;
  const we_status st = guarded(
      [&] { store_pair(wallis::ratio_bounds(p, k, strat, borrow_tally(tally, local)), out); });
  if (st == WE_OK) return_tally(tally, local);
  return st;
}

we_status we_wallis_bounds(double x, int k, we_strategy strategy, we_op_count* tally,
                           we_bound_pair* out) {
  if (!out) return invalid("out must not be null");
  wallis::Strategy strat;
  if (!to_strategy(strategy, strat)) return invalid("unknown strategy");
  wallis::OpCount local;
  const we_status st = guarded(
      [&] { store_pair(wallis::wallis_bounds(x, k, strat, borrow_tally(tally, local)), out); });
  if (st == WE_OK) return_tally(tally, local);
  return st;
}

we_status we_shift_normalize(double x, double x_min, double* shifted_x, double* factor) {
  if (!shifted_x || !factor) return invalid("shifted_x and factor must not be null");
  return guarded([&] {
    const wallis::ShiftResult r = wallis::shift_normalize(x, x_min);
    *shifted_x = r.shifted_arg;
    *factor = r.factor;
  });
}

we_status we_rho_star(double p, int k, double* out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { *out = wallis::rho_star(p, k); });
}

we_status we_relative_error_cap(double p, int k, double* out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { *out = wallis::relative_error_cap(p, k); });
}

we_status we_min_order_for_tolerance(double p, double eps, int32_t* out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { *out = wallis::min_order_for_tolerance(p, eps); });
}

we_status we_exponent_cache_create(int k, we_exponent_cache** out) {
  if (!out) return invalid("out must not be null");
  *out = nullptr;
  return guarded([&] { *out = new we_exponent_cache{wallis::ExponentCache(k)}; });
}

void we_exponent_cache_destroy(we_exponent_cache* cache) { delete cache; }

int32_t we_exponent_cache_order(const we_exponent_cache* cache) {
  return cache ? cache->impl.order() : -1;
}

we_status we_exponent_cache_entry(const we_exponent_cache* cache, int j, uint64_t* out) {
  if (!cache || !out) return invalid("cache and out must not be null");
  return guarded([&] {
    const auto& h = cache->impl.exponents();
    if (j < 0 || j > cache->impl.order()) throw std::domain_error("j must lie in [0, k]");
    const wallis::BigInt& v = h[static_cast<size_t>(j)];
    if (v > wallis::BigInt(UINT64_MAX))
      throw std::overflow_error("exponent exceeds 64 bits; read it at a lower order");
    *out = v.convert_to<uint64_t>();
  });
}

we_status we_upper_bound_cached(double p, const we_exponent_cache* cache, we_op_count* tally,
                                double* out) {
  if (!cache || !out) return invalid("cache and out must not be null");
  wallis::OpCount local;
  const we_status st = guarded(
      [&] { *out = wallis::upper_bound_cached(p, cache->impl, borrow_tally(tally, local)); });
  if (st == WE_OK) return_tally(tally, local);
  return st;
}

we_status we_pochhammer(double y, int m, double* out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { *out = wallis::pochhammer(y, m); });
}

we_status we_ell(double p, int k, double* out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { *out = wallis::ell(p, k); });
}

we_status we_u_bound(double p, int k, double* out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { *out = wallis::u_bound(p, k); });
}

we_status we_logratio_derivative_bounds(double p, int k, we_bound_pair* out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { store_pair(wallis::logratio_derivative_bounds(p, k), out); });
}

we_status we_digamma_diff_bounds(double x, int k, we_bound_pair* out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { store_pair(wallis::digamma_diff_bounds(x, k), out); });
}

we_status we_digamma_error_bound(double p, int k, double* out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { *out = wallis::digamma_error_bound(p, k); });
}

we_status we_digamma_error_bound_coarse(double p, int k, double* out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { *out = wallis::digamma_error_bound_coarse(p, k); });
}

we_status we_ratio_reference(double p, int digits, int squeeze_order, we_enclosure** out) {
  if (!out) return invalid("out must not be null");
  *out = nullptr;
  return guarded([&] {
    *out = new we_enclosure{wallis::ratio_reference(p, make_config(digits, squeeze_order))};
  });
}

we_status we_wallis_reference(double x, int digits, int squeeze_order, we_enclosure** out) {
  if (!out) return invalid("out must not be null");
  *out = nullptr;
  return guarded([&] {
    *out = new we_enclosure{wallis::wallis_reference(x, make_config(digits, squeeze_order))};
  });
}

we_status we_digamma_diff_reference(double x, int digits, int squeeze_order, we_enclosure** out) {
  if (!out) return invalid("out must not be null");
  *out = nullptr;
  return guarded([&] {
    *out = new we_enclosure{wallis::digamma_diff_reference(x, make_config(digits, squeeze_order))};
  });
}

void we_enclosure_destroy(we_enclosure* enc) { delete enc; }

double we_enclosure_lo(const we_enclosure* enc) { return enc ? enc->impl.lo_d() : 0.0; }

double we_enclosure_hi(const we_enclosure* enc) { return enc ? enc->impl.hi_d() : 0.0; }

double we_enclosure_mid(const we_enclosure* enc) { return enc ? enc->impl.mid_d() : 0.0; }

int we_enclosure_certified(const we_enclosure* enc) {
  return enc && enc->impl.certified() ? 1 : 0;
}

int32_t we_enclosure_digits(const we_enclosure* enc) { return enc ? enc->impl.digits() : 0; }

we_status we_enclosure_rel_width_log10(const we_enclosure* enc, double* out) {
  if (!enc || !out) return invalid("enc and out must not be null");
  return guarded([&] {
    using boost::multiprecision::log10;
    *out = wallis::to_double(log10(enc->impl.relative_width()));
  });
}

we_status we_enclosure_mid_str(const we_enclosure* enc, int digits, char* buf, size_t buflen) {
  if (!enc || !buf) return invalid("enc and buf must not be null");
  return guarded([&] {
    if (digits < 1 || digits > 9000) throw std::domain_error("digits must lie in [1, 9000]");
    const std::string s = enc->impl.mid_str(digits);
    if (s.size() + 1 > buflen) throw std::domain_error("buffer too small for requested digits");
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

we_status we_gauss_watson_lower(double x, int64_t n_terms, double* out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] { *out = wallis::gauss_watson_lower(x, n_terms); });
}

we_status we_shanbhag_bounds(double x, double s, int64_t k, double* alpha, double* beta) {
  if (!alpha || !beta) return invalid("alpha and beta must not be null");
  return guarded([&] {
    const auto [a, b] = wallis::shanbhag_bounds(x, s, k);
    *alpha = a;
    *beta = b;
  });
}

we_status we_convergence_race(double x, double eps, we_race_report* out) {
  if (!out) return invalid("out must not be null");
  return guarded([&] {
    const wallis::RaceReport rep = wallis::convergence_race(x, eps);
    out->x = rep.x;
    out->eps = rep.eps;
    out->reference = rep.reference;
    out->geometric = we_race_entry{rep.geometric.parameter, rep.geometric.capped ? 1 : 0,
                                   rep.geometric.rel_err};
    out->gauss_series = we_race_entry{rep.gauss_series.parameter,
                                      rep.gauss_series.capped ? 1 : 0, rep.gauss_series.rel_err};
    out->wendel_shift = we_race_entry{rep.wendel_shift.parameter,
                                      rep.wendel_shift.capped ? 1 : 0, rep.wendel_shift.rel_err};
    out->certified_order = rep.certified_order;
  });
}

} /* extern "C" */
