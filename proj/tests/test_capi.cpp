#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <cstring>

#include "wallis_enclose.h"

namespace {

bool rel_close(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::fabs(b);
}

}  // namespace

TEST_CASE("version and last-error state") {
  CHECK(std::strcmp(we_version(), "1.0.0") == 0);
  CHECK(we_last_error() != nullptr);
}

TEST_CASE("status codes and error messages") {
  double out = 0.0;
  we_bound_pair bp{};

  CHECK(we_sigma(0.0, 1, &out) == WE_ERR_DOMAIN);
  CHECK(std::strcmp(we_last_error(), "p must be positive") == 0);

  CHECK(we_wallis_bounds(-0.6, 3, WE_STRATEGY_CACHED, nullptr, &bp) == WE_ERR_DOMAIN);
  CHECK(std::strcmp(we_last_error(), "x must exceed -0.5") == 0);

  CHECK(we_upper_bound_direct(1.0, 65, nullptr, &out) == WE_ERR_DOMAIN);
  CHECK(std::strcmp(we_last_error(), "k must lie in [0, 64]") == 0);

  int32_t k = 0;
  CHECK(we_min_order_for_tolerance(1.0, 1e-30, &k) == WE_ERR_TOLERANCE);

  we_enclosure* enc = nullptr;
  CHECK(we_ratio_reference(1.0, 10, -1, &enc) == WE_ERR_DOMAIN);
  CHECK(enc == nullptr);

  CHECK(we_sigma(1.0, 1, nullptr) == WE_ERR_INVALID);
  CHECK(std::strcmp(we_last_error(), "out must not be null") == 0);

  CHECK(we_ratio_bounds(1.0, 1, static_cast<we_strategy>(7), nullptr, &bp) == WE_ERR_INVALID);
  CHECK(std::strcmp(we_last_error(), "unknown strategy") == 0);
}

TEST_CASE("core bound values through the C interface") {
  double u = 0.0, lo = 0.0, cap = 0.0, rho = 0.0, sg = 0.0;
  REQUIRE(we_upper_bound_direct(1.0, 1, nullptr, &u) == WE_OK);
  CHECK(rel_close(u, 0.8408964152537145430311254762332148950400, 1e-15));
  REQUIRE(we_lower_bound(1.0, 1, &lo) == WE_OK);
  CHECK(rel_close(lo, 0.7825422900366436582922427495793449049054, 1e-15));
  REQUIRE(we_relative_error_cap(1.0, 1, &cap) == WE_OK);
  CHECK(rel_close(cap, 0.18920711500272106671749997056, 1e-15));
  REQUIRE(we_rho_star(1.0, 0, &rho) == WE_OK);
  CHECK(rel_close(rho, 0.34657359027997265470861606073, 1e-15));
  REQUIRE(we_sigma(1.0, 1, &sg) == WE_OK);
  CHECK(rel_close(sg, -0.69314718055994530941723212146, 1e-15));

  we_bound_pair rb{};
  REQUIRE(we_ratio_bounds(1.0, 1, WE_STRATEGY_CACHED, nullptr, &rb) == WE_OK);
  CHECK(rb.lower == lo);
  CHECK(rb.order == 1);
  CHECK(rb.target == WE_TARGET_RATIO);
  CHECK(rel_close(rb.upper, u, 1e-12));
  CHECK(rb.lower < rb.upper);

  // x = 1/2 maps to p = 2 with scale factor sqrt(1) = 1, so the pairs agree
  // bit for bit.
  we_bound_pair wb{}, rb2{};
  REQUIRE(we_wallis_bounds(0.5, 4, WE_STRATEGY_DIRECT, nullptr, &wb) == WE_OK);
  REQUIRE(we_ratio_bounds(2.0, 4, WE_STRATEGY_DIRECT, nullptr, &rb2) == WE_OK);
  CHECK(wb.lower == rb2.lower);
  CHECK(wb.upper == rb2.upper);
  CHECK(wb.target == WE_TARGET_WALLIS);
  CHECK(wb.order == 4);

  int32_t k = -1;
  REQUIRE(we_min_order_for_tolerance(1.0, 1e-6, &k) == WE_OK);
  CHECK(k == 19);

  double sx = 0.0, f = 0.0;
  REQUIRE(we_shift_normalize(0.3, 2.0, &sx, &f) == WE_OK);
  CHECK(sx == 2.3);
  CHECK(rel_close(f, (0.8 / 1.3) * (1.8 / 2.3), 1e-15));
  REQUIRE(we_shift_normalize(5.0, 2.0, &sx, &f) == WE_OK);
  CHECK(sx == 5.0);
  CHECK(f == 1.0);
  CHECK(we_shift_normalize(0.3, 2.0, nullptr, &f) == WE_ERR_INVALID);
}

TEST_CASE("digamma values through the C interface") {
  double v = 0.0;
  REQUIRE(we_pochhammer(0.5, 3, &v) == WE_OK);
  CHECK(v == 1.875);
  REQUIRE(we_ell(1.0, 1, &v) == WE_OK);
  CHECK(v == 0.125);
  REQUIRE(we_u_bound(2.0, 0, &v) == WE_OK);
  CHECK(rel_close(v, 1.0 / 12.0, 1e-15));

  double fine = 0.0, coarse = 0.0;
  REQUIRE(we_digamma_error_bound(2.0, 3, &fine) == WE_OK);
  REQUIRE(we_digamma_error_bound_coarse(2.0, 3, &coarse) == WE_OK);
  CHECK(fine < coarse);
  CHECK(coarse == 0.03125);

  we_bound_pair bp{};
  REQUIRE(we_digamma_diff_bounds(0.0, 30, &bp) == WE_OK);
  CHECK(bp.target == WE_TARGET_DIGAMMA_DIFF);
  const double two_ln2 = 1.3862943611198906;
  CHECK(bp.lower < two_ln2);
  CHECK(two_ln2 < bp.upper);

  we_bound_pair dp{};
  REQUIRE(we_logratio_derivative_bounds(3.0, 5, &dp) == WE_OK);
  CHECK(dp.target == WE_TARGET_LOGRATIO_DERIV);
  CHECK(dp.order == 5);
  CHECK(dp.lower < dp.upper);
  CHECK(dp.lower > 0.0);
}

TEST_CASE("exponent cache lifecycle") {
  we_exponent_cache* cache = nullptr;
  REQUIRE(we_exponent_cache_create(4, &cache) == WE_OK);
  REQUIRE(cache != nullptr);
  CHECK(we_exponent_cache_order(cache) == 4);

  const uint64_t expected[] = {15, 26, 16, 6, 1};
  for (int j = 0; j <= 4; ++j) {
    uint64_t h = 0;
    REQUIRE(we_exponent_cache_entry(cache, j, &h) == WE_OK);
    CHECK(h == expected[j]);
  }
  uint64_t h = 0;
  CHECK(we_exponent_cache_entry(cache, 5, &h) == WE_ERR_DOMAIN);
  CHECK(we_exponent_cache_entry(cache, -1, &h) == WE_ERR_DOMAIN);
  CHECK(we_exponent_cache_entry(nullptr, 0, &h) == WE_ERR_INVALID);

  double u = 0.0;
  we_op_count tally{};
  REQUIRE(we_upper_bound_cached(2.0, cache, &tally, &u) == WE_OK);
  CHECK(rel_close(u, 0.88661921141844847131634849257484256258, 1e-14));
  CHECK(tally.logs == 5);
  CHECK(tally.mults == 6);
  CHECK(tally.adds == 8);
  CHECK(tally.pows == 1);
  we_exponent_cache_destroy(cache);

  // At k = 64 the leading exponent is exactly UINT64_MAX; the next one no
  // longer fits and must report overflow instead of truncating.
  we_exponent_cache* big = nullptr;
  REQUIRE(we_exponent_cache_create(64, &big) == WE_OK);
  REQUIRE(we_exponent_cache_entry(big, 0, &h) == WE_OK);
  CHECK(h == UINT64_MAX);
  CHECK(we_exponent_cache_entry(big, 1, &h) == WE_ERR_OVERFLOW);
  CHECK(std::strstr(we_last_error(), "64 bits") != nullptr);
  we_exponent_cache_destroy(big);

  we_exponent_cache* bad = nullptr;
  CHECK(we_exponent_cache_create(65, &bad) == WE_ERR_DOMAIN);
  CHECK(bad == nullptr);
  CHECK(we_exponent_cache_order(nullptr) == -1);
}

TEST_CASE("op tallies accumulate and survive failed calls") {
  we_op_count tally{};
  tally.logs = 5;

  double u = 0.0;
  REQUIRE(we_upper_bound_direct(2.0, 4, &tally, &u) == WE_OK);
  CHECK(tally.logs == 5 + 5);
  CHECK(tally.pows == 1);
  const int64_t logs_after_first = tally.logs;
  const int64_t mults_after_first = tally.mults;

  REQUIRE(we_upper_bound_direct(2.0, 4, &tally, &u) == WE_OK);
  CHECK(tally.logs == logs_after_first + 5);
  CHECK(tally.mults == 2 * mults_after_first);
  CHECK(tally.pows == 2);

  const we_op_count snapshot = tally;
  CHECK(we_upper_bound_direct(-1.0, 4, &tally, &u) == WE_ERR_DOMAIN);
  CHECK(tally.logs == snapshot.logs);
  CHECK(tally.mults == snapshot.mults);
  CHECK(tally.adds == snapshot.adds);
  CHECK(tally.pows == snapshot.pows);
}

TEST_CASE("reference enclosures through the C interface") {
  we_enclosure* enc = nullptr;
  REQUIRE(we_ratio_reference(1.0, 50, -1, &enc) == WE_OK);
  REQUIRE(enc != nullptr);
  CHECK(we_enclosure_certified(enc) == 1);
  CHECK(we_enclosure_digits(enc) == 50);
  CHECK(we_enclosure_lo(enc) <= we_enclosure_mid(enc));
  CHECK(we_enclosure_mid(enc) <= we_enclosure_hi(enc));
  CHECK(rel_close(we_enclosure_mid(enc), 0.7978845608028654, 1e-15));

  double lw = 0.0;
  REQUIRE(we_enclosure_rel_width_log10(enc, &lw) == WE_OK);
  CHECK(lw < -42.0);

  char buf[128];
  REQUIRE(we_enclosure_mid_str(enc, 40, buf, sizeof buf) == WE_OK);
  CHECK(std::strcmp(buf, "0.7978845608028653558798921198687637369517") == 0);
  CHECK(we_enclosure_mid_str(enc, 40, buf, 10) == WE_ERR_DOMAIN);
  CHECK(std::strcmp(we_last_error(), "buffer too small for requested digits") == 0);
  CHECK(we_enclosure_mid_str(enc, 0, buf, sizeof buf) == WE_ERR_DOMAIN);
  const double auto_mid = we_enclosure_mid(enc);
  we_enclosure_destroy(enc);

  // A forced squeeze order far below the automatic one still encloses the
  // value but cannot certify the width target.
  we_enclosure* forced = nullptr;
  REQUIRE(we_ratio_reference(1.0, 30, 40, &forced) == WE_OK);
  CHECK(we_enclosure_certified(forced) == 0);
  CHECK(we_enclosure_lo(forced) <= auto_mid);
  CHECK(auto_mid <= we_enclosure_hi(forced));
  we_enclosure_destroy(forced);

  we_enclosure* w = nullptr;
  REQUIRE(we_wallis_reference(0.0, 50, -1, &w) == WE_OK);
  CHECK(rel_close(we_enclosure_mid(w), 0.5641895835477563, 1e-15));
  we_enclosure_destroy(w);

  we_enclosure* d = nullptr;
  REQUIRE(we_digamma_diff_reference(0.0, 50, -1, &d) == WE_OK);
  CHECK(rel_close(we_enclosure_mid(d), 1.3862943611198906, 1e-15));
  we_enclosure_destroy(d);

  CHECK(we_enclosure_rel_width_log10(nullptr, &lw) == WE_ERR_INVALID);
  CHECK(we_enclosure_certified(nullptr) == 0);
}

TEST_CASE("rival families and race through the C interface") {
  double g = 0.0;
  REQUIRE(we_gauss_watson_lower(1.0, 3, &g) == WE_OK);
  CHECK(g == 1.125);
  CHECK(we_gauss_watson_lower(-1.0, 3, &g) == WE_ERR_DOMAIN);

  double alpha = 0.0, beta = 0.0;
  REQUIRE(we_shanbhag_bounds(1.0, 0.5, 1, &alpha, &beta) == WE_OK);
  CHECK(rel_close(alpha, 1.0606601717798214, 1e-15));
  CHECK(rel_close(beta, 1.1858541225631423, 1e-15));
  CHECK(we_shanbhag_bounds(1.0, 1.5, 1, &alpha, &beta) == WE_ERR_DOMAIN);

  we_race_report rep{};
  REQUIRE(we_convergence_race(1.0, 1e-4, &rep) == WE_OK);
  CHECK(rep.x == 1.0);
  CHECK(rep.eps == 1e-4);
  CHECK(rel_close(rep.reference, 1.1283791670955126, 1e-15));
  CHECK(rep.gauss_series.parameter == 14);
  CHECK(rep.gauss_series.capped == 0);
  CHECK(rep.geometric.capped == 0);
  CHECK(rep.geometric.rel_err < 1e-4);
  CHECK(rep.geometric.parameter <= rep.certified_order);
  CHECK(rep.certified_order > 0);

  CHECK(we_convergence_race(0.0, 1e-4, &rep) == WE_ERR_DOMAIN);
}
