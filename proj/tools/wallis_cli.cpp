// Command line driver for the wallis_enclose C API.
//
// Subcommands: eval (one point), table (CSV over a grid), solve (smallest
// certified order for a tolerance), bench (operation counts / convergence
// race).  Exit codes: 0 success, 2 usage or domain error, 3 I/O error,
// 4 tolerance unreachable.  Output is fully deterministic; computed values
// are printed with %.17g so they round-trip through strtod.

#include <cmath>
#include <cstdio>
#include <cstring>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "wallis_enclose.h"

namespace {

std::string fmt17(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmtg(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

using FlagMap = std::initializer_list<std::pair<const char*, const char*>>;

// Attributes an API error message to the CLI flag whose value caused it by
// matching the leading word, then maps the status to an exit code.
int report_status(we_status st, FlagMap flags) {
  const std::string msg = we_last_error();
  const char* flag = nullptr;
  for (const auto& [word, fl] : flags) {
    const size_t n = std::strlen(word);
    if (msg.compare(0, n, word) == 0 && (msg.size() == n || msg[n] == ' ')) {
      flag = fl;
      break;
    }
  }
  if (flag)
    std::fprintf(stderr, "error: %s: %s\n", flag, msg.c_str());
  else
    std::fprintf(stderr, "error: %s\n", msg.c_str());
  return (st == WE_ERR_TOLERANCE || st == WE_ERR_PRECISION) ? 4 : 2;
}

int usage_error(const char* flag, const char* msg) {
  std::fprintf(stderr, "error: %s: %s\n", flag, msg);
  return 2;
}

we_strategy parse_strategy(const std::string& name) {
  if (name == "direct") return WE_STRATEGY_DIRECT;
  if (name == "recursive") return WE_STRATEGY_RECURSIVE;
  return WE_STRATEGY_CACHED;
}

struct EvalOpts {
  double p = 0.0, x = 0.0;
  int k = 0;
  std::string strategy = "cached";
  bool oracle = false;
  int digits = 50;
  bool has_p = false, has_x = false;
};

int run_eval(const EvalOpts& o) {
  static constexpr FlagMap kFlags = {
      {"p", "--p"}, {"x", "--x"}, {"k", "--k"}, {"digits", "--digits"}};
  if (o.has_p == o.has_x) {
    std::fprintf(stderr, "error: exactly one of --p or --x is required\n");
    return 2;
  }
  const we_strategy strat = parse_strategy(o.strategy);
  we_bound_pair bp;
  we_status st = o.has_x ? we_wallis_bounds(o.x, o.k, strat, nullptr, &bp)
                         : we_ratio_bounds(o.p, o.k, strat, nullptr, &bp);
  if (st != WE_OK) return report_status(st, kFlags);
  const double dof = o.has_x ? 2.0 * o.x + 1.0 : o.p;
  double cap = 0.0;
  st = we_relative_error_cap(dof, o.k, &cap);
  if (st != WE_OK) return report_status(st, kFlags);

  std::string line = "target=";
  line += o.has_x ? "wallis" : "ratio";
  line += o.has_x ? " x=" + fmtg(o.x) : " p=" + fmtg(o.p);
  line += " k=" + std::to_string(o.k);
  line += " strategy=" + o.strategy;
  line += " lower=" + fmt17(bp.lower);
  line += " upper=" + fmt17(bp.upper);
  line += " width=" + fmt17(bp.upper - bp.lower);
  line += " cap=" + fmt17(cap);
  if (o.oracle) {
    we_enclosure* enc = nullptr;
    st = o.has_x ? we_wallis_reference(o.x, o.digits, -1, &enc)
                 : we_ratio_reference(o.p, o.digits, -1, &enc);
    if (st != WE_OK) return report_status(st, kFlags);
    const double ref = we_enclosure_mid(enc);
    line += " ref=" + fmt17(ref);
    line += " rel_err_lower=" + fmt17((bp.lower - ref) / ref);
    line += " rel_err_upper=" + fmt17((bp.upper - ref) / ref);
    line += " certified=" + std::to_string(we_enclosure_certified(enc));
    we_enclosure_destroy(enc);
  }
  line += "\n";
  std::fputs(line.c_str(), stdout);
  return 0;
}

struct TableOpts {
  double from = 0.0, to = 0.0;
  int count = 0;
  bool log = false;
  std::vector<int> orders = {1, 2, 3};
  std::string strategy = "cached";
  std::string output = "-";
  bool var_p = false, var_x = false;
};

int run_table(const TableOpts& o) {
  static constexpr FlagMap kFlags = {{"p", "--from"}, {"x", "--from"}, {"k", "--orders"}};
  if (o.var_p == o.var_x) {
    std::fprintf(stderr, "error: exactly one of --p or --x is required\n");
    return 2;
  }
  if (o.count < 2) return usage_error("--count", "at least 2 grid points are required");
  if (o.log && (!(o.from > 0.0) || !(o.to > 0.0)))
    return usage_error("--log", "log spacing requires positive --from and --to");
  if (o.var_x) {
    if (!(o.from > -0.5)) return usage_error("--from", "x must exceed -0.5");
    if (!(o.to > -0.5)) return usage_error("--to", "x must exceed -0.5");
  } else {
    if (!(o.from > 0.0)) return usage_error("--from", "p must be positive");
    if (!(o.to > 0.0)) return usage_error("--to", "p must be positive");
  }
  if (o.to < o.from) return usage_error("--to", "must not be below --from");
  for (const int k : o.orders)
    if (k < 0 || k > WE_MAX_ORDER) return usage_error("--orders", "k must lie in [0, 64]");
  const we_strategy strat = parse_strategy(o.strategy);

  std::string text = "var,k,lower,upper,ref,rel_err_lower,rel_err_upper\n";
  for (int i = 0; i < o.count; ++i) {
    double g;
    if (i == 0)
      g = o.from;
    else if (i == o.count - 1)
      g = o.to;
    else if (o.log)
      g = std::exp(std::log(o.from) +
                   (std::log(o.to) - std::log(o.from)) * i / (o.count - 1));
    else
      g = o.from + (o.to - o.from) * i / (o.count - 1);

    we_enclosure* enc = nullptr;
    we_status st = o.var_x ? we_wallis_reference(g, 50, -1, &enc)
                           : we_ratio_reference(g, 50, -1, &enc);
    if (st != WE_OK) return report_status(st, kFlags);
    const double ref = we_enclosure_mid(enc);
    we_enclosure_destroy(enc);

    for (const int k : o.orders) {
      we_bound_pair bp;
      st = o.var_x ? we_wallis_bounds(g, k, strat, nullptr, &bp)
                   : we_ratio_bounds(g, k, strat, nullptr, &bp);
      if (st != WE_OK) return report_status(st, kFlags);
      text += fmt17(g);
      text += ',' + std::to_string(k);
      text += ',' + fmt17(bp.lower);
      text += ',' + fmt17(bp.upper);
      text += ',' + fmt17(ref);
      text += ',' + fmt17((bp.lower - ref) / ref);
      text += ',' + fmt17((bp.upper - ref) / ref);
      text += '\n';
    }
  }

  if (o.output == "-") {
    std::fputs(text.c_str(), stdout);
    return 0;
  }
  std::FILE* f = std::fopen(o.output.c_str(), "wb");
  if (!f) {
    std::fprintf(stderr, "error: --output: cannot open '%s' for writing\n", o.output.c_str());
    return 3;
  }
  const size_t written = std::fwrite(text.data(), 1, text.size(), f);
  const bool bad = written != text.size() || std::fclose(f) != 0;
  if (bad) {
    std::fprintf(stderr, "error: --output: failed writing '%s'\n", o.output.c_str());
    return 3;
  }
  return 0;
}

struct SolveOpts {
  double p = 0.0;
  double eps = 0.0;
};

int run_solve(const SolveOpts& o) {
  static constexpr FlagMap kFlags = {{"p", "--p"}, {"eps", "--eps"}, {"no", "--eps"}};
  int32_t k = 0;
  we_status st = we_min_order_for_tolerance(o.p, o.eps, &k);
  if (st != WE_OK) return report_status(st, kFlags);
  double cap = 0.0;
  st = we_relative_error_cap(o.p, k, &cap);
  if (st != WE_OK) return report_status(st, kFlags);
  std::string line = "p=" + fmtg(o.p) + " eps=" + fmtg(o.eps) + " k=" + std::to_string(k) +
                     " cap=" + fmt17(cap);
  if (k > 0) {
    double prev = 0.0;
    st = we_relative_error_cap(o.p, k - 1, &prev);
    if (st != WE_OK) return report_status(st, kFlags);
    line += " cap_prev=" + fmt17(prev);
  }
  line += "\n";
  std::fputs(line.c_str(), stdout);
  return 0;
}

struct BenchOpts {
  std::string mode;
  std::vector<int> k_list = {8, 16, 32};
  int evals = 100;
  double x = 0.0;
  double eps = 0.0;
  bool has_x = false, has_eps = false;
};

int run_bench_opcount(const BenchOpts& o) {
  static constexpr FlagMap kFlags = {{"k", "--k-list"}, {"p", "--k-list"}};
  if (o.evals < 1) return usage_error("--evals", "at least 1 evaluation is required");
  for (const int k : o.k_list)
    if (k < 0 || k > WE_MAX_ORDER) return usage_error("--k-list", "k must lie in [0, 64]");

  std::string text;
  for (const int k : o.k_list) {
    we_exponent_cache* cache = nullptr;
    we_status st = we_exponent_cache_create(k, &cache);
    if (st != WE_OK) return report_status(st, kFlags);
    for (const char* name : {"direct", "recursive", "cached"}) {
      we_op_count tally = {0, 0, 0, 0};
      for (int i = 0; i < o.evals; ++i) {
        const double p = 2.0 + i;
        double out = 0.0;
        if (std::strcmp(name, "direct") == 0)
          st = we_upper_bound_direct(p, k, &tally, &out);
        else if (std::strcmp(name, "recursive") == 0)
          st = we_upper_bound_recursive(p, k, &tally, &out);
        else
          st = we_upper_bound_cached(p, cache, &tally, &out);
        if (st != WE_OK) {
          we_exponent_cache_destroy(cache);
          return report_status(st, kFlags);
        }
      }
      text += "mode=opcount strategy=";
      text += name;
      text += " k=" + std::to_string(k);
      text += " evals=" + std::to_string(o.evals);
      text += " logs=" + std::to_string(static_cast<long long>(tally.logs));
      text += " mults=" + std::to_string(static_cast<long long>(tally.mults));
      text += " adds=" + std::to_string(static_cast<long long>(tally.adds));
      text += " pows=" + std::to_string(static_cast<long long>(tally.pows));
      text += " arith=" + std::to_string(static_cast<long long>(tally.mults + tally.adds));
      text += "\n";
    }
    we_exponent_cache_destroy(cache);
  }
  std::fputs(text.c_str(), stdout);
  return 0;
}

int run_bench_race(const BenchOpts& o) {
  static constexpr FlagMap kFlags = {{"x", "--x"}, {"eps", "--eps"}};
  if (!o.has_x) return usage_error("--x", "required for --mode race");
  if (!o.has_eps) return usage_error("--eps", "required for --mode race");
  we_race_report rep;
  const we_status st = we_convergence_race(o.x, o.eps, &rep);
  if (st != WE_OK) return report_status(st, kFlags);

  const std::string prefix = "mode=race x=" + fmtg(o.x) + " eps=" + fmtg(o.eps);
  std::string text = prefix + " reference=" + fmt17(rep.reference) +
                     " certified_k=" + std::to_string(rep.certified_order) + "\n";
  const struct {
    const char* name;
    const we_race_entry* e;
  } rows[] = {{"geometric", &rep.geometric},
              {"gauss_series", &rep.gauss_series},
              {"wendel_shift", &rep.wendel_shift}};
  for (const auto& row : rows) {
    text += prefix;
    text += " family=";
    text += row.name;
    text += " parameter=" + std::to_string(static_cast<long long>(row.e->parameter));
    text += " capped=" + std::to_string(row.e->capped ? 1 : 0);
    text += " rel_err=" + fmt17(row.e->rel_err);
    text += "\n";
  }
  std::fputs(text.c_str(), stdout);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified enclosures for the Wallis and Student density ratios"};
  app.set_version_flag("--version", std::string(we_version()));
  app.require_subcommand(1);

  EvalOpts eo;
  CLI::App* eval = app.add_subcommand("eval", "evaluate certified bounds at one point");
  CLI::Option* eval_p = eval->add_option("--p", eo.p, "degrees of freedom, p > 0");
  CLI::Option* eval_x = eval->add_option("--x", eo.x, "Wallis argument, x > -1/2");
  eval_p->excludes(eval_x);
  eval_x->excludes(eval_p);
  eval->add_option("--k", eo.k, "bound order, 0..64")->required();
  eval->add_option("--strategy", eo.strategy, "direct|recursive|cached")
      ->check(CLI::IsMember({"direct", "recursive", "cached"}));
  eval->add_flag("--oracle", eo.oracle, "also print the reference value and relative errors");
  eval->add_option("--digits", eo.digits, "oracle digits (with --oracle)");

  TableOpts to;
  CLI::App* table = app.add_subcommand("table", "CSV table of bounds over a grid");
  CLI::Option* table_p = table->add_flag("--p", to.var_p, "grid over degrees of freedom");
  CLI::Option* table_x = table->add_flag("--x", to.var_x, "grid over the Wallis argument");
  table_p->excludes(table_x);
  table_x->excludes(table_p);
  table->add_option("--from", to.from, "grid start")->required();
  table->add_option("--to", to.to, "grid end")->required();
  table->add_option("--count", to.count, "number of grid points")->required();
  table->add_flag("--log", to.log, "logarithmic spacing");
  table->add_option("--orders", to.orders, "comma-separated bound orders")->delimiter(',');
  table->add_option("--strategy", to.strategy, "direct|recursive|cached")
      ->check(CLI::IsMember({"direct", "recursive", "cached"}));
  table->add_option("--output", to.output, "output file, '-' for stdout");

  SolveOpts so;
  CLI::App* solve = app.add_subcommand("solve", "smallest order certifying a tolerance");
  solve->add_option("--p", so.p, "degrees of freedom, p > 0")->required();
  solve->add_option("--eps", so.eps, "relative tolerance in (0, 1)")->required();

  BenchOpts bo;
  CLI::App* bench = app.add_subcommand("bench", "operation counts or a convergence race");
  bench->add_option("--mode", bo.mode, "opcount|race")
      ->required()
      ->check(CLI::IsMember({"opcount", "race"}));
  bench->add_option("--k-list", bo.k_list, "comma-separated orders (opcount)")->delimiter(',');
  bench->add_option("--evals", bo.evals, "evaluations per strategy (opcount)");
  CLI::Option* bench_x = bench->add_option("--x", bo.x, "Wallis argument (race)");
  CLI::Option* bench_eps = bench->add_option("--eps", bo.eps, "relative tolerance (race)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  eo.has_p = eval_p->count() > 0;
  eo.has_x = eval_x->count() > 0;
  bo.has_x = bench_x->count() > 0;
  bo.has_eps = bench_eps->count() > 0;

  if (app.got_subcommand(eval)) return run_eval(eo);
  if (app.got_subcommand(table)) return run_table(to);
  if (app.got_subcommand(solve)) return run_solve(so);
  if (app.got_subcommand(bench))
    return bo.mode == "race" ? run_bench_race(bo) : run_bench_opcount(bo);
  return 2;
}
