#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr merged
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(WALLIS_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {};
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int rc = pclose(pipe);
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start < text.size()) {
    const size_t nl = text.find('\n', start);
    if (nl == std::string::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("eval output is exact and deterministic") {
  const std::string args = "eval --p 1 --k 1 --oracle";
  const RunResult r1 = run_cli(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.output ==
        "target=ratio p=1 k=1 strategy=cached lower=0.78254229003664377 "
        "upper=0.8408964152537145 width=0.058354125217070729 cap=0.18920711500272105 "
        "ref=0.79788456080286541 rel_err_lower=-0.019228684849827885 "
        "rel_err_upper=0.053907365255405792 certified=1\n");
  const RunResult r2 = run_cli(args);
  CHECK(r2.output == r1.output);
}

TEST_CASE("table emits a well-formed csv") {
  const RunResult r = run_cli("table --p --from 1 --to 2 --count 3 --orders 1,2");
  REQUIRE(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "var,k,lower,upper,ref,rel_err_lower,rel_err_upper");
  CHECK(lines[1] ==
        "1,1,0.78254229003664377,0.8408964152537145,0.79788456080286541,"
        "-0.019228684849827885,0.053907365255405792");

  const double expected_var[] = {1.0, 1.0, 1.5, 1.5, 2.0, 2.0};
  const int expected_k[] = {1, 2, 1, 2, 1, 2};
  double prev_err_lower = 0.0, prev_err_upper = 0.0;
  for (size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split_csv(lines[i]);
    REQUIRE(fields.size() == 7);
    const double var = std::strtod(fields[0].c_str(), nullptr);
    const int k = std::atoi(fields[1].c_str());
    const double lower = std::strtod(fields[2].c_str(), nullptr);
    const double upper = std::strtod(fields[3].c_str(), nullptr);
    const double ref = std::strtod(fields[4].c_str(), nullptr);
    const double err_lower = std::strtod(fields[5].c_str(), nullptr);
    const double err_upper = std::strtod(fields[6].c_str(), nullptr);

    CHECK(var == expected_var[i - 1]);
    CHECK(k == expected_k[i - 1]);
    CHECK(lower < ref);
    CHECK(ref < upper);
    CHECK(err_lower < 0.0);
    CHECK(err_upper > 0.0);
    // %.17g round-trips doubles exactly, so recomputing the relative errors
    // from the printed endpoints must reproduce the printed error columns.
    CHECK(std::fabs(err_lower - (lower - ref) / ref) <= 1e-15 * std::fabs(err_lower));
    CHECK(std::fabs(err_upper - (upper - ref) / ref) <= 1e-15 * err_upper);
    if (k == 2) {
      CHECK(std::fabs(err_lower) < std::fabs(prev_err_lower));
      CHECK(err_upper < prev_err_upper);
    }
    prev_err_lower = err_lower;
    prev_err_upper = err_upper;
  }
}

TEST_CASE("table writes its csv to a file") {
  const std::string path = "/tmp/wallis_cli_test_table.csv";
  std::remove(path.c_str());
  const RunResult r =
      run_cli("table --x --from 0 --to 1 --count 2 --orders 3 --output " + path);
  CHECK(r.exit_code == 0);

  FILE* f = std::fopen(path.c_str(), "r");
  REQUIRE(f != nullptr);
  char buf[4096];
  const size_t n = std::fread(buf, 1, sizeof buf, f);
  std::fclose(f);
  std::remove(path.c_str());
  const std::string content(buf, n);
  const auto lines = lines_of(content);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "var,k,lower,upper,ref,rel_err_lower,rel_err_upper");
  CHECK(split_csv(lines[1])[0] == "0");
  CHECK(split_csv(lines[2])[0] == "1");
}

TEST_CASE("solve reports the smallest certified order") {
  const RunResult r1 = run_cli("solve --p 1 --eps 1e-6");
  CHECK(r1.exit_code == 0);
  CHECK(r1.output ==
        "p=1 eps=1e-06 k=19 cap=6.6103688207420884e-07 cap_prev=1.3220742011181771e-06\n");
  const RunResult r2 = run_cli("solve --p 2 --eps 1e-6");
  CHECK(r2.exit_code == 0);
  CHECK(r2.output ==
        "p=2 eps=1e-06 k=18 cap=7.7336361864876904e-07 cap_prev=1.5467278353888246e-06\n");
}

TEST_CASE("bench opcount prints exact per-strategy tallies") {
  const RunResult r = run_cli("bench --mode opcount --k-list 8 --evals 100");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output,
                 "mode=opcount strategy=direct k=8 evals=100 logs=900 mults=6000 "
                 "adds=8000 pows=100 arith=14000\n"));
  CHECK(contains(r.output,
                 "mode=opcount strategy=recursive k=8 evals=100 logs=0 mults=7300 "
                 "adds=3600 pows=4500 arith=10900\n"));
  CHECK(contains(r.output,
                 "mode=opcount strategy=cached k=8 evals=100 logs=900 mults=1000 "
                 "adds=1600 pows=100 arith=2600\n"));
}

TEST_CASE("bench race prints one line per family") {
  const RunResult r = run_cli("bench --mode race --x 1 --eps 1e-4");
  CHECK(r.exit_code == 0);
  const auto lines = lines_of(r.output);
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == "mode=race x=1 eps=0.0001 reference=1.1283791670955126 certified_k=11");
  CHECK(contains(lines[1], "family=geometric parameter=5 capped=0"));
  CHECK(contains(lines[2], "family=gauss_series parameter=14 capped=0"));
  CHECK(contains(lines[3], "family=wendel_shift parameter=1249 capped=0"));
}

TEST_CASE("usage and domain failures exit with code 2") {
  const RunResult domain = run_cli("eval --x -0.6 --k 3");
  CHECK(domain.exit_code == 2);
  CHECK(contains(domain.output, "error: --x: x must exceed -0.5"));

  const RunResult missing = run_cli("eval --k 1");
  CHECK(missing.exit_code == 2);
  CHECK(contains(missing.output, "exactly one of --p or --x is required"));

  const RunResult both = run_cli("eval --p 1 --x 1 --k 1");
  CHECK(both.exit_code == 2);

  const RunResult none = run_cli("");
  CHECK(none.exit_code == 2);

  const RunResult bad_eps = run_cli("solve --p 2 --eps 1.5");
  CHECK(bad_eps.exit_code == 2);
  CHECK(contains(bad_eps.output, "error: --eps: eps must lie in (0, 1)"));
}

TEST_CASE("unreachable tolerances exit with code 4") {
  const RunResult r = run_cli("solve --p 2 --eps 1e-20");
  CHECK(r.exit_code == 4);
  CHECK(contains(r.output, "error: --eps: no order k <= 64 certifies the requested tolerance"));
}

TEST_CASE("unwritable output paths exit with code 3") {
  const RunResult r =
      run_cli("table --p --from 1 --to 2 --count 3 --output /nonexistent/dir/out.csv");
  CHECK(r.exit_code == 3);
  CHECK(contains(r.output, "error: --output: cannot open '/nonexistent/dir/out.csv' for writing"));
}

TEST_CASE("version and help") {
  const RunResult v = run_cli("--version");
  CHECK(v.exit_code == 0);
  CHECK(v.output == "1.0.0\n");
  const RunResult h = run_cli("--help");
  CHECK(h.exit_code == 0);
}
