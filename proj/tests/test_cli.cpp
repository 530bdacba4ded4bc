#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "golden_values.hpp"

#ifndef XISTRIP_CLI_PATH
#error "XISTRIP_CLI_PATH must point at the built binary"
#endif

namespace {

struct run_result {
  int code = -1;
  std::string out;
};

run_result run_cli(const std::string &args) {
  run_result r;
  std::string cmd = std::string(XISTRIP_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE *p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), p)) > 0)
    r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// Value of a "key = number" line in plain-format output; NaN if absent.
double plain_field(const std::string &out, const std::string &key) {
  std::istringstream in(out);
  std::string line;
  std::string prefix = key + " = ";
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0)
      return std::strtod(line.c_str() + prefix.size(), nullptr);
  return std::nan("");
}

std::vector<std::string> lines_of(const std::string &out) {
  std::vector<std::string> lines;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line))
    lines.push_back(line);
  return lines;
}

// Comma-separated fields of one CSV line.
std::vector<std::string> csv_fields(const std::string &line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string f;
  while (std::getline(in, f, ','))
    fields.push_back(f);
  return fields;
}

} // namespace

TEST_CASE("eval prints the critical-line value") {
  run_result r = run_cli("eval --sigma 0.5 --t 0 --method incgamma");
  CHECK(r.code == 0);
  CHECK(std::abs(plain_field(r.out, "value_re") - golden::xi_half) <= 1e-10);
  CHECK(plain_field(r.out, "value_im") == 0.0);
  CHECK(plain_field(r.out, "converged") == 1.0);

  r = run_cli("eval --sigma 0.5 --t 12 --method classical");
  CHECK(r.code == 0);
  CHECK(std::abs(plain_field(r.out, "value_re") - golden::xi_half_12i_re) <=
        1e-10);
}

TEST_CASE("both coordinate planes address the same point") {
  run_result a = run_cli("eval --sigma 0.5 --t 12 --method incgamma");
  run_result b = run_cli("eval --x0 0 --t0 12 --method incgamma");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("json format carries the same record") {
  run_result r = run_cli("eval --sigma 0.5 --t 0 --format json");
  CHECK(r.code == 0);
  CHECK(r.out.front() == '{');
  CHECK(r.out.find("\"method\": \"incgamma\"") != std::string::npos);
  CHECK(r.out.find("\"converged\": true") != std::string::npos);
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(run_cli("eval --sigma 1.5 --t 0 --method strip").code == 2);
  CHECK(run_cli("eval --sigma 0.6 --t 0 --method realform").code == 2);
  CHECK(run_cli("eval --bogus-flag 1").code == 2);
  CHECK(run_cli("eval --sigma 0.5 --x0 0.0").code == 2); // mixed planes
  CHECK(run_cli("eval").code == 2);                      // no point given
  CHECK(run_cli("nonsense").code == 2);
  CHECK(run_cli("scan --from 5 --to 1").code == 2);
  CHECK(run_cli("gammainc --beta 1.25 --alpha 0").code == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("eval --help").code == 0);
}

TEST_CASE("exhausted budget exits 3") {
  run_result r = run_cli("gammainc --beta 1.25 --k 0 --alpha 3.14 --m-cap 2");
  CHECK(r.code == 3);
}

TEST_CASE("scan emits the fixed header and byte-stable rows") {
  std::string args = "scan --from 0 --to 5 --step 1";
  run_result a = run_cli(args);
  CHECK(a.code == 0);
  auto ls = lines_of(a.out);
  REQUIRE(ls.size() == 7);
  CHECK(ls[0] == "t0,xi_incgamma,xi_classical,xi_theta,max_dev");
  for (size_t i = 1; i < ls.size(); ++i) {
    auto f = csv_fields(ls[i]);
    REQUIRE(f.size() == 5);
    CHECK(std::strtod(f[4].c_str(), nullptr) <= 1e-6);
  }
  run_result b = run_cli(args);
  CHECK(a.out == b.out); // identical bytes on identical flags
}

TEST_CASE("scan rows are even in t0") {
  run_result r = run_cli("scan --from -2 --to 2 --step 1");
  CHECK(r.code == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 6);
  auto lo = csv_fields(ls[1]), hi = csv_fields(ls[5]); // t0 = -2 and +2
  for (int col : {1, 2, 3}) {
    double a = std::strtod(lo[col].c_str(), nullptr);
    double b = std::strtod(hi[col].c_str(), nullptr);
    CHECK(std::abs(a - b) <= 1e-10);
  }
}

TEST_CASE("scan brackets the first root by a single sign change") {
  run_result r = run_cli("scan --from 14 --to 14.5 --step 0.1");
  CHECK(r.code == 0);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() >= 6);
  int changes = 0;
  double prev = 0.0;
  for (size_t i = 1; i < ls.size(); ++i) {
    double v = std::strtod(csv_fields(ls[i])[1].c_str(), nullptr);
    if (i > 1 && prev * v < 0.0)
      ++changes;
    prev = v;
  }
  CHECK(changes == 1);
}

TEST_CASE("a failing row prints nan sentinels and flips the exit code") {
  run_result r = run_cli("scan --from 0 --to 2 --step 1 --m-cap 2");
  CHECK(r.code == 3);
  auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 4); // header stays, rows keep their t0
  for (size_t i = 1; i < ls.size(); ++i) {
    auto f = csv_fields(ls[i]);
    REQUIRE(f.size() == 5);
    CHECK_FALSE(std::isnan(std::strtod(f[0].c_str(), nullptr)));
    CHECK(f[1] == "nan");
    CHECK(f[4] == "nan");
  }
}

TEST_CASE("zeros reports a JSON array of refined brackets") {
  run_result r = run_cli("zeros --from 10 --to 22");
  CHECK(r.code == 0);
  CHECK(r.out.front() == '[');
  size_t first = r.out.find("\"root\": ");
  REQUIRE(first != std::string::npos);
  double root1 = std::strtod(r.out.c_str() + first + 8, nullptr);
  size_t second = r.out.find("\"root\": ", first + 1);
  REQUIRE(second != std::string::npos);
  double root2 = std::strtod(r.out.c_str() + second + 8, nullptr);
  CHECK(std::abs(root1 - golden::zero_first) <= 1e-3);
  CHECK(std::abs(root2 - golden::zero_second) <= 1e-3);

  r = run_cli("zeros --from 0 --to 10");
  CHECK(r.code == 0);
  CHECK(r.out == "[]\n");
}

TEST_CASE("gammainc reports the value and its running bound") {
  run_result r =
      run_cli("gammainc --beta 1.25 --k 0 --alpha 3.14159265358979323846");
  CHECK(r.code == 0);
  CHECK(std::abs(plain_field(r.out, "value_re") - golden::uig_94_pi) <= 1e-9);
  CHECK(plain_field(r.out, "terms_used") <= 100.0);
  CHECK(plain_field(r.out, "remainder_bound") >= 0.0);
  // alpha = pi * 1^2, beta in [1, 3/2]: the companion tail bound applies.
  double crude = plain_field(r.out, "crude_bound");
  double pi = 3.141592653589793238462643383279503;
  CHECK(std::abs(crude - 2.0 * pi * pi * std::exp(-pi)) <= 1e-12);

  // Off the special grid the bound line disappears.
  r = run_cli("gammainc --beta 1.25 --k 0 --alpha 2.25");
  CHECK(r.code == 0);
  CHECK(std::isnan(plain_field(r.out, "crude_bound")));
  CHECK(std::abs(plain_field(r.out, "value_re") - golden::uig_94_a225) <= 1e-9);

  // Vanishing lower limit: the integral tends to the complete gamma.
  r = run_cli("gammainc --beta 1.25 --k 0 --alpha 1e-12");
  CHECK(r.code == 0);
  CHECK(std::abs(plain_field(r.out, "value_re") -
                 golden::gamma_nine_quarters) <= 1e-9);
}

TEST_CASE("compare lists every applicable route and their spread") {
  run_result r = run_cli("compare --sigma 0.5 --t 1 --quad-T 30");
  CHECK(r.code == 0);
  for (const char *key : {"incgamma_re", "realform_re", "theta_re",
                          "classical_re", "contour_re"})
    CHECK_FALSE(std::isnan(plain_field(r.out, key)));
  CHECK(plain_field(r.out, "max_dev") <= 1e-5);

  // Off the line the real form drops out and the series reports strip.
  r = run_cli("compare --sigma 0.8 --t 2 --quad-T 30");
  CHECK(r.code == 0);
  CHECK(std::isnan(plain_field(r.out, "realform_re")));
  CHECK_FALSE(std::isnan(plain_field(r.out, "strip_re")));
  CHECK(plain_field(r.out, "max_dev") <= 1e-5);
}

TEST_CASE("config file supplies defaults, flags still win") {
  std::string path = "xistrip_cli_test.cfg";
  {
    std::ofstream f(path);
    f << "epsilon=1e-2\n";
  }
  run_result r = run_cli("eval --sigma 0.5 --t 0 --config " + path);
  CHECK(r.code == 0);
  CHECK(plain_field(r.out, "n_used") == 2.0); // loose epsilon: two terms

  r = run_cli("eval --sigma 0.5 --t 0 --epsilon 1e-9 --config " + path);
  CHECK(r.code == 0);
  CHECK(plain_field(r.out, "n_used") == 3.0); // flag overrides the file
  std::remove(path.c_str());
}
