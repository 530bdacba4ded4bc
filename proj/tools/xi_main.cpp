// Command-line front end for libxistrip. Links only the C API.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xistrip/xistrip.h"

namespace {

constexpr double PI = 3.14159265358979323846;

struct knobs {
  double epsilon = 1e-9;
  int n_max = 8;
  int m_cap = 400;
  double quad_step = 0.01;
  double quad_T = 0.0;
  std::string config_file;
  // Option handles so the config loader can tell which flags were given.
  CLI::Option *opt[5] = {nullptr, nullptr, nullptr, nullptr, nullptr};
};

// Every numeric field goes through here: %.11e, 12 significant digits,
// C locale, so tabular output is byte-stable across runs.
std::string fmt(double v) {
  if (!std::isfinite(v))
    return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.11e", v);
  return buf;
}

const char *method_name(int m) {
  switch (m) {
  case XS_METHOD_INCGAMMA:
    return "incgamma";
  case XS_METHOD_REALFORM:
    return "realform";
  case XS_METHOD_STRIP:
    return "strip";
  case XS_METHOD_THETA:
    return "theta";
  case XS_METHOD_CLASSICAL:
    return "classical";
  case XS_METHOD_CONTOUR:
    return "contour";
  default:
    return "unknown";
  }
}

int fail(xs_status st, const char *what) {
  std::fprintf(stderr, "%s: %s\n", what, xs_status_message(st));
  return st == XS_ERR_NO_CONVERGE ? 3 : 2;
}

// Applies the numeric knobs; returns nullptr (and prints) on a bad value.
xs_config *make_config(const knobs &k) {
  xs_config *cfg = xs_config_create();
  if (!cfg) {
    std::fprintf(stderr, "config: allocation failed\n");
    return nullptr;
  }
  xs_status st = XS_OK;
  if (st == XS_OK)
    st = xs_config_set_epsilon(cfg, k.epsilon);
  if (st == XS_OK)
    st = xs_config_set_n_max(cfg, k.n_max);
  if (st == XS_OK)
    st = xs_config_set_m_cap(cfg, k.m_cap);
  if (st == XS_OK)
    st = xs_config_set_quad_step(cfg, k.quad_step);
  if (st == XS_OK)
    st = xs_config_set_quad_T(cfg, k.quad_T);
  if (st != XS_OK) {
    std::fprintf(stderr, "config: %s\n", xs_status_message(st));
    xs_config_destroy(cfg);
    return nullptr;
  }
  return cfg;
}

void add_knob_flags(CLI::App *sub, knobs &k) {
  k.opt[0] = sub->add_option("--epsilon", k.epsilon, "target absolute accuracy");
  k.opt[1] = sub->add_option("--n-max", k.n_max, "series length cap");
  k.opt[2] = sub->add_option("--m-cap", k.m_cap, "incomplete-gamma iteration cap");
  k.opt[3] = sub->add_option("--quad-step", k.quad_step, "contour sample spacing");
  k.opt[4] = sub->add_option("--quad-T", k.quad_T, "contour half-length (0 = auto)");
  sub->add_option("--config", k.config_file,
                  "key=value file mirroring the flags; explicit flags win");
}

// Loads key=value lines into the knobs. A flag given on the command line
// keeps its value. Returns false (with a message) on an unreadable file,
// a malformed line, or an unknown key.
bool apply_config_file(knobs &k) {
  if (k.config_file.empty())
    return true;
  std::ifstream in(k.config_file);
  if (!in) {
    std::fprintf(stderr, "config: cannot read %s\n", k.config_file.c_str());
    return false;
  }
  auto trim = [](std::string s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#')
      continue;
    size_t eq = t.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "config: %s:%d: expected key=value\n",
                   k.config_file.c_str(), lineno);
      return false;
    }
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    char *end = nullptr;
    double num = std::strtod(val.c_str(), &end);
    if (val.empty() || end != val.c_str() + val.size()) {
      std::fprintf(stderr, "config: %s:%d: bad numeric value '%s'\n",
                   k.config_file.c_str(), lineno, val.c_str());
      return false;
    }
    int slot;
    if (key == "epsilon")
      slot = 0;
    else if (key == "n-max")
      slot = 1;
    else if (key == "m-cap")
      slot = 2;
    else if (key == "quad-step")
      slot = 3;
    else if (key == "quad-T")
      slot = 4;
    else {
      std::fprintf(stderr, "config: %s:%d: unknown key '%s'\n",
                   k.config_file.c_str(), lineno, key.c_str());
      return false;
    }
    if (k.opt[slot]->count())
      continue;
    switch (slot) {
    case 0:
      k.epsilon = num;
      break;
    case 1:
      k.n_max = static_cast<int>(num);
      break;
    case 2:
      k.m_cap = static_cast<int>(num);
      break;
    case 3:
      k.quad_step = num;
      break;
    case 4:
      k.quad_T = num;
      break;
    }
  }
  return true;
}

struct point_args {
  double sigma = 0.5;
  double t = 0.0;
  double x0 = 0.0;
  double t0 = 0.0;
  CLI::Option *sigma_opt = nullptr;
  CLI::Option *x0_opt = nullptr;
};

void add_point_flags(CLI::App *sub, point_args &p) {
  p.sigma_opt = sub->add_option("--sigma", p.sigma, "Re(s), s-plane");
  CLI::Option *t_opt = sub->add_option("--t", p.t, "Im(s), s-plane");
  p.x0_opt = sub->add_option("--x0", p.x0, "Re(z), z = s - 1/2");
  CLI::Option *t0_opt = sub->add_option("--t0", p.t0, "Im(z)");
  p.sigma_opt->excludes(p.x0_opt)->excludes(t0_opt);
  p.x0_opt->excludes(t_opt);
}

// Resolves the one conversion site s = z + 1/2; false if neither plane given.
bool resolve_point(const point_args &p, double &x0, double &t0) {
  if (p.sigma_opt->count()) {
    x0 = p.sigma - 0.5;
    t0 = p.t;
    return true;
  }
  if (p.x0_opt->count()) {
    x0 = p.x0;
    t0 = p.t0;
    return true;
  }
  return false;
}

int run_eval(const point_args &pa, int method, const knobs &k,
             const std::string &format) {
  double x0 = 0.0, t0 = 0.0;
  if (!resolve_point(pa, x0, t0)) {
    std::fprintf(stderr, "eval: give --sigma/--t or --x0/--t0\n");
    return 2;
  }
  xs_config *cfg = make_config(k);
  if (!cfg)
    return 2;
  xs_xi_result r;
  xs_status st =
      xs_xi_eval_z(cfg, x0, t0, static_cast<xs_method>(method), &r);
  xs_config_destroy(cfg);
  if (st != XS_OK)
    return fail(st, "eval");
  if (format == "json") {
    std::printf("{\"value_re\": %s, \"value_im\": %s, \"method\": \"%s\", "
                "\"n_used\": %d, \"error_estimate\": %s, \"converged\": %s}\n",
                fmt(r.value.re).c_str(), fmt(r.value.im).c_str(),
                method_name(r.method), r.n_used,
                fmt(r.error_estimate).c_str(),
                r.converged ? "true" : "false");
  } else if (format == "csv") {
    std::printf("value_re,value_im,method,n_used,error_estimate,converged\n");
    std::printf("%s,%s,%s,%d,%s,%d\n", fmt(r.value.re).c_str(),
                fmt(r.value.im).c_str(), method_name(r.method), r.n_used,
                fmt(r.error_estimate).c_str(), r.converged);
  } else {
    std::printf("value_re = %s\n", fmt(r.value.re).c_str());
    std::printf("value_im = %s\n", fmt(r.value.im).c_str());
    std::printf("method = %s\n", method_name(r.method));
    std::printf("n_used = %d\n", r.n_used);
    std::printf("error_estimate = %s\n", fmt(r.error_estimate).c_str());
    std::printf("converged = %d\n", r.converged);
  }
  return 0;
}

int run_scan(double from, double to, double step, const knobs &k,
             const std::string &format) {
  if (!(from < to) || !(step > 0.0)) {
    std::fprintf(stderr, "scan: need --from < --to and --step > 0\n");
    return 2;
  }
  xs_config *cfg = make_config(k);
  if (!cfg)
    return 2;
  std::vector<xs_scan_row> rows;
  bool any_failed = false;
  double eps = 1e-9 * std::max(1.0, std::abs(step));
  for (long i = 0;; ++i) {
    double t0 = from + static_cast<double>(i) * step;
    if (t0 > to + eps)
      break;
    xs_scan_row row;
    if (xs_xi_scan_row(cfg, t0, &row) != XS_OK) {
      double nan = std::nan("");
      row = {t0, nan, nan, nan, nan};
      any_failed = true;
    }
    rows.push_back(row);
  }
  xs_config_destroy(cfg);
  if (format == "json") {
    std::printf("[");
    for (size_t i = 0; i < rows.size(); ++i) {
      const xs_scan_row &r = rows[i];
      auto field = [](double v) {
        return std::isfinite(v) ? fmt(v) : std::string("null");
      };
      std::printf("%s{\"t0\": %s, \"xi_incgamma\": %s, \"xi_classical\": %s, "
                  "\"xi_theta\": %s, \"max_dev\": %s}",
                  i ? ", " : "", fmt(r.t0).c_str(), field(r.xi_incgamma).c_str(),
                  field(r.xi_classical).c_str(), field(r.xi_theta).c_str(),
                  field(r.max_dev).c_str());
    }
    std::printf("]\n");
  } else {
    std::printf("t0,xi_incgamma,xi_classical,xi_theta,max_dev\n");
    for (const xs_scan_row &r : rows)
      std::printf("%s,%s,%s,%s,%s\n", fmt(r.t0).c_str(),
                  fmt(r.xi_incgamma).c_str(), fmt(r.xi_classical).c_str(),
                  fmt(r.xi_theta).c_str(), fmt(r.max_dev).c_str());
  }
  return any_failed ? 3 : 0;
}

int run_zeros(double from, double to, int method, const knobs &k,
              const std::string &format) {
  if (!(from < to)) {
    std::fprintf(stderr, "zeros: need --from < --to\n");
    return 2;
  }
  xs_config *cfg = make_config(k);
  if (!cfg)
    return 2;
  // Every sign change needs a 0.25-wide coarse cell, so this cap is exact.
  int cap = static_cast<int>((to - from) / 0.25) + 4;
  std::vector<xs_zero_bracket> brackets(static_cast<size_t>(cap));
  int n_found = 0;
  xs_status st = xs_find_zeros(cfg, from, to, static_cast<xs_method>(method),
                               brackets.data(), cap, &n_found);
  xs_config_destroy(cfg);
  if (st != XS_OK)
    return fail(st, "zeros");
  brackets.resize(static_cast<size_t>(std::min(n_found, cap)));
  if (format == "csv" || format == "plain") {
    std::printf("t_low,t_high,root\n");
    for (const xs_zero_bracket &b : brackets)
      std::printf("%s,%s,%s\n", fmt(b.t_low).c_str(), fmt(b.t_high).c_str(),
                  fmt(b.root).c_str());
  } else {
    std::printf("[");
    for (size_t i = 0; i < brackets.size(); ++i)
      std::printf("%s{\"t_low\": %s, \"t_high\": %s, \"root\": %s}",
                  i ? ", " : "", fmt(brackets[i].t_low).c_str(),
                  fmt(brackets[i].t_high).c_str(),
                  fmt(brackets[i].root).c_str());
    std::printf("]\n");
  }
  return 0;
}

int run_gammainc(double beta, double kpart, double alpha, const knobs &k,
                 const std::string &format) {
  if (!(alpha > 0.0)) {
    std::fprintf(stderr, "gammainc: need --alpha > 0\n");
    return 2;
  }
  xs_config *cfg = make_config(k);
  if (!cfg)
    return 2;
  xs_gamma_result r;
  xs_status st = xs_upper_inc_gamma(cfg, {beta, kpart}, alpha, &r);
  xs_config_destroy(cfg);
  if (st != XS_OK)
    return fail(st, "gammainc");

  // The tail-bound companion applies only on the series' own arguments:
  // beta in [1, 3/2] and alpha on the pi*n^2 grid.
  bool have_bound = false;
  double bound = 0.0;
  if (beta >= 1.0 && beta <= 1.5) {
    int n = static_cast<int>(std::lround(std::sqrt(alpha / PI)));
    if (n >= 1 && std::abs(alpha - PI * n * n) <= 1e-9 * alpha)
      have_bound = xs_crude_bound(beta, n, &bound) == XS_OK;
  }

  if (format == "json") {
    std::printf("{\"value_re\": %s, \"value_im\": %s, \"terms_used\": %d, "
                "\"remainder_bound\": %s, \"converged\": %s",
                fmt(r.value.re).c_str(), fmt(r.value.im).c_str(),
                r.terms_used, fmt(r.remainder_bound).c_str(),
                r.converged ? "true" : "false");
    if (have_bound)
      std::printf(", \"crude_bound\": %s", fmt(bound).c_str());
    std::printf("}\n");
  } else if (format == "csv") {
    std::printf(
        "value_re,value_im,terms_used,remainder_bound,converged,crude_bound\n");
    std::printf("%s,%s,%d,%s,%d,%s\n", fmt(r.value.re).c_str(),
                fmt(r.value.im).c_str(), r.terms_used,
                fmt(r.remainder_bound).c_str(), r.converged,
                have_bound ? fmt(bound).c_str() : "");
  } else {
    std::printf("value_re = %s\n", fmt(r.value.re).c_str());
    std::printf("value_im = %s\n", fmt(r.value.im).c_str());
    std::printf("terms_used = %d\n", r.terms_used);
    std::printf("remainder_bound = %s\n", fmt(r.remainder_bound).c_str());
    std::printf("converged = %d\n", r.converged);
    if (have_bound)
      std::printf("crude_bound = %s\n", fmt(bound).c_str());
  }
  return 0;
}

int run_compare(const point_args &pa, const knobs &k,
                const std::string &format) {
  double x0 = 0.0, t0 = 0.0;
  if (!resolve_point(pa, x0, t0)) {
    std::fprintf(stderr, "compare: give --sigma/--t or --x0/--t0\n");
    return 2;
  }
  if (std::abs(x0) > 0.5) {
    std::fprintf(stderr, "compare: needs sigma in [0, 1]\n");
    return 2;
  }
  xs_config *cfg = make_config(k);
  if (!cfg)
    return 2;
  std::vector<xs_method> wanted = {XS_METHOD_INCGAMMA, XS_METHOD_THETA,
                                   XS_METHOD_CLASSICAL, XS_METHOD_CONTOUR};
  if (x0 == 0.0)
    wanted.insert(wanted.begin() + 1, XS_METHOD_REALFORM);
  std::vector<xs_xi_result> results;
  for (xs_method m : wanted) {
    xs_xi_result r;
    xs_status st = xs_xi_eval_z(cfg, x0, t0, m, &r);
    if (st == XS_ERR_DOMAIN)
      continue; // classical drops out at sigma = 0 and at the s = 1 pole
    if (st != XS_OK) {
      xs_config_destroy(cfg);
      return fail(st, "compare");
    }
    results.push_back(r);
  }
  xs_config_destroy(cfg);
  double max_dev = 0.0;
  for (size_t i = 0; i < results.size(); ++i)
    for (size_t j = i + 1; j < results.size(); ++j)
      max_dev = std::max(max_dev,
                         std::hypot(results[i].value.re - results[j].value.re,
                                    results[i].value.im - results[j].value.im));
  if (format == "json") {
    std::printf("{\"values\": {");
    for (size_t i = 0; i < results.size(); ++i)
      std::printf("%s\"%s\": {\"re\": %s, \"im\": %s}", i ? ", " : "",
                  method_name(results[i].method),
                  fmt(results[i].value.re).c_str(),
                  fmt(results[i].value.im).c_str());
    std::printf("}, \"max_dev\": %s}\n", fmt(max_dev).c_str());
  } else if (format == "csv") {
    std::printf("method,value_re,value_im\n");
    for (const xs_xi_result &r : results)
      std::printf("%s,%s,%s\n", method_name(r.method), fmt(r.value.re).c_str(),
                  fmt(r.value.im).c_str());
    std::printf("max_dev,%s,%s\n", fmt(max_dev).c_str(), fmt(0.0).c_str());
  } else {
    for (const xs_xi_result &r : results) {
      std::printf("%s_re = %s\n", method_name(r.method),
                  fmt(r.value.re).c_str());
      std::printf("%s_im = %s\n", method_name(r.method),
                  fmt(r.value.im).c_str());
    }
    std::printf("max_dev = %s\n", fmt(max_dev).c_str());
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Riemann xi evaluation in the critical strip"};
  app.require_subcommand(1);

  const std::map<std::string, int> method_map = {
      {"incgamma", XS_METHOD_INCGAMMA}, {"realform", XS_METHOD_REALFORM},
      {"strip", XS_METHOD_STRIP},       {"theta", XS_METHOD_THETA},
      {"classical", XS_METHOD_CLASSICAL}, {"contour", XS_METHOD_CONTOUR}};
  const std::vector<std::string> formats = {"csv", "json", "plain"};

  knobs k_eval, k_scan, k_zeros, k_gamma, k_cmp;
  point_args p_eval, p_cmp;
  int eval_method = XS_METHOD_INCGAMMA;
  int zeros_method = XS_METHOD_INCGAMMA;
  std::string f_eval = "plain", f_scan = "csv", f_zeros = "json",
              f_gamma = "plain", f_cmp = "plain";
  double from = 0.0, to = 0.0, step = 1.0;
  double z_from = 0.0, z_to = 0.0;
  double beta = 0.0, kpart = 0.0, alpha = 0.0;

  CLI::App *eval = app.add_subcommand("eval", "evaluate xi at one point");
  add_point_flags(eval, p_eval);
  eval->add_option("--method", eval_method, "evaluation route")
      ->transform(CLI::CheckedTransformer(method_map, CLI::ignore_case));
  eval->add_option("--format", f_eval, "output format")
      ->check(CLI::IsMember(formats));
  add_knob_flags(eval, k_eval);

  CLI::App *scan = app.add_subcommand(
      "scan", "critical-line sweep with three-method cross-check");
  scan->add_option("--from", from, "first t0")->required();
  scan->add_option("--to", to, "last t0")->required();
  scan->add_option("--step", step, "sample spacing");
  scan->add_option("--format", f_scan, "output format")
      ->check(CLI::IsMember(formats));
  add_knob_flags(scan, k_scan);

  CLI::App *zeros =
      app.add_subcommand("zeros", "sign-change roots of xi on the line");
  zeros->add_option("--from", z_from, "interval start")->required();
  zeros->add_option("--to", z_to, "interval end")->required();
  zeros->add_option("--method", zeros_method, "line evaluation route")
      ->transform(CLI::CheckedTransformer(method_map, CLI::ignore_case));
  zeros->add_option("--format", f_zeros, "output format")
      ->check(CLI::IsMember(formats));
  add_knob_flags(zeros, k_zeros);

  CLI::App *gammainc = app.add_subcommand(
      "gammainc", "upper incomplete gamma of beta + i*k + 1 at alpha");
  gammainc->add_option("--beta", beta, "real part of the order, minus one")
      ->required();
  gammainc->add_option("--k", kpart, "imaginary part of the order");
  gammainc->add_option("--alpha", alpha, "lower integration limit")
      ->required();
  gammainc->add_option("--format", f_gamma, "output format")
      ->check(CLI::IsMember(formats));
  add_knob_flags(gammainc, k_gamma);

  CLI::App *compare = app.add_subcommand(
      "compare", "evaluate one point with every applicable route");
  add_point_flags(compare, p_cmp);
  compare->add_option("--format", f_cmp, "output format")
      ->check(CLI::IsMember(formats));
  add_knob_flags(compare, k_cmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  for (knobs *k : {&k_eval, &k_scan, &k_zeros, &k_gamma, &k_cmp})
    if (!apply_config_file(*k))
      return 2;

  if (eval->parsed())
    return run_eval(p_eval, eval_method, k_eval, f_eval);
  if (scan->parsed())
    return run_scan(from, to, step, k_scan, f_scan);
  if (zeros->parsed())
    return run_zeros(z_from, z_to, zeros_method, k_zeros, f_zeros);
  if (gammainc->parsed())
    return run_gammainc(beta, kpart, alpha, k_gamma, f_gamma);
  if (compare->parsed())
    return run_compare(p_cmp, k_cmp, f_cmp);
  return 2;
}
