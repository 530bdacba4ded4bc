#include "contour.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "gamma.hpp"
#include "zeta.hpp"

namespace xs {

namespace {

constexpr double pi = 3.141592653589793238462643383279503;

double taper_bump(double u, double beta) {
  double v = 2.0 * u - 1.0;
  double root = std::sqrt(std::max(0.0, 1.0 - v * v));
  return std::exp(beta * (root - 1.0));
}

// Window values at the quadrature nodes t = k*h, k = 0..n_half: 1 on the
// flat region, then 1 - (normalized bump CDF) across the taper. The CDF is
// accumulated with Simpson sub-panels per node gap, so the window is smooth
// to quadrature accuracy with no interpolation error at the nodes.
std::vector<double> node_window(double h, int n_half, double taper_start,
                                double T, double beta) {
  auto seg = [beta](double ua, double ub) {
    int m = 8;
    double hh = (ub - ua) / m;
    double s = taper_bump(ua, beta) + taper_bump(ub, beta);
    for (int k = 1; k < m; ++k)
      s += (k % 2 ? 4.0 : 2.0) * taper_bump(ua + k * hh, beta);
    return s * hh / 3.0;
  };
  double total = 0.0;
  for (int k = 0; k < 256; ++k)
    total += seg(k / 256.0, (k + 1) / 256.0);

  std::vector<double> w(n_half + 1, 1.0);
  double L = T - taper_start;
  double cum = 0.0;
  double prev_u = 0.0;
  for (int k = 0; k <= n_half; ++k) {
    double t = k * h;
    if (t <= taper_start)
      continue;
    if (t >= T) {
      w[k] = 0.0;
      continue;
    }
    double u = (t - taper_start) / L;
    cum += seg(prev_u, u);
    prev_u = u;
    w[k] = 1.0 - cum / total;
  }
  return w;
}

} // namespace

cplx strip_continuation(const std::function<cplx(double)> &f_boundary,
                        cplx z0, const quadrature_window &w) {
  if (!(w.T > 0.0) || !(w.step > 0.0))
    throw std::domain_error("strip_continuation: T and step must be positive");
  if (w.step > w.T / 50.0)
    throw std::domain_error("strip_continuation: step must be <= T/50");
  if (!(std::abs(z0.real()) < w.a))
    throw std::domain_error("strip_continuation: z0 outside the strip");

  double taper_start = w.taper_start < 0.0 ? 0.2 * w.T : w.taper_start;
  if (taper_start >= w.T)
    throw std::domain_error("strip_continuation: taper_start must be < T");
  double beta = 0.5 * (w.T - taper_start);

  long npts = std::lround(2.0 * w.T / w.step);
  if (npts % 2)
    ++npts;
  double h = 2.0 * w.T / npts;
  long n_half = npts / 2;
  std::vector<double> win = node_window(h, n_half, taper_start, w.T, beta);

  kahan_sum_c acc;
  for (long i = 0; i <= npts; ++i) {
    double wt = win[std::labs(i - n_half)];
    if (wt == 0.0)
      continue;
    double t = -w.T + i * h;
    cplx b1(w.a, t);
    cplx fv = f_boundary(t);
    cplx g = fv / (b1 - z0) + std::conj(fv) / (std::conj(b1) + z0);
    double coef = (i == 0 || i == npts) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    acc.add(coef * wt * g);
  }
  return acc.value() * h / 3.0 / (2.0 * pi);
}

cplx xi_boundary(double t, const zeta_config &cfg) {
  cplx s(2.0, t);
  cplx pref = cexp(log_gamma(s / 2.0) - s / 2.0 * std::log(pi));
  return s * (s - 1.0) / 2.0 * pref * zeta_dirichlet(s, cfg);
}

double tail_bound_T(double epsilon, double K) {
  if (!(epsilon > 0.0) || !(K > 0.0))
    throw std::domain_error("tail_bound_T: epsilon and K must be positive");
  for (double T = 0.5; T <= 400.0; T += 0.5) {
    if (K * std::pow(T, 2.5) * std::exp(-pi * T / 4.0) < epsilon)
      return T;
  }
  throw std::domain_error("tail_bound_T: epsilon too small");
}

namespace {

struct boundary_cache {
  double step;
  std::vector<cplx> vals; // index k holds xi(2 + i*k*step)
};

// Shared across calls: keyed by (step, T); insertion under a mutex, the
// sample vectors immutable once published.
std::shared_ptr<const boundary_cache> get_cache(double step, double T,
                                                const zeta_config &zcfg) {
  static std::mutex mu;
  static std::map<std::pair<double, double>,
                  std::shared_ptr<const boundary_cache>>
      caches;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(step, T);
  auto it = caches.find(key);
  if (it != caches.end())
    return it->second;
  auto c = std::make_shared<boundary_cache>();
  c->step = step;
  long n = std::lround(T / step);
  c->vals.reserve(n + 2);
  for (long k = 0; k <= n + 1; ++k)
    c->vals.push_back(xi_boundary(k * step, zcfg));
  caches[key] = c;
  return c;
}

} // namespace

xi_result xi_via_contour(cplx z0, const eval_config &cfg) {
  if (std::abs(z0.real()) > 0.5)
    throw std::domain_error("xi_via_contour: |Re z0| must be <= 1/2");

  quadrature_window w;
  w.a = 1.5;
  w.step = cfg.quad_step;
  if (cfg.quad_T > 0.0) {
    w.T = cfg.quad_T;
    w.taper_start = 0.5 * cfg.quad_T;
  } else {
    // Certify the discarded tail: beyond T_cert the boundary modulus is
    // under K T^(5/2) e^(-pi T/4), so the kernel integral tail is below
    // epsilon once that bound is under epsilon * pi * (a - |Re z0|).
    double T_cert =
        tail_bound_T(cfg.epsilon * pi * (w.a - std::abs(z0.real())), 10.0);
    w.T = 2.0 * T_cert;
    w.taper_start = T_cert;
  }

  // Re-derive the effective node spacing (even panel count) so the cache
  // indices land exactly on the quadrature nodes.
  long npts = std::lround(2.0 * w.T / w.step);
  if (npts % 2)
    ++npts;
  double h = 2.0 * w.T / npts;
  w.step = h;

  auto cache = get_cache(h, w.T, cfg.zeta);
  auto f = [&cache, h](double t) {
    size_t k = static_cast<size_t>(std::lround(std::abs(t) / h));
    cplx v = cache->vals[k];
    return t >= 0.0 ? v : std::conj(v);
  };

  xi_result r;
  r.method = xi_method::contour;
  r.value = strip_continuation(f, z0, w);
  r.n_used = static_cast<int>(std::lround(2.0 * w.T / w.step)) + 1;
  r.error_estimate = cfg.epsilon;
  r.converged = true;
  return r;
}

} // namespace xs
