#include "revolve/quadrature.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <thread>

namespace revolve {

void QuadratureConfig::validate() const {
  if (nodes < 16 || nodes % 2 != 0)
    throw std::invalid_argument("quadrature nodes must be even and >= 16");
  if (panels < 1) throw std::invalid_argument("panel budget must be >= 1");
  if (abs_tol < 0) throw std::invalid_argument("abs_tol must be >= 0");
  if (tail_cutoff_R <= 1) throw std::invalid_argument("tail_cutoff_R must be > 1");
  if (deriv_step <= 0) throw std::invalid_argument("deriv_step must be > 0");
  if (grid_size < 64) throw std::invalid_argument("grid_size must be >= 64");
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int m) {
  if (m < 1) throw std::invalid_argument("rule order must be positive");
  static std::mutex mu;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  std::vector<double> x(m), w(m);
  // Roots of P_m by Newton from the Chebyshev-like initial guess; the
  // recurrence gives P_m and P_{m-1}, the derivative follows from them.
  for (int k = 0; k < (m + 1) / 2; ++k) {
    double z = std::cos(M_PI * (k + 0.75) / (m + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (int j = 2; j <= m; ++j) {
        double p2 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = m * (z * p1 - p0) / (z * z - 1.0);
      double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x[k] = -z;
    x[m - 1 - k] = z;
    double wk = 2.0 / ((1.0 - z * z) * pp * pp);
    w[k] = wk;
    w[m - 1 - k] = wk;
  }
  if (m % 2 == 1) x[m / 2] = 0.0;
  return cache.emplace(m, std::make_pair(std::move(x), std::move(w))).first->second;
}

namespace {

double panel_value(const std::function<double(double)>& f, double a, double b,
                   const std::vector<double>& x, const std::vector<double>& w) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += w[i] * f(mid + half * x[i]);
  return s * half;
}

} // namespace

Integral integrate(const std::function<double(double)>& f, double a, double b,
                   const QuadratureConfig& cfg, std::span<const double> breaks,
                   double noise_floor, double noise_floor_rel) {
  cfg.validate();
  Integral out;
  if (!(b > a)) return out;
  const auto& [x, w] = gauss_legendre(cfg.nodes);

  std::vector<double> pts{a};
  for (double c : breaks)
    if (c > a + 1e-15 && c < b - 1e-15) pts.push_back(c);
  pts.push_back(b);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](double u, double v) { return std::abs(u - v) < 1e-15; }),
            pts.end());

  struct Seg {
    double a, b, one;
    double pdisc;
    int stag;
  };
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<Seg> stack;
  double gross = 0.0;
  for (size_t i = 0; i + 1 < pts.size(); ++i) {
    stack.push_back(
        {pts[i], pts[i + 1], panel_value(f, pts[i], pts[i + 1], x, w), kInf, 0});
    gross += std::abs(stack.back().one);
    ++out.panels;
  }
  const double width = b - a;
  const double tol =
      std::max({cfg.abs_tol, noise_floor, noise_floor_rel * gross});

  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    const double m = 0.5 * (s.a + s.b);
    const double l = panel_value(f, s.a, m, x, w);
    const double r = panel_value(f, m, s.b, x, w);
    out.panels += 2;
    const double disc = std::abs(s.one - (l + r));
    const double share = tol * (s.b - s.a) / width;
    // A discrepancy at the rounding level of the panel values themselves
    // cannot be reduced by splitting. Without this floor a narrow spike
    // whose local magnitude dwarfs the mean density refines forever: both
    // the share and the rounding noise shrink linearly with width.
    const double local = std::abs(s.one) + std::abs(l) + std::abs(r);
    const double round_floor = 32 * std::numeric_limits<double>::epsilon() * local;
    // Evaluation noise (cancellation inside the integrand, interpolation
    // jitter) also stalls refinement: the discrepancy stops decaying but sits
    // far above the rounding floor. Every integrable feature decays by at
    // least 2^(3/2) per split (a square-root endpoint does exactly that, a
    // kink does 4x), so a ratio above 0.45 that is already a negligible
    // fraction of the local panel mass is noise, not structure; an
    // under-resolved oscillation stalls with disc comparable to the mass
    // and keeps refining.
    const bool noise_stuck = disc > 0.45 * s.pdisc && disc <= 1e-10 * local;
    if (disc <= std::max(share, round_floor) || noise_stuck ||
        (s.b - s.a) < 1e-14) {
      out.value += l + r;
      out.error += disc;
      continue;
    }
    if (out.panels > cfg.panels)
      throw QuadratureError("quadrature panel budget exhausted", disc);
    stack.push_back({s.a, m, l, disc, 0});
    stack.push_back({m, s.b, r, disc, 0});
  }
  return out;
}

double wallis(int m) {
  if (m < 0) throw std::invalid_argument("wallis exponent must be >= 0");
  return 0.5 * std::exp(std::lgamma(0.5) + std::lgamma(0.5 * (m + 1)) -
                        std::lgamma(0.5 * m + 1.0));
}

namespace detail {

void parallel_for(int count, const std::function<void(int)>& fn) {
  if (count <= 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  int workers = std::min<int>(count, hw ? static_cast<int>(hw) : 4);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto body = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

double ipow(double x, int e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1) r *= x;
    x *= x;
    e >>= 1;
  }
  return r;
}

} // namespace detail

} // namespace revolve
