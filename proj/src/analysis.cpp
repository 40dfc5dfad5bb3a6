#include "revolve/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "revolve/radon.hpp"

namespace revolve::analysis {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

double equator_radius(const bodies::MeridianProfile& k) {
  const double r = k.radial(kHalfPi);
  if (!(r > 0.0) || !std::isfinite(r))
    throw AnalysisError("equatorial radius is not positive: " + k.describe());
  return r;
}

} // namespace

double modulus_equator(const bodies::MeridianProfile& k, double eps) {
  if (!(eps > 0.0) || !(eps <= 1.0))
    throw std::invalid_argument("eps must lie in (0, 1]");
  const double r0 = k.radial(0.0);
  if (!(r0 > 0.0) || !std::isfinite(r0))
    throw AnalysisError("profile vanishes on the axis; the height equation "
                        "is undefined: " + k.describe());
  const double req = equator_radius(k);

  const auto height = [&](double th) {
    return k.radial(th) * std::cos(th) / r0;
  };

  // Largest root of height(theta) = eps, scanning down from the equator
  // where height is 0. Star profiles may cross several times; the first
  // bracket found from this side is the outermost boundary point.
  constexpr int kScan = 256;
  double hi = kHalfPi;         // height - eps < 0 here
  double lo = std::numeric_limits<double>::quiet_NaN();
  double prev = -eps;
  for (int i = kScan - 1; i >= 0; --i) {
    const double t = kHalfPi * i / kScan;
    const double v = height(t) - eps;
    if (v >= 0.0 && prev < 0.0) {
      lo = t;
      break;
    }
    hi = t;
    prev = v;
  }
  if (std::isnan(lo))
    throw AnalysisError("no boundary point at this height: eps too large "
                        "for " + k.describe());
  for (int it = 0; it < 120 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (height(mid) - eps >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  const double theta = 0.5 * (lo + hi);
  return k.equator_deficit(theta) / req;
}

std::vector<double> default_eps_grid() {
  std::vector<double> g(8);
  for (int j = 0; j < 8; ++j) g[j] = std::pow(10.0, -1.0 - 2.0 * j / 7.0);
  return g;
}

PowerTypeFit power_type_fit(const bodies::MeridianProfile& k,
                            const std::vector<double>& eps_grid) {
  if (eps_grid.size() < 6)
    throw std::invalid_argument("eps grid needs at least 6 points");
  for (size_t i = 0; i < eps_grid.size(); ++i) {
    if (!(eps_grid[i] > 1e-4) || !(eps_grid[i] <= 1e-1))
      throw std::invalid_argument("eps grid must lie inside (1e-4, 1e-1]");
    if (i > 0 && !(eps_grid[i] < eps_grid[i - 1]))
      throw std::invalid_argument("eps grid must be strictly decreasing");
  }

  PowerTypeFit fit;
  fit.eps_grid = eps_grid;
  const size_t m = eps_grid.size();
  std::vector<double> delta(m);
  for (size_t i = 0; i < m; ++i) {
    delta[i] = modulus_equator(k, eps_grid[i]);
    if (!(delta[i] > 0.0)) {
      // flat at the equator within these heights
      fit.p = std::numeric_limits<double>::infinity();
      fit.c = 0.0;
      fit.residual = 0.0;
      return fit;
    }
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < m; ++i) {
    const double x = std::log(eps_grid[i]), y = std::log(delta[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double dm = static_cast<double>(m);
  fit.p = (dm * sxy - sx * sy) / (dm * sxx - sx * sx);
  fit.c = delta.back() / std::pow(eps_grid.back(), fit.p);
  const double logc = std::log(fit.c);
  for (size_t i = 0; i < m; ++i)
    fit.residual = std::max(fit.residual,
                            std::fabs(std::log(delta[i]) -
                                      (logc + fit.p * std::log(eps_grid[i]))));
  return fit;
}

EquatorConvexityReport equator_convexity(const bodies::MeridianProfile& k,
                                         const QuadratureConfig& cfg) {
  cfg.validate();
  const double h = cfg.deriv_step;
  // The deficit eq - rho(pi/2 - s) cos(s) expands to (rho - rho'') s^2/2
  // plus O(s^4), so it estimates the margin directly.
  const auto estimate = [&](double s) {
    return 2.0 * k.equator_deficit(kHalfPi - s) / (s * s);
  };
  EquatorConvexityReport rep;
  rep.rho_eq = equator_radius(k);
  rep.step = h;
  rep.margin = (4.0 * estimate(0.5 * h) - estimate(h)) / 3.0;
  rep.rho_pp = rep.rho_eq - rep.margin;
  if (rep.margin > tol_flat)
    rep.verdict = "strictly-convex";
  else if (rep.margin < -tol_flat)
    rep.verdict = "non-convex";
  else
    rep.verdict = "locally-convex-flat";
  return rep;
}

BMResult bm_ball(const bodies::MeridianProfile& k) {
  constexpr int kGrid = 2049;
  const auto ratio = [&](double ls) {
    const bodies::MeridianProfile d = bodies::dilate(k, std::exp(ls), 1.0);
    double mx = 0.0, mn = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i) {
      const double v = d.radial(kHalfPi * i / (kGrid - 1));
      if (!(v > 0.0) || !std::isfinite(v))
        throw AnalysisError("radial profile not positive and finite; "
                            "distance to the ball is undefined: " + k.describe());
      mx = std::max(mx, v);
      mn = std::min(mn, v);
    }
    return mx / mn;
  };

  BMResult res;
  res.ratio_curve.reserve(64);
  double best_ls = 0.0, best_v = std::numeric_limits<double>::infinity();
  int best_i = 0;
  for (int i = 0; i < 64; ++i) {
    const double ls = -4.0 + 8.0 * i / 63.0;
    const double v = ratio(ls);
    res.ratio_curve.emplace_back(std::exp(ls), v);
    if (v < best_v) {
      best_v = v;
      best_ls = ls;
      best_i = i;
    }
  }

  double a = -4.0 + 8.0 * std::max(0, best_i - 1) / 63.0;
  double b = -4.0 + 8.0 * std::min(63, best_i + 1) / 63.0;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  const auto consider = [&](double ls, double v) {
    if (v < best_v) {
      best_v = v;
      best_ls = ls;
    }
  };
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = ratio(x1), f2 = ratio(x2);
  consider(x1, f1);
  consider(x2, f2);
  for (int it = 0; it < 90 && b - a > 1e-12; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = ratio(x1);
      consider(x1, f1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = ratio(x2);
      consider(x2, f2);
    }
  }
  res.distance = best_v;
  res.s_opt = std::exp(best_ls);
  return res;
}

std::vector<ScanRow> uniformity_scan(const std::vector<bodies::MeridianProfile>& family,
                                     const std::vector<int>& n_range,
                                     const std::vector<double>& eps_grid,
                                     const QuadratureConfig& cfg) {
  for (int n : n_range)
    if (n < 4 || n > 20)
      throw std::invalid_argument("scan dimensions must lie in 4..20");
  if (family.empty() || n_range.empty())
    throw std::invalid_argument("scan needs at least one body and one dimension");

  const int dims = static_cast<int>(n_range.size());
  std::vector<ScanRow> rows(family.size() * n_range.size());
  detail::parallel_for(static_cast<int>(rows.size()), [&](int idx) {
    const auto& body = family[idx / dims];
    const int n = n_range[idx % dims];
    const auto view = radon::intersection_view(body, n, cfg);
    const PowerTypeFit fit = power_type_fit(view, eps_grid);
    rows[idx] = {bodies::format_body(body), n, fit.p, fit.c, fit.residual};
  });
  return rows;
}

} // namespace revolve::analysis
