#include "revolve/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <limits>

#include <json.hpp>

#include "revolve/analysis.hpp"
#include "revolve/bodies.hpp"
#include "revolve/io.hpp"
#include "revolve/radon.hpp"

namespace revolve::experiments {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

// Empirical two-decade coefficient band for the dimension scan, used as a
// regression fence. The baseline run measured c in [0.149, 2.63] over the
// catalog at n = 4..14; the fence leaves 3.7x / 1.5x of headroom.
constexpr double kCoefBandLo = 0.04;
constexpr double kCoefBandHi = 4.0;

std::string tag(const bodies::MeridianProfile& k) {
  std::string s = bodies::format_body(k);
  std::replace(s.begin(), s.end(), ',', ';');
  return s;
}

void put(ScenarioResult& res, std::string name, double v) {
  res.metrics.push_back({std::move(name), v});
}

// Convex catalog entries normalized to rho(pi/2) = 1, the hypothesis
// shared by the bound checks below.
std::vector<bodies::MeridianProfile> convex_unit_catalog() {
  return {bodies::make_ball(), bodies::make_double_cone(),
          bodies::make_cylinder(), bodies::make_pbody(4.0),
          bodies::make_segment_body(2.0, 1.0)};
}

void write_scan_csv(const std::string& path,
                    const std::vector<analysis::ScanRow>& rows) {
  io::CsvTable t;
  t.header = "body,n,p,c_K,residual";
  for (const auto& r : rows) {
    std::string body = r.body;
    if (body.find(',') != std::string::npos) body = "\"" + body + "\"";
    t.rows.push_back({body, std::to_string(r.n), io::fmt17(r.p),
                      io::fmt17(r.c), io::fmt17(r.residual)});
  }
  io::write_csv(path, t);
}

// 1. psi of bodies with rho(0) = rho(pi/2) = 1 sits between 1/(x+1) and
// min(1, 1/x); segment bodies match 1/(ax+b) exactly.
void scn_lemma1(const RunContext& ctx, const std::string& dir,
                ScenarioResult& res) {
  (void)ctx;
  bool ok = true;
  std::vector<io::SvgSeries> series;
  const std::vector<bodies::MeridianProfile> ks = {
      bodies::make_ball(), bodies::make_double_cone(), bodies::make_cylinder(),
      bodies::make_pbody(4.0)};
  std::vector<double> xs(65);
  for (int j = 0; j < 65; ++j) xs[j] = 8.0 * j / 64;
  for (const auto& k : ks) {
    double lo_slack = std::numeric_limits<double>::infinity();
    double hi_slack = lo_slack;
    io::SvgSeries s{tag(k), xs, {}};
    for (double x : xs) {
      const double psi = k.psi(x);
      lo_slack = std::min(lo_slack, psi - 1.0 / (x + 1.0));
      hi_slack = std::min(hi_slack, (x < 1.0 ? 1.0 : 1.0 / x) - psi);
      s.y.push_back(psi);
    }
    put(res, "lowerslack:" + tag(k), lo_slack);
    put(res, "upperslack:" + tag(k), hi_slack);
    ok = ok && lo_slack >= -1e-12 && hi_slack >= -1e-12;
    series.push_back(std::move(s));
  }
  for (auto [a, b] : {std::pair{2.0, 1.0}, std::pair{1.0, 3.0}}) {
    const auto k = bodies::make_segment_body(a, b);
    double dev = 0.0;
    for (double x : xs) dev = std::max(dev, std::fabs(k.psi(x) - 1.0 / (a * x + b)));
    put(res, "linedev:" + tag(k), dev);
    ok = ok && dev <= 5e-15;
  }
  io::SvgSeries lower{"lower bound", xs, {}}, upper{"upper bound", xs, {}};
  for (double x : xs) {
    lower.y.push_back(1.0 / (x + 1.0));
    upper.y.push_back(x < 1.0 ? 1.0 : 1.0 / x);
  }
  series.push_back(std::move(lower));
  series.push_back(std::move(upper));
  io::write_svg_polylines(dir + "/curve.svg", "psi between the segment-body bounds",
                          series);
  res.pass = ok;
}

// 2. For convex profiles with rho(pi/2) = 1 the decay of psi past any
// sigma > 0 is at least harmonic: psi(sigma t) <= 1/(1 + t(1/psi(sigma)-1)).
void scn_lemma2(const RunContext& ctx, const std::string& dir,
                ScenarioResult& res) {
  (void)ctx;
  (void)dir;
  bool ok = true;
  for (const auto& k : convex_unit_catalog()) {
    double minslack = std::numeric_limits<double>::infinity();
    for (double sg : {0.25, 0.5, 1.0, 2.0, 4.0})
      for (double t : {1.25, 2.0, 4.0, 8.0}) {
        const double ps = k.psi(sg);
        const double bound = 1.0 / (1.0 + t * (1.0 / ps - 1.0));
        minslack = std::min(minslack, bound - k.psi(sg * t));
      }
    put(res, "minslack:" + tag(k), minslack);
    ok = ok && minslack >= -1e-12;
  }
  res.pass = ok;
}

// 3. psi_IK(0)/sigma_K across the convex catalog and n up to 100 stays in
// the empirical band suggested by the integral's two limiting regimes.
void scn_lemma3(const RunContext& ctx, const std::string& dir,
                ScenarioResult& res) {
  const double lo = 0.9 * std::exp(-1.0);
  const double hi = 1.1 * (1.0 + std::exp(-1.0));
  const std::vector<int> ns = {4, 6, 8, 12, 16, 24, 32, 48, 64, 100};
  bool ok = true;
  std::vector<io::SvgSeries> series;
  for (const auto& k : convex_unit_catalog()) {
    io::SvgSeries s{tag(k), {}, {}};
    for (int n : ns) {
      const double ratio =
          radon::psi_ik(k, n, 0.0, ctx.cfg) / bodies::sigma(k, n);
      put(res, "ratio:" + tag(k) + ":" + std::to_string(n), ratio);
      ok = ok && ratio >= lo && ratio <= hi;
      s.x.push_back(n);
      s.y.push_back(ratio);
    }
    series.push_back(std::move(s));
  }
  for (auto [name, level] : {std::pair{"band low", lo}, std::pair{"band high", hi}}) {
    io::SvgSeries s{name, {}, {}};
    for (int n : ns) {
      s.x.push_back(n);
      s.y.push_back(level);
    }
    series.push_back(std::move(s));
  }
  put(res, "band_lo", lo);
  put(res, "band_hi", hi);
  io::write_svg_polylines(dir + "/curve.svg",
                          "normalized psi_IK(0) against dimension", series);
  res.pass = ok;
}

// 4. Truncating the x-domain integral at R costs at most
// C (1 + R/n)^(2-n); C is fitted at R = 2 and checked out to R = 40.
void scn_lemma4(const RunContext& ctx, const std::string& dir,
                ScenarioResult& res) {
  (void)dir;
  bool ok = true;
  const auto model = [](double r, int n) { return std::pow(1.0 + r / n, 2.0 - n); };
  for (const auto& k : {bodies::make_double_cone(), bodies::make_cylinder(),
                        bodies::make_ball(), bodies::make_pbody(4.0)}) {
    for (int n : {5, 8, 12}) {
      const double sg = bodies::sigma(k, n);
      for (int xi = 0; xi < 2; ++xi) {
        const double x = xi == 0 ? 0.0 : 0.5 / (40.0 * sg);
        const auto truncated = [&](double r) {
          std::vector<double> br{1.0 / sg};
          for (double c : k.corners()) {
            const double tc = std::cos(c) / std::sin(c) / sg;
            if (tc < r) br.push_back(tc);
          }
          const auto f = [&](double t) {
            const double quad = 1.0 - sg * sg * x * x * t * t;
            return detail::ipow(k.psi(sg * t), n - 1) *
                   std::pow(quad > 0.0 ? quad : 0.0, 0.5 * (n - 4));
          };
          return integrate(f, 0.0, r, ctx.cfg, br).value;
        };
        const double full = radon::psi_ik(k, n, x, ctx.cfg) / sg;
        const double cfit = std::fabs(truncated(2.0) - full) / model(2.0, n);
        double excess = 0.0;
        for (double r : {5.0, 10.0, 20.0, 40.0}) {
          const double disc = std::fabs(truncated(r) - full);
          excess = std::max(excess, disc / (1.05 * cfit * model(r, n) + 1e-8));
        }
        const std::string id = tag(k) + ":" + std::to_string(n) +
                               (xi == 0 ? ":x0" : ":x+");
        put(res, "C:" + id, cfit);
        put(res, "excess:" + id, excess);
        ok = ok && excess <= 1.0;
      }
    }
  }
  res.pass = ok;
}

// 5. Dimension scan of fitted power types and coefficients.
void scn_thm31(const RunContext& ctx, const std::string& dir,
               ScenarioResult& res) {
  const std::vector<bodies::MeridianProfile> family = {
      bodies::make_double_cone(), bodies::make_cylinder(),
      bodies::make_pbody(4.0), bodies::make_segment_body(2.0, 1.0)};
  std::vector<int> ns;
  for (int n = 4; n <= 14; ++n) ns.push_back(n);
  const auto rows = analysis::uniformity_scan(family, ns,
                                              analysis::default_eps_grid(), ctx.cfg);
  write_scan_csv(dir + "/scan.csv", rows);
  bool ok = true;
  for (const auto& r : rows) {
    std::string body = r.body;
    std::replace(body.begin(), body.end(), ',', ';');
    put(res, "p:" + body + ":" + std::to_string(r.n), r.p);
    put(res, "c:" + body + ":" + std::to_string(r.n), r.c);
    ok = ok && r.p >= 1.9 && r.p <= 2.1 && r.c >= kCoefBandLo && r.c <= kCoefBandHi;
  }
  res.notes = "coefficient band [" + io::fmt_g(kCoefBandLo) + ", " +
              io::fmt_g(kCoefBandHi) + "]";
  res.pass = ok;
}

// 6. Double cone at n = 3: unit equatorial value of psi_IK, equatorial
// modulus of order between 1 and 2 (o(eps) but not O(eps^2)).
void scn_remark1(const RunContext& ctx, const std::string& dir,
                 ScenarioResult& res) {
  const auto cone = bodies::make_double_cone();
  const double psi0 = radon::psi_ik(cone, 3, 0.0, ctx.cfg);
  const auto view = radon::intersection_view(cone, 3, ctx.cfg);
  const double d2 = analysis::modulus_equator(view, 1e-2);
  const double d4 = analysis::modulus_equator(view, 1e-4);
  put(res, "psi_ik_at_0", psi0);
  put(res, "ratio1:eps=1e-2", d2 / 1e-2);
  put(res, "ratio1:eps=1e-4", d4 / 1e-4);
  put(res, "ratio2:eps=1e-2", d2 / 1e-4);
  put(res, "ratio2:eps=1e-4", d4 / 1e-8);
  res.pass = std::fabs(psi0 - 1.0) <= 1e-8 &&
             d4 / 1e-4 < 0.5 * (d2 / 1e-2) && d4 / 1e-8 > 2.0 * (d2 / 1e-4);

  io::SvgSeries s{"modulus / eps^2", {}, {}};
  for (int j = 0; j <= 15; ++j) {
    const double eps = std::pow(10.0, -4.0 + 3.0 * j / 15.0);
    s.x.push_back(std::log10(eps));
    s.y.push_back(analysis::modulus_equator(view, eps) / (eps * eps));
  }
  io::write_svg_polylines(dir + "/curve.svg",
                          "double cone n=3: quadratic normalization grows",
                          {s});
}

// 7. The fitted coefficient for the two-cylinder union blows up as the
// inner cylinder thins. The coefficient is the eps -> 0 limit of
// modulus / eps^2; a thin tee saturates the default eps window (its
// intersection body is a prolate spike, so even tiny relative heights land
// far from the equator), so each body is probed inside its own quadratic
// window, found by shrinking until the top probe leaves saturation.
void scn_remark2(const RunContext& ctx, const std::string& dir,
                 ScenarioResult& res) {
  std::vector<analysis::ScanRow> rows;
  for (double t : {0.5, 0.2, 0.1}) {
    const auto k = bodies::make_two_cylinder_union(t);
    const auto view = radon::intersection_view(k, 5, ctx.cfg);
    double top = 0.1;
    while (top > 1e-7 && analysis::modulus_equator(view, top) > 0.05) top /= 8.0;
    std::vector<double> eps(8), ld(8), le(8);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int j = 0; j < 8; ++j) {
      eps[j] = top * std::pow(10.0, -2.0 * j / 7.0);
      const double d = analysis::modulus_equator(view, eps[j]);
      if (!(d > 0.0))
        throw analysis::AnalysisError("vanishing modulus in scaled window");
      le[j] = std::log(eps[j]);
      ld[j] = std::log(d);
      sx += le[j], sy += ld[j], sxx += le[j] * le[j], sxy += le[j] * ld[j];
    }
    const double p = (8 * sxy - sx * sy) / (8 * sxx - sx * sx);
    const double c = std::exp(ld[7] - p * le[7]);
    double resid = 0.0;
    for (int j = 0; j < 8; ++j)
      resid = std::max(resid, std::fabs(ld[j] - (std::log(c) + p * le[j])));
    rows.push_back({tag(k), 5, p, c, resid});
    put(res, "eps_top:" + rows.back().body, top);
  }
  write_scan_csv(dir + "/scan.csv", rows);
  for (const auto& r : rows) {
    put(res, "c:" + r.body, r.c);
    put(res, "p:" + r.body, r.p);
  }
  put(res, "growth", rows[2].c / rows[0].c);
  res.pass = rows[1].c > rows[0].c && rows[2].c > rows[1].c &&
             rows[2].c >= 10.0 * rows[0].c;
}

// 8. Distance of the doubly applied operator to the ball shrinks with
// dimension.
void scn_thm41(const RunContext& ctx, const std::string& dir,
               ScenarioResult& res) {
  QuadratureConfig cfg = ctx.cfg;
  cfg.grid_size = std::max(cfg.grid_size, 2049);
  const std::vector<int> ns = {20, 50, 100, 200};
  bool ok = true;
  std::vector<io::SvgSeries> series;
  for (const auto& k : {bodies::make_double_cone(), bodies::make_cylinder(),
                        bodies::make_pbody(4.0)}) {
    io::SvgSeries s{tag(k), {}, {}};
    std::vector<double> d;
    for (int n : ns) {
      const auto steps = radon::iterate_intersection(k, n, 2, cfg);
      d.push_back(analysis::bm_ball(steps[1].profile).distance);
      put(res, "bm:" + tag(k) + ":" + std::to_string(n), d.back());
      s.x.push_back(n);
      s.y.push_back(d.back());
    }
    ok = ok && d.back() < d.front() && d.back() < 1.2;
    series.push_back(std::move(s));
  }
  io::write_svg_polylines(dir + "/curve.svg",
                          "ball distance of the double application", series);
  res.pass = ok;
}

// 9. One application of the operator to the cylinder stays a definite
// distance from the ball no matter how large n grows.
void scn_remark3(const RunContext& ctx, const std::string& dir,
                 ScenarioResult& res) {
  (void)dir;
  const double floor = std::sqrt(2.0) * (1.0 - M_PI / 12.0) * 0.995;
  put(res, "floor", floor);
  bool ok = true;
  const auto cyl = bodies::make_cylinder();
  for (int n : {100, 200}) {
    const auto step = radon::intersection_body(cyl, n, ctx.cfg);
    const double d = analysis::bm_ball(step.profile).distance;
    put(res, "bm:cylinder:" + std::to_string(n), d);
    ok = ok && d >= floor;
  }
  res.pass = ok;
}

// 10. The capped cylinder's intersection body is cylindrical near the
// equator: psi_IK constant on the matching band, flat verdict.
void scn_example1(const RunContext& ctx, const std::string& dir,
                  ScenarioResult& res) {
  const auto k = bodies::make_capped_cylinder(0.3);
  const double psi0 = radon::psi_ik(k, 4, 0.0, ctx.cfg);
  const double xhi = std::tan(0.3) * (1.0 - 1e-3);
  double dev = 0.0;
  io::SvgSeries s{"psi_IK", {}, {}};
  for (int j = 0; j < 96; ++j) {
    const double x = 2.0 * std::tan(0.3) * j / 95;
    const double v = radon::psi_ik(k, 4, x, ctx.cfg);
    if (x <= xhi) dev = std::max(dev, std::fabs(v - psi0));
    s.x.push_back(x);
    s.y.push_back(v);
  }
  const auto rep =
      analysis::equator_convexity(radon::intersection_view(k, 4, ctx.cfg), ctx.cfg);
  put(res, "flatdev", dev);
  put(res, "margin", rep.margin);
  put(res, "psi_ik_at_0", psi0);
  res.notes = "verdict: " + rep.verdict;
  res.pass = dev <= 1e-8 && rep.verdict == "locally-convex-flat";
  io::write_svg_polylines(dir + "/curve.svg",
                          "capped cylinder: psi_IK flat on the band", {s});
}

// 11. Quartic example: closed-form match on the outer band and fitted
// power type 4.
void scn_example2(const RunContext& ctx, const std::string& dir,
                  ScenarioResult& res) {
  const auto view = radon::intersection_view(bodies::make_mod4_body(), 4, ctx.cfg);
  const double lo = std::atan(std::pow(5.0, 0.25));
  const double norm = view.radial(kHalfPi);
  double sup = 0.0;
  io::SvgSeries got{"computed / norm", {}, {}}, want{"closed form", {}, {}};
  for (int j = 0; j <= 200; ++j) {
    const double th = lo + (kHalfPi - lo) * j / 200;
    const double s = std::sin(th);
    const double closed = (2.0 * s * s - 1.0) / detail::ipow(s, 5);
    const double v = view.radial(th) / norm;
    sup = std::max(sup, std::fabs(v - closed));
    got.x.push_back(th);
    got.y.push_back(v);
    want.x.push_back(th);
    want.y.push_back(closed);
  }
  const auto fit = analysis::power_type_fit(view, analysis::default_eps_grid());
  put(res, "supdev", sup);
  put(res, "p", fit.p);
  put(res, "c", fit.c);
  put(res, "norm", norm);
  res.pass = sup < 1e-6 && fit.p >= 3.9 && fit.p <= 4.1;
  io::write_svg_polylines(dir + "/curve.svg",
                          "quartic example against its closed form",
                          {got, want});
}

// 12. Strict equatorial convexity of IK for randomized star bodies, n >= 5.
void scn_thm53(const RunContext& ctx, const std::string& dir,
               ScenarioResult& res) {
  (void)dir;
  const std::vector<int> ns = {5, 6, 7};
  constexpr int kSeeds = 50;
  const int total = kSeeds * static_cast<int>(ns.size());
  std::vector<double> margins(total);
  detail::parallel_for(total, [&](int idx) {
    const int si = idx / 3, nj = idx % 3;
    const auto k = bodies::make_random_star(ctx.seed + 1 + si, 0.6);
    const auto view = radon::intersection_view(k, ns[nj], ctx.cfg);
    margins[idx] = analysis::equator_convexity(view, ctx.cfg).margin;
  });
  double global = std::numeric_limits<double>::infinity();
  int worst = 0;
  for (size_t nj = 0; nj < ns.size(); ++nj) {
    double mn = std::numeric_limits<double>::infinity();
    for (int si = 0; si < kSeeds; ++si) {
      const int idx = si * 3 + static_cast<int>(nj);
      mn = std::min(mn, margins[idx]);
      if (margins[idx] < global) {
        global = margins[idx];
        worst = idx;
      }
    }
    put(res, "min_margin:n=" + std::to_string(ns[nj]), mn);
  }
  put(res, "min_margin", global);
  res.notes = "tightest case: seed " + std::to_string(ctx.seed + 1 + worst / 3) +
              ", n=" + std::to_string(ns[worst % 3]);
  res.pass = global > 1e-6;
}

// 13. Star bodies with the origin interior, n = 4: fitted power type 2.
void scn_thm56(const RunContext& ctx, const std::string& dir,
               ScenarioResult& res) {
  (void)dir;
  const std::vector<bodies::MeridianProfile> ks = {
      bodies::make_two_cylinder_union(0.5),
      bodies::make_random_star(ctx.seed + 11, 0.4),
      bodies::make_random_star(ctx.seed + 12, 0.4),
      bodies::make_random_star(ctx.seed + 13, 0.4)};
  bool ok = true;
  for (const auto& k : ks) {
    const auto fit = analysis::power_type_fit(
        radon::intersection_view(k, 4, ctx.cfg), analysis::default_eps_grid());
    put(res, "p:" + tag(k), fit.p);
    ok = ok && fit.p >= 1.9 && fit.p <= 2.1;
  }
  res.pass = ok;
}

// 14. Discrete convexity of the meridian section of IK for the convex
// catalog: consecutive edge cross products keep one sign.
void scn_busemann(const RunContext& ctx, const std::string& dir,
                  ScenarioResult& res) {
  (void)dir;
  bool ok = true;
  double worst_all = -std::numeric_limits<double>::infinity();
  for (const auto& k : convex_unit_catalog()) {
    for (int n = 4; n <= 10; ++n) {
      const auto step = radon::intersection_body(k, n, ctx.cfg);
      const int m = static_cast<int>(step.theta.size());
      std::vector<double> ys(m + 2), zs(m + 2);
      for (int i = 0; i < m; ++i) {
        ys[i + 1] = step.rho[i] * std::sin(step.theta[i]);
        zs[i + 1] = step.rho[i] * std::cos(step.theta[i]);
      }
      ys[0] = -ys[2]; // reflect across the axis
      zs[0] = zs[2];
      ys[m + 1] = ys[m - 1]; // reflect across the equatorial plane
      zs[m + 1] = -zs[m - 1];
      const double scale = *std::max_element(step.rho.begin(), step.rho.end());
      double worst = -std::numeric_limits<double>::infinity();
      for (int i = 0; i + 2 < m + 2; ++i) {
        const double e1y = ys[i + 1] - ys[i], e1z = zs[i + 1] - zs[i];
        const double e2y = ys[i + 2] - ys[i + 1], e2z = zs[i + 2] - zs[i + 1];
        worst = std::max(worst, (e1y * e2z - e1z * e2y) / (scale * scale));
      }
      put(res, "worstcross:" + tag(k) + ":" + std::to_string(n), worst);
      worst_all = std::max(worst_all, worst);
      ok = ok && worst <= 1e-9;
    }
  }
  put(res, "worstcross", worst_all);
  res.pass = ok;
}

// 15. A diagonal dilation moves through the operator as the determinant
// times the inverse dilation of the result.
void scn_equivariance(const RunContext& ctx, const std::string& dir,
                      ScenarioResult& res) {
  (void)dir;
  bool ok = true;
  const std::vector<std::pair<double, double>> dils = {
      {2.0, 1.0}, {0.5, 0.5}, {1.5, 0.7}};
  for (const auto& k : {bodies::make_double_cone(), bodies::make_cylinder()}) {
    for (int n : {4, 6}) {
      const auto view = radon::intersection_view(k, n, ctx.cfg);
      for (auto [sa, sp] : dils) {
        const double det = sa * detail::ipow(sp, n - 1);
        const auto lhs_body = bodies::dilate(k, sa, sp);
        const auto rhs_prof = bodies::dilate(view, 1.0 / sa, 1.0 / sp);
        double maxrel = 0.0;
        for (int j = 0; j <= 8; ++j) {
          const double th = kHalfPi * j / 8;
          const double lhs = radon::ik_radial(lhs_body, n, th, ctx.cfg);
          const double rhs = det * rhs_prof.radial(th);
          maxrel = std::max(maxrel, std::fabs(lhs - rhs) / rhs);
        }
        put(res, "maxrel:" + tag(k) + ":" + std::to_string(n) + ":" +
                     io::fmt_g(sa) + "x" + io::fmt_g(sp),
            maxrel);
        ok = ok && maxrel <= 1e-6;
      }
    }
  }
  res.pass = ok;
}

using ScenarioFn = void (*)(const RunContext&, const std::string&, ScenarioResult&);

struct Entry {
  const char* id;
  ScenarioFn fn;
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = {
      {"lemma1-psi-bounds", scn_lemma1},
      {"lemma2-upper-bound", scn_lemma2},
      {"lemma3-sigma-bounds", scn_lemma3},
      {"lemma4-tail-cutoff", scn_lemma4},
      {"thm31-uniform-power-type", scn_thm31},
      {"remark1-cone-n3", scn_remark1},
      {"remark2-star-unbounded", scn_remark2},
      {"thm41-double-intersection", scn_thm41},
      {"remark3-cylinder-not-ball", scn_remark3},
      {"example1-cylindrical-ik", scn_example1},
      {"example2-power-type-4", scn_example2},
      {"thm53-strict-convexity", scn_thm53},
      {"thm56-origin-interior", scn_thm56},
      {"busemann-convexity", scn_busemann},
      {"equivariance", scn_equivariance},
  };
  return t;
}

} // namespace

const std::vector<std::string>& scenario_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& e : table()) v.emplace_back(e.id);
    return v;
  }();
  return ids;
}

bool scenario_known(const std::string& id) {
  for (const auto& e : table())
    if (id == e.id) return true;
  return false;
}

ScenarioResult run_scenario(const std::string& id, const RunContext& ctx) {
  const Entry* entry = nullptr;
  for (const auto& e : table())
    if (id == e.id) entry = &e;
  if (!entry) throw std::invalid_argument("unknown scenario id: " + id);
  ctx.cfg.validate();

  ScenarioResult res;
  res.id = id;
  const std::string dir = ctx.out_dir + "/" + id;
  std::filesystem::create_directories(dir);
  try {
    entry->fn(ctx, dir, res);
  } catch (const std::exception& ex) {
    res.pass = false;
    res.notes = std::string("error: ") + ex.what();
  }

  io::CsvTable t;
  t.header = "metric,value";
  for (const auto& m : res.metrics) t.rows.push_back({m.name, io::fmt17(m.value)});
  io::write_csv(dir + "/metrics.csv", t);

  nlohmann::ordered_json j;
  j["id"] = res.id;
  j["pass"] = res.pass;
  auto ms = nlohmann::ordered_json::object();
  for (const auto& m : res.metrics) ms[m.name] = m.value;
  j["metrics"] = ms;
  j["notes"] = res.notes;
  io::write_text_file(dir + "/verdict.json", j.dump(2) + "\n");
  return res;
}

std::vector<ScenarioResult> run_all(const RunContext& ctx) {
  std::vector<ScenarioResult> out;
  out.reserve(scenario_ids().size());
  for (const auto& id : scenario_ids()) out.push_back(run_scenario(id, ctx));
  return out;
}

} // namespace revolve::experiments
