#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "revolve/bodies.hpp"
#include "revolve/quadrature.hpp"

namespace revolve::analysis {

/// Raised when a quantity is undefined for the given profile (no boundary
/// point matches an eps, vanishing radial function, ...).
struct AnalysisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Margin half-width separating "flat at the equator" from strict
/// convexity; an order above the measured differentiation noise floor.
inline constexpr double tol_flat = 1e-6;

struct PowerTypeFit {
  double p = 0.0;        ///< fitted exponent (infinity when flat)
  double c = 0.0;        ///< deficit / eps^p at the smallest eps
  double residual = 0.0; ///< max |log d - (log c + p log eps)| on the grid
  std::vector<double> eps_grid;
};

struct EquatorConvexityReport {
  double rho_eq = 0.0;
  double rho_pp = 0.0;  ///< second derivative of rho at the equator
  double margin = 0.0;  ///< rho_eq - rho_pp
  std::string verdict;  ///< strictly-convex | locally-convex-flat | non-convex
  double step = 0.0;    ///< base differentiation step used
};

struct BMResult {
  double distance = 1.0; ///< best max/min radial ratio over axial dilations
  double s_opt = 1.0;
  std::vector<std::pair<double, double>> ratio_curve; ///< coarse (s, ratio)
};

/// Equatorial modulus of convexity at height eps in (0, 1]: solves
/// eps = (rho(theta)/rho(0)) cos(theta) for the largest root theta and
/// returns the normalized equator deficit there.
double modulus_equator(const bodies::MeridianProfile& k, double eps);

/// Eight log-spaced eps values from 1e-1 down to 1e-3 (decreasing).
std::vector<double> default_eps_grid();

/// Log-log least squares of the equatorial modulus against eps. The grid
/// must be strictly decreasing, >= 6 points, inside (1e-4, 1e-1]. A zero
/// deficit anywhere on the grid reports the flat sentinel p = infinity.
PowerTypeFit power_type_fit(const bodies::MeridianProfile& k,
                            const std::vector<double>& eps_grid);

/// Local convexity test at the equator via margin = rho - rho'' there,
/// estimated from equator deficits at steps h and h/2 with Richardson
/// extrapolation (deficits survive cancellation; plain second differences
/// of rho would not at the 1e-6 verdict scale).
EquatorConvexityReport equator_convexity(const bodies::MeridianProfile& k,
                                         const QuadratureConfig& cfg = {});

/// Distance to the ball within axis-aligned dilations: minimizes the
/// max/min radial ratio of dilate(k, s, 1) over log s in [-4, 4], seeded
/// on a 64-point coarse grid and refined by golden section around the
/// best point (unimodality is not assumed).
BMResult bm_ball(const bodies::MeridianProfile& k);

struct ScanRow {
  std::string body;
  int n = 0;
  double p = 0.0;
  double c = 0.0;
  double residual = 0.0;
};

/// Power-type fits of the intersection bodies of a family across
/// dimensions (n_range inside 4..20), parallel over the (body, n) pairs.
std::vector<ScanRow> uniformity_scan(const std::vector<bodies::MeridianProfile>& family,
                                     const std::vector<int>& n_range,
                                     const std::vector<double>& eps_grid,
                                     const QuadratureConfig& cfg = {});

} // namespace revolve::analysis
