#pragma once

#include <vector>

#include "revolve/bodies.hpp"
#include "revolve/quadrature.hpp"

namespace revolve::radon {

/// Dimension-dependent weights of the rho -> I rho transform. The working
/// normalization drops the constant (factor 1); use_true_cn restores it.
struct NormalizationConstants {
  int n;
  bool use_true_cn = false;

  double c_n() const; ///< (n-2)/(n-1) * 2 pi^(n/2-1) / Gamma(n/2)
  double d_n() const; ///< (n-1)/(n-2) * sqrt(n/2) * Gamma(n/2)/Gamma((n+1)/2)
  double factor() const { return use_true_cn ? c_n() : 1.0; }
};

/// Radial profile of the intersection body at polar angle theta, n >= 3.
/// theta = 0 is served by the closed-form axis value.
double ik_radial(const bodies::MeridianProfile& k, int n, double theta,
                 const QuadratureConfig& cfg = {}, bool use_true_cn = false);

/// Axis value rho_IK(0); equals the Wallis weight times rho(pi/2)^(n-1).
double ik_axis(const bodies::MeridianProfile& k, int n,
               const QuadratureConfig& cfg = {}, bool use_true_cn = false);

/// psi of the intersection body at offset x (even in x). x = 0 reduces to
/// the equatorial radial value; x > 0 integrates the psi kernel directly,
/// which stays regular down to n = 3.
double psi_ik(const bodies::MeridianProfile& k, int n, double x,
              const QuadratureConfig& cfg = {}, bool use_true_cn = false);

/// Lazily evaluated intersection-body profile. Each radial value is an
/// adaptive quadrature (memoized); equator differences are computed as
/// single difference integrals so that tiny deficits survive cancellation.
bodies::MeridianProfile intersection_view(const bodies::MeridianProfile& k,
                                          int n, const QuadratureConfig& cfg = {},
                                          bool use_true_cn = false);

struct OperatorResult {
  bodies::MeridianProfile profile; ///< interpolant of the grid below
  int n = 0;
  bool use_true_cn = false;
  std::vector<double> theta;
  std::vector<double> rho;
  double err_est = 0.0; ///< worst per-point quadrature error estimate
};

/// One operator application sampled on a uniform theta grid of
/// cfg.grid_size points (parallel across the grid).
OperatorResult intersection_body(const bodies::MeridianProfile& k, int n,
                                 const QuadratureConfig& cfg = {},
                                 bool use_true_cn = false);

/// Repeated application, 1 <= iters <= 16. Results keep raw values; the
/// profile fed into the next step is renormalized to unit equatorial
/// radius, which a uniform dilation does without changing shape.
std::vector<OperatorResult> iterate_intersection(const bodies::MeridianProfile& k,
                                                 int n, int iters,
                                                 const QuadratureConfig& cfg = {},
                                                 bool use_true_cn = false);

} // namespace revolve::radon
