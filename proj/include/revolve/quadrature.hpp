#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace revolve {

/// Tuning knobs shared by the operator and the analysis layers.
struct QuadratureConfig {
  int nodes = 16;              ///< Gauss-Legendre points per panel; even
  int panels = 4096;           ///< total panel budget for adaptive bisection
  double abs_tol = 1e-10;      ///< refinement target for one integral
  double tail_cutoff_R = 40.0; ///< truncation point for x-domain diagnostics
  double deriv_step = 1e-3;    ///< base step for equator second differences
  int grid_size = 1024;        ///< theta samples per operator application

  void validate() const; ///< throws std::invalid_argument on bad fields
};

/// Raised when the panel budget runs out before the tolerance is met.
/// `estimate` carries the error estimate reached at that point.
struct QuadratureError : std::runtime_error {
  double estimate;
  QuadratureError(const std::string& what, double est)
      : std::runtime_error(what), estimate(est) {}
};

struct Integral {
  double value = 0.0;
  double error = 0.0; ///< accumulated two-panel discrepancies
  int panels = 0;
};

/// Nodes and weights of the m-point Gauss-Legendre rule on [-1,1].
/// Computed once per order and cached.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int m);

/// Adaptive integration of f over [a,b]. Known kinks of f go into `breaks`
/// and become initial panel boundaries. A panel is accepted when the
/// one-panel vs two-panel discrepancy drops below the panel's width share
/// of max(cfg.abs_tol, noise_floor); noise_floor > 0 is for difference
/// integrands whose attainable accuracy is limited by cancellation in f.
/// noise_floor_rel scales with the integrand itself: it adds a floor of
/// noise_floor_rel * sum(|initial panel values|), which keeps tolerances
/// meaningful when the integral is huge (high-power kernels).
Integral integrate(const std::function<double(double)>& f, double a, double b,
                   const QuadratureConfig& cfg,
                   std::span<const double> breaks = {},
                   double noise_floor = 0.0, double noise_floor_rel = 0.0);

/// int_0^{pi/2} cos^m u du (same value with sin^m), m >= 0, via lgamma.
double wallis(int m);

namespace detail {

/// Run fn(0..count-1) across hardware threads. fn must write disjoint
/// slots; the first exception thrown is rethrown on the calling thread.
void parallel_for(int count, const std::function<void(int)>& fn);

/// x^e for integer e >= 0 by squaring; keeps operator kernels free of pow().
double ipow(double x, int e);

} // namespace detail

} // namespace revolve
