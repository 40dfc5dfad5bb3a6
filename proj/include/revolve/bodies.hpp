#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace revolve::bodies {

struct ProfileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad body-spec string (CLI grammar).
struct BodySpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Radial function of a symmetric body of revolution, stored on the
/// fundamental domain theta in [0, pi/2] (theta = 0 on the axis of
/// revolution). Callers fold by the two reflection symmetries before
/// dispatching here; see MeridianProfile.
class RadialBackend {
 public:
  virtual ~RadialBackend() = default;

  virtual double radial(double theta) const = 0;

  /// Interior kink angles in (0, pi/2), for quadrature panel seeding.
  virtual std::vector<double> corners() const { return {}; }

  /// Canonical spec string for catalog bodies; descriptive otherwise.
  virtual std::string describe() const = 0;

  /// rho(t1) - rho(t2). Overridden where the straightforward difference
  /// would cancel catastrophically (operator-backed profiles).
  virtual double radial_diff(double t1, double t2) const {
    return radial(t1) - radial(t2);
  }

  /// rho(pi/2) - rho(theta) sin(theta), the equator deficit behind the
  /// modulus of convexity. Overridden for cancellation-safe evaluation.
  virtual double equator_deficit(double theta) const;
};

/// Immutable handle to a radial profile; all evaluation folds theta into
/// [0, pi/2] first, so backends see the fundamental domain only.
class MeridianProfile {
 public:
  explicit MeridianProfile(std::shared_ptr<const RadialBackend> impl);

  double radial(double theta) const;

  /// psi(x) = rho(theta) sin(theta) at theta = arctan(1/x), x >= 0
  /// (evaluated as an even function of x).
  double psi(double x) const;

  double equator_deficit(double theta) const;
  double radial_diff(double t1, double t2) const;
  std::vector<double> corners() const { return impl_->corners(); }
  std::string describe() const { return impl_->describe(); }

  const RadialBackend& backend() const { return *impl_; }
  std::shared_ptr<const RadialBackend> share() const { return impl_; }

  static double fold(double theta);

 private:
  std::shared_ptr<const RadialBackend> impl_;
};

// Catalog constructors. All profiles are unit-scale in the sense used by
// the accompanying analysis (rho(pi/2) = 1 except where noted).
MeridianProfile make_ball();
/// 1/(a cos + b sin); boundary contains the segment a x + b y = 1.
/// a = 0 degenerates to the infinite slab (psi == 1/b).
MeridianProfile make_segment_body(double a, double b);
MeridianProfile make_double_cone(); ///< segment body with a = b = 1
MeridianProfile make_cylinder();    ///< min(1/cos, 1/sin)
MeridianProfile make_pbody(double p); ///< (cos^p + sin^p)^(-1/p), p >= 1
/// Union of the unit cylinder with a thin tall one of half-width
/// exp(-1/t) and half-height 1/t; star-shaped, not convex.
MeridianProfile make_two_cylinder_union(double t);
/// rho^3 = 4 sin^2/cos^5 near the axis, spherical-cap complement
/// A/sin(theta) beyond theta* = pi/2 - arctan(5^(1/4)).
MeridianProfile make_mod4_body();
/// rho = 0 on [0, alpha], linear ramp to 1 at the equator.
MeridianProfile make_capped_cylinder(double alpha);
/// Smooth star profile 1 + sum a_k cos(2 k theta), |a_k| <= roughness/2^k,
/// clipped below at 0.05; deterministic in (seed, roughness).
MeridianProfile make_random_star(std::uint64_t seed, double roughness);

/// Profile of diag(s_axis, s_perp, ..., s_perp) K.
MeridianProfile dilate(const MeridianProfile& p, double s_axis, double s_perp);

/// Smallest x >= 0 with psi(x) <= 1 - 1/n, by bisection to rel. 1e-12.
/// Throws ProfileError("unreachable level") if psi never drops that low.
double sigma(const MeridianProfile& p, int n);

/// Sampled copy: m uniform knots on [0, pi/2] plus the profile's corner
/// angles; monotone-cubic pieces split at the corners.
MeridianProfile sample_profile(const MeridianProfile& p, int m);

/// Profile from explicit samples (CSV loads, operator grids). Knots must
/// start at 0, end at pi/2, strictly increase; values must be >= 0.
MeridianProfile profile_from_samples(std::vector<double> theta,
                                     std::vector<double> rho,
                                     bool monotone_cubic = true);

/// Body grammar: ball | cone | cylinder | segment:a,b | pball:p | ktee:t
///               | mod4 | capped:alpha | file:<path.csv>
MeridianProfile parse_body(const std::string& spec);
std::string format_body(const MeridianProfile& p); ///< canonical spec string

} // namespace revolve::bodies
