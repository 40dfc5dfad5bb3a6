#pragma once

#include <vector>

namespace revolve {

/// Piecewise-cubic Hermite interpolant. Slopes come from local parabolic
/// fits and are limited on locally monotone stretches so that monotone
/// data stays monotone; at smooth interior extrema the parabolic slope is
/// kept as-is, which preserves full cubic accuracy there.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  double operator()(double t) const; ///< t clamped to the knot range

  const std::vector<double>& knots() const { return x_; }
  const std::vector<double>& values() const { return y_; }

 private:
  std::vector<double> x_, y_, d_;
};

/// Piecewise-linear fallback for non-smooth data.
class LinearInterp {
 public:
  LinearInterp() = default;
  LinearInterp(std::vector<double> x, std::vector<double> y);

  double operator()(double t) const;

  const std::vector<double>& knots() const { return x_; }
  const std::vector<double>& values() const { return y_; }

 private:
  std::vector<double> x_, y_;
};

} // namespace revolve
