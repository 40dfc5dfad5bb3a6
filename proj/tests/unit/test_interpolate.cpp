#include <doctest.h>

#include <cmath>
#include <vector>

#include "revolve/interpolate.hpp"

using namespace revolve;

namespace {

std::vector<double> linspace(double a, double b, int m) {
  std::vector<double> v(m);
  for (int i = 0; i < m; ++i) v[i] = a + (b - a) * i / (m - 1);
  return v;
}

} // namespace

TEST_CASE("interpolant reproduces its knots") {
  const std::vector<double> x = {0.0, 0.3, 1.0, 2.5};
  const std::vector<double> y = {1.0, -2.0, 0.5, 4.0};
  const MonotoneCubic f(x, y);
  for (size_t i = 0; i < x.size(); ++i) CHECK(f(x[i]) == y[i]);
  CHECK(f(-1.0) == y.front()); // clamped
  CHECK(f(9.0) == y.back());
}

TEST_CASE("monotone data stays monotone between knots") {
  const auto x = linspace(0.0, 1.0, 12);
  std::vector<double> y(x.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] = std::tanh(6.0 * (x[i] - 0.5));
  const MonotoneCubic f(x, y);
  double prev = f(0.0);
  for (int j = 1; j <= 1200; ++j) {
    const double v = f(j / 1200.0);
    CHECK(v >= prev - 1e-14);
    prev = v;
  }
}

TEST_CASE("dense smooth data round-trips to near machine accuracy") {
  const auto x = linspace(0.0, M_PI / 2, 2048);
  std::vector<double> y(x.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] = std::sin(x[i]) + 1.5;
  const MonotoneCubic f(x, y);
  double dev = 0.0;
  for (int j = 0; j <= 5000; ++j) {
    const double t = M_PI / 2 * j / 5000;
    dev = std::max(dev, std::fabs(f(t) - (std::sin(t) + 1.5)));
  }
  CHECK(dev < 1e-10);
}

TEST_CASE("smooth extrema do not get clipped") {
  // cos(4t)+2 has interior extrema; a hard monotone limiter would flatten
  // them (or starve the slopes one knot over) and cost two orders of
  // accuracy: |f''| h^2 / 8 = 1.2e-6 here instead of the cubic rate.
  const auto x = linspace(0.0, M_PI / 2, 2048);
  std::vector<double> y(x.size());
  for (size_t i = 0; i < x.size(); ++i) y[i] = std::cos(4.0 * x[i]) + 2.0;
  const MonotoneCubic f(x, y);
  double dev = 0.0;
  for (int j = 0; j <= 5000; ++j) {
    const double t = M_PI / 2 * j / 5000;
    dev = std::max(dev, std::fabs(f(t) - (std::cos(4.0 * t) + 2.0)));
  }
  CHECK(dev < 1e-8);
}

TEST_CASE("plateaus stay flat") {
  const std::vector<double> x = {0.0, 1.0, 2.0, 3.0, 4.0};
  const std::vector<double> y = {0.0, 1.0, 1.0, 1.0, 2.0};
  const MonotoneCubic f(x, y);
  for (double t : {1.2, 1.7, 2.0, 2.6}) {
    CHECK(f(t) >= 1.0 - 1e-15);
    CHECK(f(t) <= 1.0 + 1e-15);
  }
}

TEST_CASE("linear fallback is exactly piecewise linear") {
  const std::vector<double> x = {0.0, 1.0, 3.0};
  const std::vector<double> y = {0.0, 2.0, 0.0};
  const LinearInterp f(x, y);
  CHECK(f(0.5) == doctest::Approx(1.0));
  CHECK(f(2.0) == doctest::Approx(1.0));
  CHECK(f(-1.0) == 0.0);
  CHECK(f(5.0) == 0.0);
}
