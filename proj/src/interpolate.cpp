#include "revolve/interpolate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace revolve {

namespace {

void check_knots(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("interpolation needs >= 2 matching knots");
  for (size_t i = 0; i + 1 < x.size(); ++i)
    if (!(x[i + 1] > x[i]))
      throw std::invalid_argument("interpolation knots must strictly increase");
}

size_t interval_of(const std::vector<double>& x, double t) {
  auto it = std::upper_bound(x.begin(), x.end(), t);
  size_t i = it - x.begin();
  if (i == 0) return 0;
  if (i >= x.size()) return x.size() - 2;
  return i - 1;
}

} // namespace

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  check_knots(x_, y_);
  const size_t n = x_.size();
  d_.assign(n, 0.0);
  if (n == 2) {
    d_[0] = d_[1] = (y_[1] - y_[0]) / (x_[1] - x_[0]);
    return;
  }
  std::vector<double> h(n - 1), delta(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    delta[i] = (y_[i + 1] - y_[i]) / h[i];
  }
  for (size_t i = 1; i + 1 < n; ++i)
    d_[i] = (delta[i - 1] * h[i] + delta[i] * h[i - 1]) / (h[i - 1] + h[i]);
  d_[0] = ((2.0 * h[0] + h[1]) * delta[0] - h[0] * delta[1]) / (h[0] + h[1]);
  d_[n - 1] = ((2.0 * h[n - 2] + h[n - 3]) * delta[n - 2] -
               h[n - 2] * delta[n - 3]) / (h[n - 2] + h[n - 3]);

  auto limit = [](double d, double a, double b, double cap) {
    double s = a > 0 || b > 0 ? 1.0 : -1.0;
    return s * std::clamp(s * d, 0.0, cap);
  };
  for (size_t i = 1; i + 1 < n; ++i) {
    double a = delta[i - 1], b = delta[i];
    if (a == 0.0 && b == 0.0) {
      d_[i] = 0.0;
    } else if (a == 0.0 || b == 0.0) {
      // A lone zero secant between opposite trends is a symmetric extremum
      // sampled at its midpoint, not a plateau; the parabolic slope is the
      // accurate one there. Anything else bordering a flat stretch gets a
      // zero slope so the flat part cannot be overshot.
      const bool ext_right = b == 0.0 && i + 2 < n && delta[i + 1] != 0.0 &&
                             (delta[i + 1] > 0) != (a > 0);
      const bool ext_left = a == 0.0 && i >= 2 && delta[i - 2] != 0.0 &&
                            (delta[i - 2] > 0) != (b > 0);
      if (!ext_left && !ext_right) d_[i] = 0.0;
    } else if ((a > 0) == (b > 0)) {
      // Both secants share a sign: clamp into the monotone range. Right
      // next to a smooth extremum the near secant has already collapsed,
      // and capping by it costs an order of accuracy across the turn; the
      // wider cap is safe there because the turning interval is not
      // monotone anyway. Plateau neighbours (zero secants) stay strict.
      const bool turn_left =
          i >= 2 && delta[i - 2] != 0.0 && (delta[i - 2] > 0) != (a > 0);
      const bool turn_right =
          i + 2 < n && delta[i + 1] != 0.0 && (delta[i + 1] > 0) != (b > 0);
      const double cap = (turn_left || turn_right)
                             ? 3.0 * std::max(std::abs(a), std::abs(b))
                             : 3.0 * std::min(std::abs(a), std::abs(b));
      d_[i] = limit(d_[i], a, b, cap);
    }
    // opposite signs: smooth extremum, keep the parabolic slope
  }
  if (delta[0] != 0.0) {
    double s = delta[0] > 0 ? 1.0 : -1.0;
    d_[0] = s * std::clamp(s * d_[0], 0.0, 3.0 * std::abs(delta[0]));
  } else {
    d_[0] = 0.0;
  }
  if (delta[n - 2] != 0.0) {
    double s = delta[n - 2] > 0 ? 1.0 : -1.0;
    d_[n - 1] = s * std::clamp(s * d_[n - 1], 0.0, 3.0 * std::abs(delta[n - 2]));
  } else {
    d_[n - 1] = 0.0;
  }
}

double MonotoneCubic::operator()(double t) const {
  if (x_.empty()) throw std::logic_error("empty interpolant");
  t = std::clamp(t, x_.front(), x_.back());
  const size_t i = interval_of(x_, t);
  const double h = x_[i + 1] - x_[i];
  const double s = (t - x_[i]) / h;
  const double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * y_[i] + (s3 - 2 * s2 + s) * h * d_[i] +
         (-2 * s3 + 3 * s2) * y_[i + 1] + (s3 - s2) * h * d_[i + 1];
}

LinearInterp::LinearInterp(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  check_knots(x_, y_);
}

double LinearInterp::operator()(double t) const {
  if (x_.empty()) throw std::logic_error("empty interpolant");
  t = std::clamp(t, x_.front(), x_.back());
  const size_t i = interval_of(x_, t);
  const double s = (t - x_[i]) / (x_[i + 1] - x_[i]);
  return (1.0 - s) * y_[i] + s * y_[i + 1];
}

} // namespace revolve
