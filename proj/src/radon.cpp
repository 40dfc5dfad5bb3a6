#include "revolve/radon.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

namespace revolve::radon {

namespace {

constexpr double kHalfPi = 1.5707963267948966;

// Relative noise floor for plain kernel integrals: keeps the refinement
// target proportional to the integral when rho^(n-1) reaches huge scales.
constexpr double kRelFloor = 1e-13;
// Absolute floor for difference integrals, in units of the equatorial
// kernel integral: below this the integrand is pure cancellation noise.
constexpr double kDiffFloor = 1e-14;

void check_dim(int n) {
  if (n < 3) throw std::invalid_argument("dimension must be at least 3");
}

// The substitution u = angle between the section plane normal's meridian
// and the running point turns the radial transform into an integral over
// [0, pi/2] with kernel rho(acos(sin(theta) sin u))^(n-1) (cos u)^(n-3).
double kernel(const bodies::MeridianProfile& k, int n, double st, double u) {
  const double s = st * std::sin(u);
  const double phi = std::acos(s < 1.0 ? s : 1.0);
  return detail::ipow(k.radial(phi), n - 1) * detail::ipow(std::cos(u), n - 3);
}

// u-positions where the kernel inherits a kink of rho, plus seeds at the
// 1/sqrt(n) concentration scale of (cos u)^(n-3) for large n.
std::vector<double> kernel_breaks(const bodies::MeridianProfile& k, int n,
                                  double st) {
  std::vector<double> br;
  for (double c : k.corners()) {
    const double ratio = std::cos(c) / st;
    if (ratio > 0.0 && ratio <= 1.0) br.push_back(std::asin(ratio));
  }
  if (n >= 20) {
    br.push_back(1.0 / std::sqrt(static_cast<double>(n)));
    br.push_back(2.0 / std::sqrt(static_cast<double>(n)));
  }
  return br;
}

Integral ik_raw(const bodies::MeridianProfile& k, int n, double st,
                const QuadratureConfig& cfg) {
  const auto br = kernel_breaks(k, n, st);
  return integrate([&](double u) { return kernel(k, n, st, u); }, 0.0, kHalfPi,
                   cfg, br, 0.0, kRelFloor);
}

double axis_value(const bodies::MeridianProfile& k, int n, double factor) {
  return factor * wallis(n - 3) * detail::ipow(k.radial(kHalfPi), n - 1);
}

class IntersectionViewBackend final : public bodies::RadialBackend {
 public:
  IntersectionViewBackend(bodies::MeridianProfile base, int n,
                          const QuadratureConfig& cfg, bool use_true_cn)
      : base_(std::move(base)), n_(n), cfg_(cfg), cn_(use_true_cn) {
    check_dim(n_);
    cfg_.validate();
    factor_ = NormalizationConstants{n_, cn_}.factor();
    raw_eq_ = ik_raw(base_, n_, 1.0, cfg_).value;
    if (!(raw_eq_ > 0.0) || !std::isfinite(raw_eq_))
      throw bodies::ProfileError("intersection profile degenerate at the equator: " +
                                 base_.describe());
    memo_[kHalfPi] = factor_ * raw_eq_;
  }

  double radial(double theta) const override {
    if (theta < 1e-12) return axis_value(base_, n_, factor_);
    {
      std::lock_guard lock(mu_);
      auto it = memo_.find(theta);
      if (it != memo_.end()) return it->second;
    }
    const double v = factor_ * ik_raw(base_, n_, std::sin(theta), cfg_).value;
    std::lock_guard lock(mu_);
    memo_.emplace(theta, v);
    return v;
  }

  // rho_IK(t1) - rho_IK(t2) as one quadrature of the kernel difference;
  // the floor is set by the kernel magnitude, not by the difference.
  // Extreme aspect ratios defeat the difference form: its evaluation noise
  // scales with the uncancelled kernel peaks and stalls refinement. Plain
  // subtraction of the two converged integrals is then the more accurate
  // route (its cancellation error sits at the rounding scale of the raw
  // values, below that kernel noise), so fall back to it on a blown budget.
  double radial_diff(double t1, double t2) const override {
    const double s1 = std::sin(t1), s2 = std::sin(t2);
    auto br = kernel_breaks(base_, n_, s1 > 0 ? s1 : 1.0);
    if (s2 > 0)
      for (double c : kernel_breaks(base_, n_, s2)) br.push_back(c);
    const auto diff = [&](double u) {
      return kernel(base_, n_, s1, u) - kernel(base_, n_, s2, u);
    };
    try {
      return factor_ * integrate(diff, 0.0, kHalfPi, cfg_, br,
                                 kDiffFloor * raw_eq_, kRelFloor)
                           .value;
    } catch (const QuadratureError&) {
      return radial(t1) - radial(t2);
    }
  }

  double equator_deficit(double theta) const override {
    if (theta < 1.0) return factor_ * raw_eq_ - radial(theta) * std::sin(theta);
    const double st = std::sin(theta);
    auto br = kernel_breaks(base_, n_, 1.0);
    for (double c : kernel_breaks(base_, n_, st)) br.push_back(c);
    const auto diff = [&](double u) {
      return kernel(base_, n_, 1.0, u) - st * kernel(base_, n_, st, u);
    };
    try {
      return factor_ * integrate(diff, 0.0, kHalfPi, cfg_, br,
                                 kDiffFloor * raw_eq_, kRelFloor)
                           .value;
    } catch (const QuadratureError&) {
      return factor_ * raw_eq_ - radial(theta) * std::sin(theta);
    }
  }

  std::string describe() const override {
    return "ik(" + base_.describe() + ";n=" + std::to_string(n_) +
           (cn_ ? ";cn" : "") + ")";
  }

 private:
  bodies::MeridianProfile base_;
  int n_;
  QuadratureConfig cfg_;
  bool cn_;
  double factor_ = 1.0;
  double raw_eq_ = 0.0;
  mutable std::mutex mu_;
  mutable std::map<double, double> memo_;
};

} // namespace

double NormalizationConstants::c_n() const {
  check_dim(n);
  return (n - 2.0) / (n - 1.0) * 2.0 *
         std::exp((0.5 * n - 1.0) * std::log(M_PI) - std::lgamma(0.5 * n));
}

double NormalizationConstants::d_n() const {
  check_dim(n);
  return (n - 1.0) / (n - 2.0) * std::sqrt(0.5 * n) *
         std::exp(std::lgamma(0.5 * n) - std::lgamma(0.5 * (n + 1)));
}

double ik_radial(const bodies::MeridianProfile& k, int n, double theta,
                 const QuadratureConfig& cfg, bool use_true_cn) {
  check_dim(n);
  cfg.validate();
  const double t = bodies::MeridianProfile::fold(theta);
  const double factor = NormalizationConstants{n, use_true_cn}.factor();
  if (t < 1e-12) return axis_value(k, n, factor);
  return factor * ik_raw(k, n, std::sin(t), cfg).value;
}

double ik_axis(const bodies::MeridianProfile& k, int n,
               const QuadratureConfig& cfg, bool use_true_cn) {
  check_dim(n);
  cfg.validate();
  return axis_value(k, n, NormalizationConstants{n, use_true_cn}.factor());
}

double psi_ik(const bodies::MeridianProfile& k, int n, double x,
              const QuadratureConfig& cfg, bool use_true_cn) {
  check_dim(n);
  cfg.validate();
  x = std::fabs(x);
  if (x < 1e-300) return ik_radial(k, n, kHalfPi, cfg, use_true_cn);

  // psi_IK(x) = (1/x) int_0^{pi/2} psi_K(sin w / x)^(n-1) (cos w)^(n-3) dw
  std::vector<double> br;
  for (double c : k.corners()) {
    const double arg = x * std::cos(c) / std::sin(c); // x cot(corner)
    if (arg > 0.0 && arg <= 1.0) br.push_back(std::asin(arg));
  }
  if (x < 1.0) br.push_back(std::asin(x)); // psi argument passes 1 here
  if (n >= 20) {
    br.push_back(1.0 / std::sqrt(static_cast<double>(n)));
    br.push_back(2.0 / std::sqrt(static_cast<double>(n)));
  }
  const auto f = [&](double w) {
    return detail::ipow(k.psi(std::sin(w) / x), n - 1) *
           detail::ipow(std::cos(w), n - 3);
  };
  const double factor = NormalizationConstants{n, use_true_cn}.factor();
  return factor / x * integrate(f, 0.0, kHalfPi, cfg, br, 0.0, kRelFloor).value;
}

bodies::MeridianProfile intersection_view(const bodies::MeridianProfile& k,
                                          int n, const QuadratureConfig& cfg,
                                          bool use_true_cn) {
  return bodies::MeridianProfile(
      std::make_shared<IntersectionViewBackend>(k, n, cfg, use_true_cn));
}

OperatorResult intersection_body(const bodies::MeridianProfile& k, int n,
                                 const QuadratureConfig& cfg, bool use_true_cn) {
  check_dim(n);
  cfg.validate();
  const int m = cfg.grid_size;
  const double factor = NormalizationConstants{n, use_true_cn}.factor();
  std::vector<double> theta(m), rho(m), errs(m, 0.0);
  detail::parallel_for(m, [&](int i) {
    theta[i] = kHalfPi * i / (m - 1);
    if (i == 0) {
      rho[0] = axis_value(k, n, factor);
      return;
    }
    const Integral val = ik_raw(k, n, std::sin(theta[i]), cfg);
    rho[i] = factor * val.value;
    errs[i] = factor * val.error;
  });
  OperatorResult res{bodies::profile_from_samples(theta, rho, true),
                     n,
                     use_true_cn,
                     std::move(theta),
                     std::move(rho),
                     *std::max_element(errs.begin(), errs.end())};
  return res;
}

std::vector<OperatorResult> iterate_intersection(const bodies::MeridianProfile& k,
                                                 int n, int iters,
                                                 const QuadratureConfig& cfg,
                                                 bool use_true_cn) {
  if (iters < 1 || iters > 16)
    throw std::invalid_argument("iteration count must be between 1 and 16");
  std::vector<OperatorResult> out;
  out.reserve(iters);
  bodies::MeridianProfile cur = k;
  for (int step = 0; step < iters; ++step) {
    out.push_back(intersection_body(cur, n, cfg, use_true_cn));
    const double eq = out.back().rho.back();
    if (!(eq > 0.0) || !std::isfinite(eq))
      throw bodies::ProfileError("iteration left no equatorial radius to renormalize");
    if (step + 1 < iters)
      cur = bodies::dilate(out.back().profile, 1.0 / eq, 1.0 / eq);
  }
  return out;
}

} // namespace revolve::radon
