#include "revolve/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "revolve/interpolate.hpp"
#include "revolve/io.hpp"

namespace revolve::bodies {

namespace {

std::string fmt_num(double v) { return io::fmt_g(v); }

constexpr double kHalfPi = 1.5707963267948966;

} // namespace

double RadialBackend::equator_deficit(double theta) const {
  return radial(kHalfPi) - radial(theta) * std::sin(theta);
}

MeridianProfile::MeridianProfile(std::shared_ptr<const RadialBackend> impl)
    : impl_(std::move(impl)) {
  if (!impl_) throw std::invalid_argument("null profile backend");
}

double MeridianProfile::fold(double theta) {
  double t = std::fabs(std::fmod(theta, 2.0 * M_PI));
  if (t > M_PI) t = 2.0 * M_PI - t;
  if (t > kHalfPi) t = M_PI - t;
  return t;
}

double MeridianProfile::radial(double theta) const { return impl_->radial(fold(theta)); }

double MeridianProfile::psi(double x) const {
  x = std::fabs(x);
  return impl_->radial(std::atan2(1.0, x)) / std::hypot(1.0, x);
}

double MeridianProfile::equator_deficit(double theta) const {
  return impl_->equator_deficit(fold(theta));
}

double MeridianProfile::radial_diff(double t1, double t2) const {
  return impl_->radial_diff(fold(t1), fold(t2));
}

namespace {

class BallBackend final : public RadialBackend {
 public:
  double radial(double) const override { return 1.0; }
  std::string describe() const override { return "ball"; }
  double equator_deficit(double theta) const override {
    const double s = std::sin(M_PI_4 - 0.5 * theta);
    return 2.0 * s * s; // 1 - sin(theta), exact near the equator
  }
};

class SegmentBodyBackend final : public RadialBackend {
 public:
  SegmentBodyBackend(double a, double b, std::string name)
      : a_(a), b_(b), name_(std::move(name)) {}
  double radial(double theta) const override {
    return 1.0 / (a_ * std::cos(theta) + b_ * std::sin(theta));
  }
  std::string describe() const override { return name_; }
  double equator_deficit(double theta) const override {
    const double c = std::cos(theta), s = std::sin(theta);
    return a_ * c / (b_ * (a_ * c + b_ * s));
  }

 private:
  double a_, b_;
  std::string name_;
};

class CylinderBackend final : public RadialBackend {
 public:
  double radial(double theta) const override {
    const double c = std::cos(theta), s = std::sin(theta);
    return 1.0 / std::max(c, s);
  }
  std::vector<double> corners() const override { return {M_PI_4}; }
  std::string describe() const override { return "cylinder"; }
  double equator_deficit(double theta) const override {
    return theta >= M_PI_4 ? 0.0 : 1.0 - std::tan(theta);
  }
};

class PBodyBackend final : public RadialBackend {
 public:
  explicit PBodyBackend(double p) : p_(p) {}
  double radial(double theta) const override {
    const double c = std::cos(theta), s = std::sin(theta);
    return std::pow(std::pow(c, p_) + std::pow(s, p_), -1.0 / p_);
  }
  std::string describe() const override { return "pball:" + fmt_num(p_); }
  double equator_deficit(double theta) const override {
    // 1 - (1 + x^p)^(-1/p), x = cot(theta); exact down to the eps^p scale
    const double s = std::sin(theta);
    if (s <= 0.0) return 1.0;
    const double x = std::cos(theta) / s;
    const double t = std::pow(x, p_);
    if (!std::isfinite(t)) return 1.0;
    return -std::expm1(-std::log1p(t) / p_);
  }

 private:
  double p_;
};

class TwoCylinderUnionBackend final : public RadialBackend {
 public:
  explicit TwoCylinderUnionBackend(double t)
      : t_(t), width_(std::exp(-1.0 / t)), height_(1.0 / t) {}
  double radial(double theta) const override {
    const double c = std::cos(theta), s = std::sin(theta);
    const double thin = std::min(guard(width_, c), guard(height_, s));
    const double unit = std::min(guard(1.0, c), guard(1.0, s));
    return std::max(thin, unit);
  }
  std::vector<double> corners() const override {
    const double e = std::exp(1.0 / t_);
    std::vector<double> cs{M_PI_4, std::atan(e), std::atan(e / t_)};
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end(),
                         [](double u, double v) { return std::abs(u - v) < 1e-12; }),
             cs.end());
    std::erase_if(cs, [](double v) { return v <= 1e-12 || v >= kHalfPi - 1e-12; });
    return cs;
  }
  std::string describe() const override { return "ktee:" + fmt_num(t_); }
  double equator_deficit(double theta) const override {
    const double s = std::sin(theta);
    const double x = s > 0.0 ? std::cos(theta) / s : HUGE_VAL;
    const double psi = std::max(std::min(1.0, guard(1.0, x)),
                                std::min(height_, guard(width_, x)));
    return std::max(1.0, height_) - psi;
  }

 private:
  static double guard(double num, double den) {
    return den > 0.0 ? num / den : HUGE_VAL;
  }
  double t_, width_, height_;
};

class Mod4Backend final : public RadialBackend {
 public:
  Mod4Backend()
      : split_(kHalfPi - std::atan(std::pow(5.0, 0.25))),
        cap_(std::cbrt(4.0 * std::pow(5.0, -1.25))) {}
  double radial(double theta) const override {
    if (theta <= split_) {
      const double s = std::sin(theta), c = std::cos(theta);
      return std::cbrt(4.0 * s * s / (c * c * c * c * c));
    }
    return cap_ / std::sin(theta);
  }
  std::vector<double> corners() const override { return {split_}; }
  std::string describe() const override { return "mod4"; }

 private:
  double split_, cap_;
};

class CappedCylinderBackend final : public RadialBackend {
 public:
  explicit CappedCylinderBackend(double alpha) : alpha_(alpha) {}
  double radial(double theta) const override {
    if (theta <= alpha_) return 0.0;
    return (theta - alpha_) / (kHalfPi - alpha_);
  }
  std::vector<double> corners() const override { return {alpha_}; }
  std::string describe() const override { return "capped:" + fmt_num(alpha_); }

 private:
  double alpha_;
};

class RandomStarBackend final : public RadialBackend {
 public:
  RandomStarBackend(std::uint64_t seed, double roughness)
      : seed_(seed), roughness_(roughness) {
    std::mt19937_64 eng(seed);
    double scale = 0.5;
    for (int k = 1; k <= 6; ++k) {
      // bit-derived uniform in [0,1): identical across platforms
      const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
      coef_.push_back(roughness * (2.0 * u - 1.0) * scale);
      scale *= 0.5;
    }
  }
  double radial(double theta) const override {
    double r = 1.0;
    for (size_t k = 0; k < coef_.size(); ++k)
      r += coef_[k] * std::cos(2.0 * (k + 1) * theta);
    return std::max(r, 0.05);
  }
  std::string describe() const override {
    return "star:" + std::to_string(seed_) + "," + fmt_num(roughness_);
  }

 private:
  std::uint64_t seed_;
  double roughness_;
  std::vector<double> coef_;
};

class DilatedBackend final : public RadialBackend {
 public:
  DilatedBackend(std::shared_ptr<const RadialBackend> base, double sa, double sp)
      : base_(std::move(base)), sa_(sa), sp_(sp) {}
  double radial(double theta) const override {
    const double ax = std::cos(theta) / sa_;
    const double pe = std::sin(theta) / sp_;
    const double m = std::hypot(ax, pe);
    return base_->radial(std::atan2(pe, ax)) / m;
  }
  std::vector<double> corners() const override {
    std::vector<double> out;
    for (double c : base_->corners())
      out.push_back(std::atan2(sp_ * std::sin(c), sa_ * std::cos(c)));
    return out;
  }
  std::string describe() const override {
    return "dilate(" + base_->describe() + ";" + fmt_num(sa_) + "," + fmt_num(sp_) + ")";
  }

 private:
  std::shared_ptr<const RadialBackend> base_;
  double sa_, sp_;
};

class SampledBackend final : public RadialBackend {
 public:
  SampledBackend(std::vector<double> theta, std::vector<double> rho,
                 std::vector<double> corners, bool monotone_cubic, std::string name)
      : corners_(std::move(corners)), name_(std::move(name)) {
    if (theta.size() != rho.size() || theta.size() < 2)
      throw ProfileError("sampled profile needs matching theta/rho, >= 2 rows");
    for (size_t i = 0; i + 1 < theta.size(); ++i)
      if (!(theta[i + 1] > theta[i]))
        throw ProfileError("sampled profile theta must strictly increase");
    if (std::abs(theta.front()) > 1e-12 || std::abs(theta.back() - kHalfPi) > 1e-9)
      throw ProfileError("sampled profile must span [0, pi/2]");
    for (double r : rho)
      if (!(r >= 0.0) || !std::isfinite(r))
        throw ProfileError("sampled profile values must be finite and >= 0");

    // split at corner knots so interpolation never smooths across a kink
    std::vector<size_t> cuts{0};
    for (double c : corners_) {
      auto it = std::lower_bound(theta.begin(), theta.end(), c - 1e-12);
      if (it != theta.end() && std::abs(*it - c) < 1e-9) {
        size_t idx = it - theta.begin();
        if (idx > cuts.back() && idx + 1 < theta.size()) cuts.push_back(idx);
      }
    }
    cuts.push_back(theta.size() - 1);
    for (size_t s = 0; s + 1 < cuts.size(); ++s) {
      std::vector<double> xs(theta.begin() + cuts[s], theta.begin() + cuts[s + 1] + 1);
      std::vector<double> ys(rho.begin() + cuts[s], rho.begin() + cuts[s + 1] + 1);
      starts_.push_back(xs.front());
      if (monotone_cubic)
        cubic_.emplace_back(std::move(xs), std::move(ys));
      else
        linear_.emplace_back(std::move(xs), std::move(ys));
    }
  }

  double radial(double theta) const override {
    size_t piece = 0;
    while (piece + 1 < starts_.size() && theta >= starts_[piece + 1]) ++piece;
    return cubic_.empty() ? linear_[piece](theta) : cubic_[piece](theta);
  }
  std::vector<double> corners() const override { return corners_; }
  std::string describe() const override { return name_; }

 private:
  std::vector<double> starts_;
  std::vector<MonotoneCubic> cubic_;
  std::vector<LinearInterp> linear_;
  std::vector<double> corners_;
  std::string name_;
};

} // namespace

MeridianProfile make_ball() {
  return MeridianProfile(std::make_shared<BallBackend>());
}

MeridianProfile make_segment_body(double a, double b) {
  if (!(a >= 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("segment body needs a >= 0, b > 0");
  std::string name = "segment:" + fmt_num(a) + "," + fmt_num(b);
  return MeridianProfile(std::make_shared<SegmentBodyBackend>(a, b, std::move(name)));
}

MeridianProfile make_double_cone() {
  return MeridianProfile(std::make_shared<SegmentBodyBackend>(1.0, 1.0, "cone"));
}

MeridianProfile make_cylinder() {
  return MeridianProfile(std::make_shared<CylinderBackend>());
}

MeridianProfile make_pbody(double p) {
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("pball exponent must be >= 1");
  return MeridianProfile(std::make_shared<PBodyBackend>(p));
}

MeridianProfile make_two_cylinder_union(double t) {
  if (!(t > 0.0) || !std::isfinite(t))
    throw std::invalid_argument("ktee parameter must be > 0");
  return MeridianProfile(std::make_shared<TwoCylinderUnionBackend>(t));
}

MeridianProfile make_mod4_body() {
  return MeridianProfile(std::make_shared<Mod4Backend>());
}

MeridianProfile make_capped_cylinder(double alpha) {
  if (!(alpha > 0.0) || !(alpha < kHalfPi))
    throw std::invalid_argument("capped cylinder angle must lie in (0, pi/2)");
  return MeridianProfile(std::make_shared<CappedCylinderBackend>(alpha));
}

MeridianProfile make_random_star(std::uint64_t seed, double roughness) {
  if (!(roughness >= 0.0) || !(roughness <= 1.0))
    throw std::invalid_argument("roughness must lie in [0, 1]");
  return MeridianProfile(std::make_shared<RandomStarBackend>(seed, roughness));
}

MeridianProfile dilate(const MeridianProfile& p, double s_axis, double s_perp) {
  if (!(s_axis > 0.0) || !(s_perp > 0.0) || !std::isfinite(s_axis) ||
      !std::isfinite(s_perp))
    throw std::invalid_argument("dilation scales must be positive and finite");
  if (s_axis == 1.0 && s_perp == 1.0) return p;
  return MeridianProfile(std::make_shared<DilatedBackend>(p.share(), s_axis, s_perp));
}

double sigma(const MeridianProfile& p, int n) {
  if (n < 3) throw std::invalid_argument("dimension must be >= 3");
  const double level = 1.0 - 1.0 / n;
  if (p.psi(0.0) <= level) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (p.psi(hi) > level) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw ProfileError("unreachable level");
  }
  while (hi - lo > 1e-12 * hi) {
    const double mid = 0.5 * (lo + hi);
    (p.psi(mid) <= level ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

MeridianProfile sample_profile(const MeridianProfile& p, int m) {
  if (m < 2) throw std::invalid_argument("need at least 2 sample knots");
  std::vector<double> theta;
  theta.reserve(m + 4);
  for (int i = 0; i < m; ++i) theta.push_back(kHalfPi * i / (m - 1));
  auto corners = p.corners();
  for (double c : corners)
    if (c > 1e-12 && c < kHalfPi - 1e-12) theta.push_back(c);
  std::sort(theta.begin(), theta.end());
  theta.erase(std::unique(theta.begin(), theta.end(),
                          [](double u, double v) { return std::abs(u - v) < 1e-12; }),
              theta.end());
  theta.front() = 0.0;
  theta.back() = kHalfPi;
  std::vector<double> rho(theta.size());
  for (size_t i = 0; i < theta.size(); ++i) rho[i] = p.radial(theta[i]);
  return MeridianProfile(std::make_shared<SampledBackend>(
      std::move(theta), std::move(rho), std::move(corners), true,
      "sampled:" + p.describe()));
}

MeridianProfile profile_from_samples(std::vector<double> theta, std::vector<double> rho,
                                     bool monotone_cubic) {
  const std::string name = "samples[" + std::to_string(theta.size()) + "]";
  return MeridianProfile(std::make_shared<SampledBackend>(
      std::move(theta), std::move(rho), std::vector<double>{}, monotone_cubic, name));
}

namespace {

std::vector<double> parse_args(const std::string& rest, size_t count,
                               const std::string& spec) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= rest.size()) {
    size_t comma = rest.find(',', pos);
    std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                  : comma - pos);
    if (tok.empty()) throw BodySpecError("bad body spec: " + spec);
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size() || !std::isfinite(v))
      throw BodySpecError("bad number in body spec: " + spec);
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (out.size() != count)
    throw BodySpecError("wrong argument count in body spec: " + spec);
  return out;
}

} // namespace

MeridianProfile parse_body(const std::string& spec) {
  const size_t colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const bool has_args = colon != std::string::npos;

  try {
    if (head == "ball" && !has_args) return make_ball();
    if (head == "cone" && !has_args) return make_double_cone();
    if (head == "cylinder" && !has_args) return make_cylinder();
    if (head == "mod4" && !has_args) return make_mod4_body();
    if (head == "segment" && has_args) {
      auto v = parse_args(rest, 2, spec);
      return make_segment_body(v[0], v[1]);
    }
    if (head == "pball" && has_args) return make_pbody(parse_args(rest, 1, spec)[0]);
    if (head == "ktee" && has_args)
      return make_two_cylinder_union(parse_args(rest, 1, spec)[0]);
    if (head == "capped" && has_args)
      return make_capped_cylinder(parse_args(rest, 1, spec)[0]);
    if (head == "file" && has_args && !rest.empty()) {
      auto [theta, rho] = io::read_profile_csv(rest);
      return MeridianProfile(std::make_shared<SampledBackend>(
          std::move(theta), std::move(rho), std::vector<double>{}, true, spec));
    }
  } catch (const std::invalid_argument& e) {
    throw BodySpecError(std::string(e.what()) + " in body spec: " + spec);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const BodySpecError*>(&e)) throw;
    throw BodySpecError(std::string(e.what()) + " in body spec: " + spec);
  }
  throw BodySpecError("unknown body spec: " + spec);
}

std::string format_body(const MeridianProfile& p) { return p.describe(); }

} // namespace revolve::bodies
