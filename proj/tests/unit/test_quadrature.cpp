#include <doctest.h>

#include <atomic>
#include <cmath>
#include <vector>

#include "revolve/quadrature.hpp"

using namespace revolve;

TEST_CASE("single Gauss-Legendre panel is exact through degree 31") {
  QuadratureConfig cfg;
  const auto r = integrate([](double x) { return std::pow(x, 31.0); }, 0.0, 1.0, cfg);
  CHECK(r.value == doctest::Approx(1.0 / 32.0).epsilon(1e-14));
}

TEST_CASE("wallis integrals match their closed forms") {
  CHECK(wallis(0) == doctest::Approx(M_PI / 2).epsilon(1e-15));
  CHECK(wallis(1) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(wallis(2) == doctest::Approx(M_PI / 4).epsilon(1e-15));
  CHECK(wallis(3) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(wallis(5) == doctest::Approx(8.0 / 15.0).epsilon(1e-15));
  CHECK(wallis(10) == doctest::Approx(63.0 * M_PI / 512.0).epsilon(1e-14));
}

TEST_CASE("cosine powers integrate to the wallis values") {
  QuadratureConfig cfg;
  for (int m : {2, 7, 12}) {
    const auto r = integrate([m](double u) { return std::pow(std::cos(u), m); },
                             0.0, M_PI / 2, cfg);
    CHECK(r.value == doctest::Approx(wallis(m)).epsilon(1e-12));
  }
}

TEST_CASE("a declared break point makes a kinked integrand cheap") {
  QuadratureConfig cfg;
  const auto f = [](double x) { return std::fabs(x - 0.3); };
  const std::vector<double> br = {0.3};
  const auto with = integrate(f, 0.0, 1.0, cfg, br);
  CHECK(with.value == doctest::Approx(0.29).epsilon(1e-14));
  CHECK(with.panels <= 6);
  const auto without = integrate(f, 0.0, 1.0, cfg);
  CHECK(without.value == doctest::Approx(0.29).epsilon(1e-10));
  CHECK(without.panels > with.panels);
}

TEST_CASE("exhausting the panel budget throws with an estimate") {
  QuadratureConfig cfg;
  cfg.panels = 2;
  CHECK_THROWS_AS(integrate([](double x) { return std::cos(50.0 * x); }, 0.0,
                            3.0, cfg),
                  QuadratureError);
}

TEST_CASE("noise floors relax the refinement target") {
  QuadratureConfig cfg;
  cfg.abs_tol = 1e-30; // unreachable on its own

  const auto f = [](double x) { return std::sin(x) + std::cos(3.0 * x); };
  const double exact = (1.0 - std::cos(2.0)) + std::sin(6.0) / 3.0;
  const auto r = integrate(f, 0.0, 2.0, cfg, {}, 1e-8);
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-9));

  // relative floor: a 1e6-scaled integrand stops refining near 1e6 * rel
  const auto big = [](double x) { return 1e6 * std::sin(x); };
  const auto rb = integrate(big, 0.0, 2.0, cfg, {}, 0.0, 1e-10);
  CHECK(rb.value == doctest::Approx(1e6 * (1.0 - std::cos(2.0))).epsilon(1e-9));
}

TEST_CASE("config validation rejects bad fields") {
  QuadratureConfig cfg;
  cfg.nodes = 15;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.panels = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.abs_tol = -1.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = {};
  cfg.grid_size = 32;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("parallel_for covers every index exactly once") {
  std::vector<std::atomic<int>> hits(257);
  detail::parallel_for(257, [&](int i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) CHECK(h.load() == 1);
}

TEST_CASE("parallel_for propagates worker exceptions") {
  CHECK_THROWS_AS(detail::parallel_for(64,
                                       [](int i) {
                                         if (i == 37) throw std::runtime_error("boom");
                                       }),
                  std::runtime_error);
}

TEST_CASE("integer powers by squaring") {
  CHECK(detail::ipow(2.0, 10) == 1024.0);
  CHECK(detail::ipow(0.5, 0) == 1.0);
  CHECK(detail::ipow(-3.0, 3) == -27.0);
  CHECK(detail::ipow(17.6, 199) == doctest::Approx(std::pow(17.6, 199.0)).epsilon(1e-12));
}
