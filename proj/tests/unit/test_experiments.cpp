#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "revolve/experiments.hpp"

using namespace revolve;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

experiments::RunContext test_ctx(const std::string& name) {
  experiments::RunContext ctx;
  ctx.out_dir = (fs::temp_directory_path() / name).string();
  return ctx;
}

} // namespace

TEST_CASE("the scenario registry lists 15 unique ids in a fixed order") {
  const std::vector<std::string> want = {
      "lemma1-psi-bounds",    "lemma2-upper-bound",
      "lemma3-sigma-bounds",  "lemma4-tail-cutoff",
      "thm31-uniform-power-type", "remark1-cone-n3",
      "remark2-star-unbounded",   "thm41-double-intersection",
      "remark3-cylinder-not-ball", "example1-cylindrical-ik",
      "example2-power-type-4",     "thm53-strict-convexity",
      "thm56-origin-interior",     "busemann-convexity",
      "equivariance"};
  CHECK(experiments::scenario_ids() == want);
  for (const auto& id : want) CHECK(experiments::scenario_known(id));
  CHECK_FALSE(experiments::scenario_known("bogus"));
}

TEST_CASE("unknown scenario ids are rejected up front") {
  CHECK_THROWS_AS(experiments::run_scenario("bogus", test_ctx("revolve-unknown")),
                  std::invalid_argument);
}

TEST_CASE("a scenario run leaves a complete artifact directory") {
  const auto ctx = test_ctx("revolve-lemma1");
  fs::remove_all(ctx.out_dir);
  const auto res = experiments::run_scenario("lemma1-psi-bounds", ctx);
  CHECK(res.id == "lemma1-psi-bounds");
  CHECK(res.pass);
  CHECK(!res.metrics.empty());

  const fs::path dir = fs::path(ctx.out_dir) / "lemma1-psi-bounds";
  CHECK(fs::exists(dir / "metrics.csv"));
  CHECK(fs::exists(dir / "verdict.json"));
  CHECK(fs::exists(dir / "curve.svg"));

  const auto metrics = slurp(dir / "metrics.csv");
  CHECK(metrics.rfind("metric,value\n", 0) == 0);
  CHECK(slurp(dir / "curve.svg").find("<svg") != std::string::npos);

  const auto v = nlohmann::json::parse(slurp(dir / "verdict.json"));
  CHECK(v["id"] == "lemma1-psi-bounds");
  CHECK(v["pass"] == true);
  CHECK(v["metrics"].is_object());
  CHECK(v.contains("notes"));
}

TEST_CASE("reruns reproduce artifacts byte for byte") {
  const auto ctx = test_ctx("revolve-rerun");
  fs::remove_all(ctx.out_dir);
  experiments::run_scenario("lemma2-upper-bound", ctx);
  const fs::path f = fs::path(ctx.out_dir) / "lemma2-upper-bound" / "metrics.csv";
  const auto first = slurp(f);
  experiments::run_scenario("lemma2-upper-bound", ctx);
  CHECK(slurp(f) == first);
  CHECK(first.find("minslack:") != std::string::npos);
}

TEST_CASE("compute failures become failed verdicts, not crashes") {
  auto ctx = test_ctx("revolve-starved");
  fs::remove_all(ctx.out_dir);
  ctx.cfg.panels = 2; // far too small for the star integrands
  const auto res = experiments::run_scenario("thm53-strict-convexity", ctx);
  CHECK_FALSE(res.pass);
  CHECK(res.notes.rfind("error: ", 0) == 0);
  CHECK(fs::exists(fs::path(ctx.out_dir) / "thm53-strict-convexity" / "verdict.json"));
}

TEST_CASE("the n=3 cone scenario passes end to end") {
  const auto ctx = test_ctx("revolve-remark1");
  fs::remove_all(ctx.out_dir);
  const auto res = experiments::run_scenario("remark1-cone-n3", ctx);
  CHECK(res.pass);
  double psi0 = 0.0;
  for (const auto& m : res.metrics)
    if (m.name == "psi_ik_at_0") psi0 = m.value;
  CHECK(psi0 == doctest::Approx(1.0).epsilon(1e-8));
}
