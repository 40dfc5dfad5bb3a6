// revolve: intersection bodies of bodies of revolution from the command line.
//
// Subcommands: eval (tabulate rho or psi), intersect (run the operator),
// analyze (power-type / equator / bm-ball reports), reproduce (scenario
// suite). Exit codes: 0 ok, 2 usage or body-spec error, 3 operator
// numerics, 4 analysis or I/O.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "revolve/analysis.hpp"
#include "revolve/bodies.hpp"
#include "revolve/experiments.hpp"
#include "revolve/io.hpp"
#include "revolve/quadrature.hpp"
#include "revolve/radon.hpp"

namespace {

using namespace revolve;

struct Options {
  std::string body = "ball";
  int n = 4;
  int iters = 1;
  int grid = 1024;
  double tol = 1e-10;
  std::string out;
  std::string format = "csv";
  std::uint64_t seed = 0;
  bool raw = false;
  std::string what = "rho";
  double xmax = 3.0;
  std::string analysis = "power-type";
  std::string scenario;
};

QuadratureConfig make_cfg(const Options& o) {
  QuadratureConfig cfg;
  cfg.grid_size = o.grid;
  cfg.abs_tol = o.tol;
  cfg.validate();
  return cfg;
}

// --out beats REVOLVE_OUT beats "out".
std::string resolve_out(const Options& o) {
  if (!o.out.empty()) return o.out;
  if (const char* env = std::getenv("REVOLVE_OUT"); env && *env) return env;
  return "out";
}

int cmd_eval(const Options& o) {
  const auto k = bodies::parse_body(o.body);
  const int m = std::max(2, o.grid);
  std::vector<double> xs(m), ys(m);
  const bool psi = o.what == "psi";
  for (int i = 0; i < m; ++i) {
    if (psi) {
      xs[i] = o.xmax * i / (m - 1);
      ys[i] = k.psi(xs[i]);
    } else {
      xs[i] = 1.5707963267948966 * i / (m - 1);
      ys[i] = k.radial(xs[i]);
    }
  }
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["body"] = bodies::format_body(k);
    j[psi ? "x" : "theta"] = xs;
    j[psi ? "psi" : "rho"] = ys;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << (psi ? "x,psi" : "theta,rho") << "\n";
    for (int i = 0; i < m; ++i)
      std::cout << io::fmt17(xs[i]) << "," << io::fmt17(ys[i]) << "\n";
  }
  return 0;
}

int cmd_intersect(const Options& o) {
  const auto k = bodies::parse_body(o.body);
  const auto cfg = make_cfg(o);
  const auto steps = radon::iterate_intersection(k, o.n, o.iters, cfg);
  const std::string dir = resolve_out(o);
  std::filesystem::create_directories(dir);

  io::CsvTable combined;
  combined.header = "theta";
  for (size_t s = 0; s < steps.size(); ++s)
    combined.header += ",rho" + std::to_string(s + 1);
  combined.rows.resize(steps[0].theta.size());
  for (size_t i = 0; i < steps[0].theta.size(); ++i)
    combined.rows[i].push_back(io::fmt17(steps[0].theta[i]));

  for (size_t s = 0; s < steps.size(); ++s) {
    const auto& st = steps[s];
    io::write_text_file(dir + "/step" + std::to_string(s + 1) + ".json",
                        io::operator_result_json(st.n, st.use_true_cn, st.theta,
                                                 st.rho, st.err_est));
    for (size_t i = 0; i < st.rho.size(); ++i)
      combined.rows[i].push_back(io::fmt17(st.rho[i]));
    std::cout << "step " << (s + 1) << ": rho(0)=" << io::fmt17(st.rho.front())
              << " rho(pi/2)=" << io::fmt17(st.rho.back())
              << " err_est=" << io::fmt17(st.err_est) << "\n";
  }
  io::write_csv(dir + "/steps.csv", combined);
  io::write_profile_csv(dir + "/profile.csv", steps.back().theta,
                        steps.back().rho);
  std::cout << "wrote " << dir << "/steps.csv and " << steps.size()
            << " step file(s)\n";
  return 0;
}

int cmd_analyze(const Options& o) {
  const auto base = bodies::parse_body(o.body);
  const auto cfg = make_cfg(o);
  const auto k = o.raw ? base : radon::intersection_body(base, o.n, cfg).profile;

  nlohmann::ordered_json j;
  if (o.analysis == "power-type") {
    const auto fit = analysis::power_type_fit(k, analysis::default_eps_grid());
    j["p"] = fit.p;
    j["c"] = fit.c;
    j["residual"] = fit.residual;
    j["eps_grid"] = fit.eps_grid;
  } else if (o.analysis == "equator") {
    const auto rep = analysis::equator_convexity(k, cfg);
    j["rho_eq"] = rep.rho_eq;
    j["rho_pp"] = rep.rho_pp;
    j["margin"] = rep.margin;
    j["verdict"] = rep.verdict;
    j["step"] = rep.step;
  } else if (o.analysis == "bm-ball") {
    const auto bm = analysis::bm_ball(k);
    j["distance"] = bm.distance;
    j["s_opt"] = bm.s_opt;
  } else {
    throw std::invalid_argument("--analysis must be power-type, equator or bm-ball");
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_reproduce(const Options& o) {
  experiments::RunContext ctx;
  ctx.out_dir = resolve_out(o);
  ctx.cfg = make_cfg(o);
  ctx.seed = o.seed;

  std::vector<std::string> ids;
  if (o.scenario == "all")
    ids = experiments::scenario_ids();
  else if (experiments::scenario_known(o.scenario))
    ids.push_back(o.scenario);
  else {
    std::cerr << "unknown scenario id: " << o.scenario << "\n";
    return 2;
  }

  bool all_pass = true;
  for (const auto& id : ids) {
    const auto res = experiments::run_scenario(id, ctx);
    std::printf("%-28s %s%s%s\n", res.id.c_str(), res.pass ? "PASS" : "FAIL",
                res.notes.empty() ? "" : "  ", res.notes.c_str());
    all_pass = all_pass && res.pass;
  }
  return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"intersection bodies of symmetric bodies of revolution"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--grid", o.grid, "samples per table or operator grid");
    sub->add_option("--tol", o.tol, "quadrature refinement target");
    sub->add_option("--out", o.out, "output directory (default REVOLVE_OUT or ./out)");
    sub->add_option("--format", o.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--seed", o.seed, "seed for randomized scenarios");
  };

  auto* eval = app.add_subcommand("eval", "tabulate rho(theta) or psi(x)");
  eval->add_option("--body", o.body, "body spec")->required();
  eval->add_option("--what", o.what, "rho|psi")
      ->check(CLI::IsMember({"rho", "psi"}));
  eval->add_option("--xmax", o.xmax, "right end of the x table (psi only)");
  add_common(eval);

  auto* intersect = app.add_subcommand("intersect", "apply the intersection-body operator");
  intersect->add_option("--body", o.body, "body spec")->required();
  intersect->add_option("--n", o.n, "ambient dimension, n >= 3");
  intersect->add_option("--iters", o.iters, "number of applications, 1..16");
  add_common(intersect);

  auto* analyze = app.add_subcommand("analyze", "convexity reports near the equator");
  analyze->add_option("--body", o.body, "body spec")->required();
  analyze->add_option("--n", o.n, "ambient dimension, n >= 3");
  analyze->add_option("--analysis", o.analysis, "power-type|equator|bm-ball")
      ->check(CLI::IsMember({"power-type", "equator", "bm-ball"}));
  analyze->add_flag("--raw", o.raw, "analyze the body itself, not its intersection body");
  add_common(analyze);

  auto* reproduce = app.add_subcommand("reproduce", "run a scenario or the whole suite");
  reproduce->add_option("id", o.scenario, "scenario id or \"all\"")->required();
  add_common(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*intersect) return cmd_intersect(o);
    if (*analyze) return cmd_analyze(o);
    return cmd_reproduce(o);
  } catch (const bodies::BodySpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const QuadratureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bodies::ProfileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const analysis::AnalysisError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
