#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "revolve/analysis.hpp"
#include "revolve/bodies.hpp"
#include "revolve/experiments.hpp"
#include "revolve/quadrature.hpp"
#include "revolve/radon.hpp"

namespace py = pybind11;
using namespace revolve;

namespace {

py::dict step_dict(const radon::OperatorResult& r) {
  py::dict d;
  d["n"] = r.n;
  d["use_true_cn"] = r.use_true_cn;
  d["theta"] = r.theta;
  d["rho"] = r.rho;
  d["err_est"] = r.err_est;
  d["profile"] = r.profile;
  return d;
}

py::dict scenario_dict(const experiments::ScenarioResult& r) {
  py::dict metrics;
  for (const auto& m : r.metrics) metrics[py::str(m.name)] = m.value;
  py::dict d;
  d["id"] = r.id;
  d["pass"] = r.pass;
  d["metrics"] = metrics;
  d["notes"] = r.notes;
  return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "intersection bodies of symmetric bodies of revolution";
  m.attr("__version__") = "1.0.0";

  py::register_exception<bodies::BodySpecError>(m, "BodySpecError",
                                                PyExc_ValueError);
  py::register_exception<bodies::ProfileError>(m, "ProfileError",
                                               PyExc_RuntimeError);
  py::register_exception<QuadratureError>(m, "QuadratureError",
                                          PyExc_RuntimeError);
  py::register_exception<analysis::AnalysisError>(m, "AnalysisError",
                                                  PyExc_RuntimeError);

  py::class_<QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init<>())
      .def_readwrite("nodes", &QuadratureConfig::nodes)
      .def_readwrite("panels", &QuadratureConfig::panels)
      .def_readwrite("abs_tol", &QuadratureConfig::abs_tol)
      .def_readwrite("tail_cutoff_R", &QuadratureConfig::tail_cutoff_R)
      .def_readwrite("deriv_step", &QuadratureConfig::deriv_step)
      .def_readwrite("grid_size", &QuadratureConfig::grid_size);

  py::class_<bodies::MeridianProfile>(m, "Profile")
      .def("radial", &bodies::MeridianProfile::radial, py::arg("theta"))
      .def("psi", &bodies::MeridianProfile::psi, py::arg("x"))
      .def("corners", &bodies::MeridianProfile::corners)
      .def("equator_deficit", &bodies::MeridianProfile::equator_deficit,
           py::arg("theta"))
      .def("describe", &bodies::MeridianProfile::describe)
      .def("__repr__", [](const bodies::MeridianProfile& p) {
        return "Profile('" + p.describe() + "')";
      });

  m.def("parse_body", &bodies::parse_body, py::arg("spec"));
  m.def("format_body", &bodies::format_body, py::arg("profile"));
  m.def("make_random_star", &bodies::make_random_star, py::arg("seed"),
        py::arg("roughness"));
  m.def("dilate", &bodies::dilate, py::arg("profile"), py::arg("s_axis"),
        py::arg("s_perp"));
  m.def("sigma", &bodies::sigma, py::arg("profile"), py::arg("n"));
  m.def("sample_profile", &bodies::sample_profile, py::arg("profile"),
        py::arg("grid"));
  m.def("profile_from_samples", &bodies::profile_from_samples, py::arg("theta"),
        py::arg("rho"), py::arg("monotone_cubic") = true);

  m.def("ik_radial", &radon::ik_radial, py::arg("body"), py::arg("n"),
        py::arg("theta"), py::arg("cfg") = QuadratureConfig{},
        py::arg("use_true_cn") = false);
  m.def("ik_axis", &radon::ik_axis, py::arg("body"), py::arg("n"),
        py::arg("cfg") = QuadratureConfig{}, py::arg("use_true_cn") = false);
  m.def("psi_ik", &radon::psi_ik, py::arg("body"), py::arg("n"), py::arg("x"),
        py::arg("cfg") = QuadratureConfig{}, py::arg("use_true_cn") = false);
  m.def("intersection_view", &radon::intersection_view, py::arg("body"),
        py::arg("n"), py::arg("cfg") = QuadratureConfig{},
        py::arg("use_true_cn") = false);
  m.def(
      "intersection_body",
      [](const bodies::MeridianProfile& k, int n, const QuadratureConfig& cfg,
         bool true_cn) { return step_dict(radon::intersection_body(k, n, cfg, true_cn)); },
      py::arg("body"), py::arg("n"), py::arg("cfg") = QuadratureConfig{},
      py::arg("use_true_cn") = false);
  m.def(
      "iterate_intersection",
      [](const bodies::MeridianProfile& k, int n, int iters,
         const QuadratureConfig& cfg, bool true_cn) {
        py::list out;
        for (const auto& st : radon::iterate_intersection(k, n, iters, cfg, true_cn))
          out.append(step_dict(st));
        return out;
      },
      py::arg("body"), py::arg("n"), py::arg("iters"),
      py::arg("cfg") = QuadratureConfig{}, py::arg("use_true_cn") = false);

  m.def("modulus_equator", &analysis::modulus_equator, py::arg("body"),
        py::arg("eps"));
  m.def("default_eps_grid", &analysis::default_eps_grid);
  m.def(
      "power_type_fit",
      [](const bodies::MeridianProfile& k, const std::vector<double>& grid) {
        const auto fit = analysis::power_type_fit(k, grid);
        py::dict d;
        d["p"] = fit.p;
        d["c"] = fit.c;
        d["residual"] = fit.residual;
        d["eps_grid"] = fit.eps_grid;
        return d;
      },
      py::arg("body"), py::arg("eps_grid") = analysis::default_eps_grid());
  m.def(
      "equator_convexity",
      [](const bodies::MeridianProfile& k, const QuadratureConfig& cfg) {
        const auto rep = analysis::equator_convexity(k, cfg);
        py::dict d;
        d["rho_eq"] = rep.rho_eq;
        d["rho_pp"] = rep.rho_pp;
        d["margin"] = rep.margin;
        d["verdict"] = rep.verdict;
        d["step"] = rep.step;
        return d;
      },
      py::arg("body"), py::arg("cfg") = QuadratureConfig{});
  m.def(
      "bm_ball",
      [](const bodies::MeridianProfile& k) {
        const auto bm = analysis::bm_ball(k);
        py::dict d;
        d["distance"] = bm.distance;
        d["s_opt"] = bm.s_opt;
        d["ratio_curve"] = bm.ratio_curve;
        return d;
      },
      py::arg("body"));
  m.def(
      "uniformity_scan",
      [](const std::vector<bodies::MeridianProfile>& family,
         const std::vector<int>& ns, const std::vector<double>& grid,
         const QuadratureConfig& cfg) {
        py::list out;
        for (const auto& r : analysis::uniformity_scan(family, ns, grid, cfg)) {
          py::dict d;
          d["body"] = r.body;
          d["n"] = r.n;
          d["p"] = r.p;
          d["c"] = r.c;
          d["residual"] = r.residual;
          out.append(d);
        }
        return out;
      },
      py::arg("family"), py::arg("n_range"),
      py::arg("eps_grid") = analysis::default_eps_grid(),
      py::arg("cfg") = QuadratureConfig{});

  m.def("scenario_ids", [] { return experiments::scenario_ids(); });
  m.def(
      "run_scenario",
      [](const std::string& id, const std::string& out_dir, std::uint64_t seed,
         const QuadratureConfig& cfg) {
        experiments::RunContext ctx;
        ctx.out_dir = out_dir;
        ctx.seed = seed;
        ctx.cfg = cfg;
        return scenario_dict(experiments::run_scenario(id, ctx));
      },
      py::arg("id"), py::arg("out_dir") = "out", py::arg("seed") = 0,
      py::arg("cfg") = QuadratureConfig{});
}
