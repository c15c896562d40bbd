#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "higauge/suites.hpp"

namespace py = pybind11;
using namespace higauge;

namespace {

py::object json_to_py(const json& j) {
  auto loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

std::vector<Rat> point_from_py(const std::vector<std::string>& coords) {
  std::vector<Rat> pt;
  for (const auto& c : coords) pt.push_back(parse_rat(c));
  return pt;
}

PolyForm parse_form(const std::string& text, const CrossedModulePtr& xm) {
  return form_from_json(json::parse(text), xm);
}

// pybind11 holder types must be non-const; hand modules around via a handle.
struct ModuleHandle {
  CrossedModulePtr ptr;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact calculus for 2-connections over differential crossed modules";

  py::register_exception<Error>(m, "HigaugeError");

  py::class_<ModuleHandle>(m, "Module")
      .def_property_readonly("name", [](const ModuleHandle& h) { return h.ptr->name; })
      .def_property_readonly("dim_g", [](const ModuleHandle& h) { return h.ptr->g.dim(); })
      .def_property_readonly("dim_h", [](const ModuleHandle& h) { return h.ptr->h.dim(); })
      .def("validate",
           [](const ModuleHandle& h) {
             json j;
             j["g"] = report_to_json(validate_lie_algebra(h.ptr->g));
             j["h"] = report_to_json(validate_lie_algebra(h.ptr->h));
             j["module"] = report_to_json(validate_crossed_module(*h.ptr));
             return json_to_py(j);
           })
      .def("to_json", [](const ModuleHandle& h) { return module_to_json(*h.ptr).dump(2); })
      .def("__repr__",
           [](const ModuleHandle& h) { return "<higauge.Module '" + h.ptr->name + "'>"; });

  m.def(
      "load_module",
      [](const std::string& name) { return ModuleHandle{resolve_module(name)}; },
      py::arg("name_or_path"), "Builtin fixture name or path to a fixture file");
  m.def("builtin_modules", &builtin_module_names);

  py::class_<PolyForm>(m, "Form")
      .def_property_readonly("degree", &PolyForm::degree)
      .def_property_readonly("patch_dim", &PolyForm::patch_dim)
      .def("is_zero", &PolyForm::is_zero)
      .def("__str__", &PolyForm::str)
      .def("__repr__", [](const PolyForm& f) { return "<higauge.Form " + f.str() + ">"; })
      .def("__add__", [](const PolyForm& a, const PolyForm& b) { return a + b; })
      .def("__sub__", [](const PolyForm& a, const PolyForm& b) { return a - b; })
      .def("__eq__", [](const PolyForm& a, const PolyForm& b) { return a == b; })
      .def("to_json", [](const PolyForm& f) { return form_to_json(f).dump(2); })
      .def(
          "eval",
          [](const PolyForm& f, const std::vector<std::string>& coords) {
            json out = json::object();
            for (const auto& [mask, vals] : eval_form(f, point_from_py(coords))) {
              json row = json::array();
              for (const auto& v : vals) row.push_back(to_string(v));
              out[mask_str(mask)] = row;
            }
            return json_to_py(out);
          },
          py::arg("point"), "Exact evaluation; coordinates as rational strings");

  m.def("d", [](const PolyForm& f) { return d(f); }, "Exterior derivative");
  m.def("wedge", &wedge);
  m.def("bracket", &bracket);
  m.def("act", &act);
  m.def("alpha_push", &alpha_push);
  m.def("cov_d", &cov_d);

  py::class_<TwoConnection>(m, "Connection")
      .def_property_readonly("A", [](const TwoConnection& c) { return c.A; })
      .def_property_readonly("B", [](const TwoConnection& c) { return c.B; })
      .def("to_json", [](const TwoConnection& c) { return connection_to_json(c).dump(2); })
      .def("__repr__", [](const TwoConnection& c) {
        return "<higauge.Connection A=" + c.A.str() + "; B=" + c.B.str() + ">";
      });

  m.def(
      "connection",
      [](const ModuleHandle& h, const std::string& a_json, const std::string& b_json) {
        const auto& xm = h.ptr;
        TwoConnection c{parse_form(a_json, xm), parse_form(b_json, xm)};
        c.check();
        return c;
      },
      py::arg("module"), py::arg("a"), py::arg("b"),
      "Build a 2-connection from form JSON strings");
  m.def(
      "zero_connection",
      [](const ModuleHandle& h, int patch_dim) {
        return TwoConnection::zero(patch_dim, h.ptr);
      },
      py::arg("module"), py::arg("patch_dim"));
  m.def(
      "random_connection",
      [](const ModuleHandle& h, int patch_dim, uint64_t seed, int degree_cap, int sparsity) {
        GenCaps caps{degree_cap, sparsity};
        return gen_connection(h.ptr, patch_dim, caps, seed);
      },
      py::arg("module"), py::arg("patch_dim") = 5, py::arg("seed") = 42,
      py::arg("degree_cap") = 2, py::arg("sparsity") = 3);

  py::class_<GaugeData>(m, "Gauge")
      .def_property_readonly("phi", [](const GaugeData& g) { return g.phi; })
      .def("to_json", [](const GaugeData& g) { return gauge_to_json(g).dump(2); });

  m.def(
      "random_gauge",
      [](const ModuleHandle& h, int patch_dim, uint64_t seed, uint64_t index) {
        GenCaps caps;
        return gen_gauge(h.ptr, patch_dim, caps, seed, GaugeKindSelect::Cycle, index);
      },
      py::arg("module"), py::arg("patch_dim") = 5, py::arg("seed") = 42, py::arg("index") = 0);
  m.def(
      "gauge_from_json",
      [](const ModuleHandle& h, const std::string& text) {
        return gauge_from_json(json::parse(text), h.ptr);
      },
      py::arg("module"), py::arg("json_text"));

  m.def("curvatures", [](const TwoConnection& c) {
    auto cur = curvatures(c);
    return py::make_tuple(cur.F, cur.G);
  });
  m.def("bianchi_residuals", [](const TwoConnection& c) {
    auto [r1, r2] = bianchi_residuals(c);
    return py::make_tuple(r1, r2);
  });
  m.def("gauge_transform", &gauge_transform);
  m.def("gauge_compose", &gauge_compose);
  m.def("curvature_covariance_residuals", [](const TwoConnection& c, const GaugeData& gd) {
    auto [rF, rG] = curvature_covariance_residuals(c, gd);
    return py::make_tuple(rF, rG);
  });

  py::class_<Pairing>(m, "Pairing")
      .def_property_readonly("n", &Pairing::n)
      .def("is_zero", &Pairing::is_zero)
      .def("validate",
           [](const Pairing& p) { return json_to_py(report_to_json(validate_pairing_full(p))); });
  m.def(
      "symmetrized_trace_pairing",
      [](const ModuleHandle& h, int n) { return symmetrized_trace_pairing(h.ptr, n); },
      py::arg("module"), py::arg("n"));

  m.def("cs_form", &cs_form);
  m.def("transgression_form", &transgression_form);
  m.def("cs_descent_residual", &cs_descent_residual);
  m.def("chern_weil_residual", &chern_weil_residual);
  m.def("wzw_term", [](const GaugeData& gd, const Pairing& p) { return wzw_term(gd, p).form; });
  m.def("wzw_contraction",
        [](const GaugeData& gd, const Pairing& p) { return wzw_term(gd, p).contraction; });
  m.def("wzw_closed_form_coefficient", [](int n) {
    auto c = wzw_closed_form_coefficient(n);
    return py::make_tuple(to_string(c.beta), to_string(c.closed_form));
  });
  m.def("alpha_form", &alpha_form);
  m.def("descent_residual", &descent_residual);
  m.def("b_form", &b_form);
  m.def("eq1_residual", &eq1_residual);
  m.def("gwzw_form", &gwzw_form);
  m.def("gwzw_exactness_residual", &gwzw_exactness_residual);

  m.def(
      "run_suites",
      [](const std::string& fixture, int n, int patch_dim, int instances, uint64_t seed,
         const std::string& mode, double tolerance, const std::vector<std::string>& suites,
         int workers) {
        SuiteConfig cfg;
        cfg.fixture = fixture;
        cfg.n = n;
        cfg.patch_dim = patch_dim;
        cfg.instances = instances;
        cfg.seed = seed;
        cfg.mode = (mode == "numeric") ? Mode::Numeric : Mode::Exact;
        cfg.tolerance = tolerance;
        cfg.suites = suites;
        cfg.workers = workers;
        return json_to_py(verification_report_to_json(run_suites(cfg)));
      },
      py::arg("fixture") = "adjoint:sl2", py::arg("n") = 1, py::arg("patch_dim") = 5,
      py::arg("instances") = 25, py::arg("seed") = 42, py::arg("mode") = "exact",
      py::arg("tolerance") = 1e-9, py::arg("suites") = std::vector<std::string>{},
      py::arg("workers") = 0);

  m.attr("__version__") = "0.1.0";
}
