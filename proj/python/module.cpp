// Python bindings for the core operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "binodal/bitangent.hpp"
#include "binodal/classifier.hpp"
#include "binodal/io.hpp"
#include "binodal/normal_forms.hpp"
#include "binodal/thermo.hpp"

namespace py = pybind11;
using namespace binodal;

namespace {

SurfaceJet jet_from_dict(const std::map<std::pair<int, int>, double>& terms,
                         double base_offset) {
  SurfaceJet j;
  j.base_offset = base_offset;
  for (const auto& [ij, c] : terms) j.set(ij.first, ij.second, c);
  return j;
}

py::dict curve_to_dict(const BinodalCurve& c) {
  py::dict d;
  std::vector<std::array<double, 4>> pts;
  pts.reserve(c.points.size());
  for (const auto& p : c.points) pts.push_back({p.u, p.v, p.x, p.y});
  d["points"] = pts;
  d["arclength"] = c.arclength;
  d["residual"] = c.residual;
  d["cusp_indices_M"] = c.cusp_indices_M;
  d["cusp_indices_N"] = c.cusp_indices_N;
  d["truncated"] = c.truncated_front || c.truncated_back;
  return d;
}

py::dict report_to_dict(const CaseReport& r) {
  py::dict d;
  d["label"] = std::string(to_string(r.label));
  d["normal_form"] = r.normal_form;
  d["c3"] = r.c3 ? py::cast(*r.c3) : py::none();
  d["beaks_sign"] = r.beaks_sign ? py::cast(*r.beaks_sign) : py::none();
  py::list conds;
  for (const auto& c : r.conditions) {
    py::dict cd;
    cd["name"] = c.name;
    cd["value"] = c.value;
    cd["required"] = c.require_zero ? "zero" : "nonzero";
    cd["satisfied"] = c.satisfied;
    cd["margin"] = c.margin;
    conds.append(cd);
  }
  d["conditions"] = conds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_binodal, m) {
  m.doc() = "bitangent planes, binodal curves, criminant surfaces and van der "
            "Waals phase equilibrium";

  py::class_<SurfaceJet>(m, "SurfaceJet")
      .def(py::init([](const std::map<std::pair<int, int>, double>& terms,
                       double base_offset) { return jet_from_dict(terms, base_offset); }),
           py::arg("terms"), py::arg("base_offset") = 0.0)
      .def_readonly("base_offset", &SurfaceJet::base_offset)
      .def("coeff", &SurfaceJet::coeff)
      .def("__call__",
           [](const SurfaceJet& j, double u, double v) { return evaluate(j, u, v); });

  m.def("evaluate", &evaluate, py::arg("jet"), py::arg("u"), py::arg("v"));
  m.def("partial", &partial, py::arg("jet"), py::arg("du"), py::arg("dv"), py::arg("u"),
        py::arg("v"));
  m.def("discriminant", &discriminant);
  m.def("asymptotic_directions", [](const SurfaceJet& j, double tol) {
    std::vector<std::pair<double, double>> out;
    for (const auto& d : asymptotic_directions(j, tol)) out.emplace_back(d.d1, d.d2);
    return out;
  }, py::arg("jet"), py::arg("tol") = kTol);
  m.def("is_cusp_of_gauss", [](const SurfaceJet& j, double tol) {
    auto c = is_cusp_of_gauss(j, tol);
    return py::make_tuple(c.is_cusp, c.margin);
  }, py::arg("jet"), py::arg("tol") = kTol);
  m.def("is_flecnodal_along_tie", &is_flecnodal_along_tie, py::arg("jet"),
        py::arg("tol") = kTol);
  m.def("substitute_linear", &substitute_linear);

  m.def("evaluate_H", [](const SurfaceJet& f, const SurfaceJet& g, double u, double v,
                         double x, double y) {
    auto h = evaluate_H({u, v, x, y}, f, g);
    return std::array<double, 3>{h[0], h[1], h[2]};
  });
  m.def("solve_newton", [](const SurfaceJet& f, const SurfaceJet& g,
                           std::array<double, 4> seed, double tol, int max_iter) {
    auto r = solve_newton({seed[0], seed[1], seed[2], seed[3]}, f, g, tol, max_iter);
    py::dict d;
    d["status"] = r.status == NewtonStatus::Converged   ? "converged"
                  : r.status == NewtonStatus::RankDeficient ? "rank_deficient"
                                                            : "no_convergence";
    d["point"] = std::array<double, 4>{r.point.u, r.point.v, r.point.x, r.point.y};
    d["iterations"] = r.iterations;
    d["residual"] = r.residual;
    return d;
  }, py::arg("f"), py::arg("g"), py::arg("seed"), py::arg("tol") = 1e-12,
     py::arg("max_iter") = 50);
  m.def("trace_binodal", [](const SurfaceJet& f, const SurfaceJet& g, double step,
                            int max_steps, double domain_bound, double tol) {
    TraceResult r = trace_binodal(f, g, {step, max_steps, domain_bound, tol});
    py::dict d;
    py::list curves;
    for (const auto& c : r.curves) curves.append(curve_to_dict(c));
    d["curves"] = curves;
    d["isolated"] = r.isolated;
    return d;
  }, py::arg("f"), py::arg("g"), py::arg("step") = 1e-3, py::arg("max_steps") = 10000,
     py::arg("domain_bound") = 0.5, py::arg("tol") = 1e-12);

  m.def("classify", [](const SurfaceJet& f, const SurfaceJet& g, double tol) {
    return report_to_dict(classify(f, g, tol));
  }, py::arg("f"), py::arg("g"), py::arg("tol") = kTol);
  m.def("c3", &c3, py::arg("f"), py::arg("g"), py::arg("tol") = kTol);
  m.def("beaks_criterion", &beaks_criterion, py::arg("f"), py::arg("g"),
        py::arg("tol") = kTol);
  m.def("cusp_invariant", &cusp_invariant, py::arg("f"), py::arg("g"),
        py::arg("tol") = kTol);
  m.def("gauss_cusp_curves", &gauss_cusp_curves, py::arg("f"), py::arg("tol") = kTol);

  m.def("generating_value", [](const std::string& label, double u, double v, double eps,
                               double q1, double q2, double q3, double tau, int sign_eps2,
                               int sign_v2, int sign_q2sq) {
    nf::NormalFormSpec spec{label_from_string(label), sign_eps2, sign_v2, sign_q2sq, tau};
    return nf::generating_value(spec, u, v, eps, q1, q2, q3);
  }, py::arg("label"), py::arg("u"), py::arg("v"), py::arg("eps"), py::arg("q1"),
     py::arg("q2"), py::arg("q3"), py::arg("tau") = 0.0, py::arg("sign_eps2") = 1,
     py::arg("sign_v2") = 1, py::arg("sign_q2sq") = 1);
  m.def("criminant_closed_form_C3", &nf::criminant_closed_form_C3, py::arg("u"),
        py::arg("eps"));
  m.def("nf_binodal", [](const std::string& label, double tau, int nu) {
    nf::NormalFormSpec spec;
    spec.label = label_from_string(label);
    spec.tau = tau;
    py::list branches;
    for (const auto& b : nf::binodal_from_normal_form(spec, nu)) {
      py::dict bd;
      bd["q12"] = b.q12;
      bd["u"] = b.u;
      bd["closed"] = b.closed;
      branches.append(bd);
    }
    return branches;
  }, py::arg("label"), py::arg("tau") = 0.0, py::arg("nu") = 400);

  py::class_<thermo::FluidParams>(m, "FluidParams")
      .def(py::init([](double a, double b, double R) {
             return thermo::FluidParams{a, b, R};
           }),
           py::arg("a") = 3.0, py::arg("b") = 1.0 / 3.0, py::arg("R") = 8.0 / 3.0)
      .def_readwrite("a", &thermo::FluidParams::a)
      .def_readwrite("b", &thermo::FluidParams::b)
      .def_readwrite("R", &thermo::FluidParams::R);
  py::class_<thermo::MixtureParams>(m, "MixtureParams")
      .def(py::init([](double a1, double a2, double a12, double b1, double b2, double R) {
             return thermo::MixtureParams{a1, a2, a12, b1, b2, R};
           }),
           py::arg("a1") = 1.0, py::arg("a2") = 1.0, py::arg("a12") = 0.25,
           py::arg("b1") = 0.1, py::arg("b2") = 0.1, py::arg("R") = 1.0);

  py::register_exception<thermo::SupercriticalError>(m, "SupercriticalError");

  m.def("vdw_pressure", &thermo::vdw_pressure, py::arg("V"), py::arg("T"), py::arg("params"));
  m.def("helmholtz_single", &thermo::helmholtz_single, py::arg("V"), py::arg("T"),
        py::arg("params"));
  m.def("critical_point", [](const thermo::FluidParams& p) {
    auto c = thermo::critical_point(p);
    return py::make_tuple(c.T, c.V, c.P);
  });
  m.def("spinodal_single", [](double T, const thermo::FluidParams& p) {
    auto s = thermo::spinodal_single(T, p);
    return py::make_tuple(s.V_minus, s.V_plus);
  });
  auto coexist_dict = [](const thermo::CoexistenceResult& r) {
    py::dict d;
    d["V_liq"] = r.V_liq;
    d["V_vap"] = r.V_vap;
    d["P_tie"] = r.P_tie;
    d["equal_area_residual"] = r.equal_area_residual;
    return d;
  };
  m.def("maxwell_construction", [coexist_dict](double T, const thermo::FluidParams& p,
                                               double tol) {
    return coexist_dict(thermo::maxwell_construction(T, p, tol));
  }, py::arg("T"), py::arg("params"), py::arg("tol") = 1e-10);
  m.def("maxwell_equal_area", [coexist_dict](double T, const thermo::FluidParams& p,
                                             double tol) {
    return coexist_dict(thermo::maxwell_equal_area(T, p, tol));
  }, py::arg("T"), py::arg("params"), py::arg("tol") = 1e-10);
  m.def("mixture_helmholtz", &thermo::mixture_helmholtz, py::arg("V"), py::arg("x"),
        py::arg("T"), py::arg("params"));
  m.def("mixture_jet", &thermo::mixture_jet, py::arg("V0"), py::arg("x0"), py::arg("T"),
        py::arg("params"));
  m.def("mixture_binodal", [](double T, const thermo::MixtureParams& mp) {
    auto r = thermo::mixture_binodal(T, mp);
    py::dict d;
    d["s"] = r.s;
    d["side1"] = r.side1;
    d["side2"] = r.side2;
    d["P1"] = r.P1;
    d["P2"] = r.P2;
    d["mu_resid"] = r.mu_resid;
    return d;
  }, py::arg("T"), py::arg("params"));

  m.def("parse_jet_json", [](const std::string& text) {
    auto in = io::parse_jet_json(text);
    return py::make_tuple(in.f, in.g);
  });
}
