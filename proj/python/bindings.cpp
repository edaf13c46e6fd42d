#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "tricover/arith.hpp"
#include "tricover/brill_noether.hpp"
#include "tricover/cohom.hpp"
#include "tricover/cyclic_cover.hpp"
#include "tricover/errors.hpp"
#include "tricover/expr.hpp"
#include "tricover/theorem_a.hpp"
#include "tricover/triple_cover.hpp"

namespace py = pybind11;
using namespace tricover;

namespace {

py::object to_py(const BigInt& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rat& v) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_py(v.num()), to_py(v.den()));
}

Rat from_py(const py::handle& v) {
  if (py::isinstance<py::int_>(v)) {
    return Rat(BigInt(py::str(v).cast<std::string>(), 10));
  }
  const std::string num = py::str(v.attr("numerator")).cast<std::string>();
  const std::string den = py::str(v.attr("denominator")).cast<std::string>();
  return Rat(BigInt(num, 10), BigInt(den, 10));
}

py::dict terms_dict(const CohomClass& c) {
  py::dict d;
  for (const auto& [m, coeff] : c.terms()) {
    d[py::make_tuple(m.x_pow, m.theta_pow)] = to_py(coeff);
  }
  return d;
}

py::dict report_dict(const TheoremAReport& r) {
  py::dict d;
  d["h"] = r.h;
  d["g"] = r.g;
  d["e"] = r.e;
  d["parity"] = std::string(to_string(r.parity));
  d["critical_degree"] = r.critical_degree;
  d["lhs"] = to_py(r.lhs);
  d["rhs"] = to_py(r.rhs);
  d["lhs_via_expansion"] = to_py(r.lhs_via_expansion);
  d["rhs_via_pushforward"] = to_py(r.rhs_via_pushforward);
  d["strict"] = r.strict;
  return d;
}

}  // namespace

PYBIND11_MODULE(_tricover, m) {
  m.doc() = "Exact intersection numbers on symmetric products and triple-cover ledgers";

  static py::exception<Error> base_error(m, "TricoverError");
  py::register_exception<ContractError>(m, "ContractError", base_error.ptr());
  py::register_exception<DomainError>(m, "DomainError", base_error.ptr());
  py::register_exception<AmbientMismatch>(m, "AmbientMismatch", base_error.ptr());
  py::register_exception<UnsupportedInput>(m, "UnsupportedInput", base_error.ptr());
  py::register_exception<ConsistencyError>(m, "ConsistencyError", base_error.ptr());
  py::register_exception<ParityError>(m, "ParityError", base_error.ptr());
  py::register_exception<WindowError>(m, "WindowError", base_error.ptr());
  py::register_exception<CongruenceError>(m, "CongruenceError", base_error.ptr());
  py::register_exception<RangeError>(m, "RangeError", base_error.ptr());
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());

  m.def("factorial", [](long n) { return to_py(factorial(n)); });
  m.def("recip_factorial", [](long n) { return to_py(recip_factorial(n)); });
  m.def("binomial", [](long n, long k) { return to_py(binomial(n, k)); });

  py::class_<CohomClass>(m, "CohomClass")
      .def(py::init<long, long>(), py::arg("genus"), py::arg("sym_index"))
      .def_static("unit", &CohomClass::unit)
      .def_static("x_power", &CohomClass::x_power)
      .def_static("theta_power", &CohomClass::theta_power)
      .def_property_readonly("genus", &CohomClass::genus)
      .def_property_readonly("sym_index", &CohomClass::sym_index)
      .def_property_readonly("terms", &terms_dict)
      .def("__mul__", [](const CohomClass& a, const CohomClass& b) { return a * b; })
      .def("__mul__", [](const CohomClass& a, const py::object& s) { return a * from_py(s); })
      .def("__rmul__", [](const CohomClass& a, const py::object& s) { return a * from_py(s); })
      .def("__add__", [](const CohomClass& a, const CohomClass& b) { return a + b; })
      .def("__sub__", [](const CohomClass& a, const CohomClass& b) { return a - b; })
      .def("__neg__", [](const CohomClass& a) { return -a; })
      .def("__eq__", [](const CohomClass& a, const CohomClass& b) { return a == b; })
      .def("__str__", [](const CohomClass& c) { return format(c); })
      .def("__repr__", [](const CohomClass& c) {
        return "CohomClass(g=" + std::to_string(c.genus()) + ", d=" + std::to_string(c.sym_index()) +
               ", " + format(c) + ")";
      });

  m.def("evaluate_top", [](const CohomClass& c) { return to_py(evaluate_top(c)); });
  m.def("pushforward_B", &pushforward_B, py::arg("k"), py::arg("c"));
  m.def("pair_via_pushforward",
        [](const CohomClass& small, long k, long xpower) {
          return to_py(pair_via_pushforward(small, k, xpower));
        },
        py::arg("small"), py::arg("k"), py::arg("xpower"));
  m.def("parse", [](const std::string& text, long g, long d) { return parse(text, g, d); },
        py::arg("text"), py::arg("g"), py::arg("d"));
  m.def("format", &format);

  m.def("rho", &rho, py::arg("g"), py::arg("r"), py::arg("d"));
  m.def("castelnuovo_count",
        [](long g, long r, long d) { return to_py(castelnuovo_count(g, r, d)); }, py::arg("g"),
        py::arg("r"), py::arg("d"));
  m.def("bn1_class", &bn1_class, py::arg("g"), py::arg("d"));
  m.def("cs_max_degree", &cs_max_degree, py::arg("g"), py::arg("h"));
  m.def("lemma11_hypothesis", &lemma11_hypothesis, py::arg("g"), py::arg("n"));

  m.def("genus_bound", &genus_bound, py::arg("h"));
  m.def("critical_degree", &critical_degree, py::arg("h"), py::arg("g"));
  m.def("verify_inequality", [](long h, long g) { return report_dict(verify_inequality(h, g)); },
        py::arg("h"), py::arg("g"));
  m.def("audit_proof_chain",
        [](long h, long g) {
          py::list steps;
          for (const auto& s : audit_proof_chain(h, g).steps) {
            py::dict d;
            d["name"] = s.name;
            d["inequality"] = s.inequality_text;
            d["lhs"] = to_py(s.lhs);
            d["relation"] = std::string(to_string(s.relation));
            d["rhs"] = to_py(s.rhs);
            d["holds"] = s.holds;
            steps.append(d);
          }
          return steps;
        },
        py::arg("h"), py::arg("g"));
  m.def("sweep",
        [](long h_lo, long h_hi, long g_margin, unsigned workers) {
          std::vector<TheoremAReport> reports;
          {
            py::gil_scoped_release release;
            reports = sweep(h_lo, h_hi, g_margin, workers);
          }
          py::list out;
          for (const auto& r : reports) {
            out.append(report_dict(r));
          }
          return out;
        },
        py::arg("h_lo"), py::arg("h_hi"), py::arg("g_margin") = 0, py::arg("workers") = 0);

  m.def("derive_geometry",
        [](long g, long h, long delta) {
          const auto t = derive_geometry(g, h, delta);
          py::dict d;
          d["g"] = t.g;
          d["h"] = t.h;
          d["delta"] = t.delta;
          d["det_e_degree"] = t.det_E_degree;
          d["n"] = t.n;
          d["deg_m"] = t.deg_M;
          d["deg_l"] = t.deg_L;
          d["fx_fiber_coeff"] = t.fX_fiber_coeff;
          return d;
        },
        py::arg("g"), py::arg("h"), py::arg("delta"));
  m.def("admissible_deltas", &admissible_deltas, py::arg("g"), py::arg("h"));
  m.def("lemma21_margins",
        [](long g, long h) {
          const auto r = lemma21_margins(g, h);
          py::dict d;
          d["parity"] = std::string(to_string(r.parity));
          d["twist_degree_2d"] = r.twist_degree_2D;
          d["bound_m"] = to_py(r.bound_M);
          d["bound_l"] = to_py(r.bound_L);
          d["vanishing_guaranteed"] = r.vanishing_guaranteed;
          return d;
        },
        py::arg("g"), py::arg("h"));
  m.def("reducedness_bounds",
        [](long h) {
          const auto b = reducedness_bounds(h);
          return py::make_tuple(b.miranda, b.alternative);
        },
        py::arg("h"));

  m.def("derive_profile",
        [](long g, long h, long t) {
          const auto p = derive_profile(g, h, t);
          py::dict d;
          d["branch_count"] = p.branch_count;
          d["k1"] = p.k1;
          d["k2"] = p.k2;
          d["dim_h0"] = p.dim_H0;
          d["dim_h1"] = p.dim_H1;
          d["dim_h2"] = p.dim_H2;
          d["n1_lower"] = p.N1_lower;
          d["n2_lower"] = p.N2_lower;
          return d;
        },
        py::arg("g"), py::arg("h"), py::arg("t"));
  m.def("normalize_t", &normalize_t, py::arg("g"), py::arg("h"), py::arg("t"));
  m.def("pencil_gap_report",
        [](long g, long h, long t) {
          const auto r = pencil_gap_report(g, h, t);
          py::dict d;
          d["cs_bound"] = r.cs_bound;
          d["composed_below"] = to_py(r.composed_below);
          d["exists_at_most"] = r.exists_at_most;
          d["theorem_a_degree"] = r.theorem_a_degree;
          return d;
        },
        py::arg("g"), py::arg("h"), py::arg("t"));
  m.def("construction_feasible",
        [](long g, long h, long t) {
          const auto f = construction_feasible(g, h, t);
          return py::make_tuple(f.feasible, f.ell);
        },
        py::arg("g"), py::arg("h"), py::arg("t"));
}
