#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abel/center.hpp"
#include "abel/decomp.hpp"
#include "abel/error.hpp"
#include "abel/io.hpp"
#include "abel/moments.hpp"
#include "abel/trig.hpp"
#include "abel/verify.hpp"

namespace py = pybind11;
using namespace abel;
using io::Json;

namespace {

// Python values cross the boundary as JSON text, so the field-naming input
// errors of the io layer apply unchanged.
Json from_py(const py::handle& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Poly poly_arg(const py::handle& obj, int D, const char* field) { return io::poly_from_json(from_py(obj), D, field); }

Interval interval_arg(const py::handle& obj, int D) {
  Json j = from_py(obj);
  if (j.is_array() && j.size() == 2) j = Json{{"a", j[0]}, {"b", j[1]}};
  return io::interval_from_json(j, D, "interval");
}

TrigPoly trig_arg(const py::handle& obj, int D, const char* field) { return io::trig_from_json(from_py(obj), D, field); }

std::vector<std::string> strs(const std::vector<Scalar>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

std::vector<std::string> coeffs(const Poly& f) { return strs(f.coeffs()); }

py::object witness(const std::optional<CCWitness>& w) {
  if (!w) return py::none();
  py::dict d;
  d["W"] = coeffs(w->W);
  d["P_outer"] = coeffs(w->P_outer);
  d["Q_outer"] = coeffs(w->Q_outer);
  return d;
}

Param param_arg(const std::string& s) {
  if (s == "eps" || s == "eps_on_q") return Param::eps_on_q;
  if (s == "delta" || s == "delta_on_p") return Param::delta_on_p;
  throw InputError("field 'param': expected eps or delta");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations for parametric centers of Abel equations";

  auto base = py::register_exception<Error>(m, "AbelError");
  py::register_exception<DomainError>(m, "DomainError", base);
  py::register_exception<InputError>(m, "InputError", base);
  py::register_exception<ComputeError>(m, "ComputeError", base);

  m.def(
      "poincare_coeffs",
      [](py::object p, py::object q, py::object interval, int K, int D) {
        Interval iv = interval_arg(interval, D);
        return strs(poincare_coeffs(poly_arg(p, D, "p"), poly_arg(q, D, "q"), iv, K));
      },
      py::arg("p"), py::arg("q"), py::arg("interval"), py::arg("K"), py::arg("D") = 0,
      "Flow map coefficients v_0..v_K of y' = p y^3 + q y^2.");

  m.def(
      "center_table",
      [](py::object P, py::object Q, py::object interval, int K, const std::string& param, const std::string& direction,
         int D) {
        Interval iv = interval_arg(interval, D);
        Poly p = derivative(poly_arg(P, D, "P")), q = derivative(poly_arg(Q, D, "Q"));
        if (direction != "forward" && direction != "backward")
          throw InputError("field 'direction': expected forward or backward");
        auto dir = direction == "forward" ? Direction::forward : Direction::backward;
        return to_py(io::to_json(parametric_table(p, q, iv, K, param_arg(param), dir)));
      },
      py::arg("P"), py::arg("Q"), py::arg("interval"), py::arg("K"), py::arg("param") = "eps",
      py::arg("direction") = "forward", py::arg("D") = 0,
      "Nonzero table entries keyed \"k,j\" for p = P', q = Q'.");

  m.def(
      "melnikov",
      [](py::object P, py::object Q, py::object interval, int D) {
        PCPair pair(poly_arg(P, D, "P"), poly_arg(Q, D, "Q"), interval_arg(interval, D));
        py::dict d;
        for (int k = 6; k <= 8; ++k) d[("D" + std::to_string(k)).c_str()] = melnikov_D(k, pair).str();
        return d;
      },
      py::arg("P"), py::arg("Q"), py::arg("interval"), py::arg("D") = 0);

  m.def(
      "moment",
      [](py::object P, py::object Q, py::object interval, int i, int D) {
        Interval iv = interval_arg(interval, D);
        return moment(poly_arg(P, D, "P"), poly_arg(Q, D, "Q"), iv, i).str();
      },
      py::arg("P"), py::arg("Q"), py::arg("interval"), py::arg("i"), py::arg("D") = 0, "m_i(P,Q) = int P^i dQ.");

  m.def(
      "cc_check",
      [](py::object P, py::object Q, py::object interval, int D) {
        Interval iv = interval_arg(interval, D);
        return witness(cc_check(poly_arg(P, D, "P"), poly_arg(Q, D, "Q"), iv));
      },
      py::arg("P"), py::arg("Q"), py::arg("interval"), py::arg("D") = 0,
      "Composition witness as a dict, or None.");

  m.def(
      "right_factors",
      [](py::object P, py::object interval, bool indecomposable, int D) {
        Interval iv = interval_arg(interval, D);
        Poly f = poly_arg(P, D, "P");
        FactorSet fs = indecomposable ? indecomposable_ab_factors(f, iv) : right_factors(f, iv);
        std::vector<std::vector<std::string>> out;
        for (const auto& W : fs.factors) out.push_back(coeffs(W));
        return out;
      },
      py::arg("P"), py::arg("interval"), py::arg("indecomposable") = false, py::arg("D") = 0);

  m.def(
      "structure_report",
      [](py::object P, py::object interval, int D) {
        Interval iv = interval_arg(interval, D);
        StructureReport r = structure_report(poly_arg(P, D, "P"), iv);
        py::dict d;
        d["s"] = r.s;
        d["tag"] = r.tag;
        d["pattern"] = r.pattern;
        d["definite"] = r.definite;
        return d;
      },
      py::arg("P"), py::arg("interval"), py::arg("D") = 0);

  m.def(
      "zspace",
      [](py::object P, py::object interval, int d, std::optional<int> imax, int D) {
        Interval iv = interval_arg(interval, D);
        std::vector<std::vector<std::string>> out;
        for (const auto& Q : zspace(poly_arg(P, D, "P"), iv, d, imax)) out.push_back(coeffs(Q));
        return out;
      },
      py::arg("P"), py::arg("interval"), py::arg("d"), py::arg("imax") = py::none(), py::arg("D") = 0);

  m.def("z_dim_formula", &z_dim_formula, py::arg("d"));
  m.def("z_dim_adjusted", &z_dim_adjusted, py::arg("d"));

  m.def(
      "trig_moment",
      [](py::object P, py::object Q, int i, int j, int D) {
        return trig_moment(trig_arg(P, D, "P"), trig_arg(Q, D, "Q"), i, j).coeff.str();
      },
      py::arg("P"), py::arg("Q"), py::arg("i"), py::arg("j"), py::arg("D") = 0,
      "Coefficient c of c*pi = int_0^{2pi} Q^i d(P^j).");

  m.def(
      "non_cc_certificate",
      [](py::object P, py::object Q, int imax, int jmax, int D) -> py::object {
        auto c = non_cc_certificate(trig_arg(P, D, "P"), trig_arg(Q, D, "Q"), imax, jmax);
        if (!c) return py::none();
        return py::make_tuple(c->i, c->j, c->value.coeff.str());
      },
      py::arg("P"), py::arg("Q"), py::arg("imax") = 6, py::arg("jmax") = 6, py::arg("D") = 0);

  m.def(
      "run_criterion",
      [](const std::string& id, std::uint64_t seed) {
        CriterionResult r;
        {
          py::gil_scoped_release release;
          r = run_criterion(id, seed);
        }
        py::dict d;
        d["id"] = r.id;
        d["title"] = r.title;
        d["passed"] = r.passed;
        d["detail"] = r.detail;
        return d;
      },
      py::arg("id"), py::arg("seed") = 7);
}
