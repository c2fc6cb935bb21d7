/**
 * @file  module.cpp
 * @brief Python bindings: model construction, (n+S)-products, singular OPE
 *        tables, mode brackets, verification suites, and central charges.
 *
 * States cross the boundary as rendered strings or as [(monomial, scalar)]
 * pairs; all arithmetic stays exact on the C++ side.
 */
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "logva/core.hpp"
#include "logva/models.hpp"
#include "logva/verify.hpp"

namespace py = pybind11;
using namespace logva;

namespace {

State parse_state(const Model& M, const std::string& s) {
  if (s == "vac" || s == "|0>") return M.vacuum;
  if (const auto* g = M.find_generator(s)) return g->state;
  throw std::invalid_argument("unknown state '" + s + "' in model " + M.name);
}

py::list state_pairs(const Model& M, const State& s) {
  py::list out;
  for (const auto& [m, c] : s.terms())
    out.append(py::make_tuple(M.render_mono(m), c.str()));
  return out;
}

class PyModel {
 public:
  explicit PyModel(const std::string& spec) : m_(parse_model(spec)) {}

  std::string name() const { return m_.name; }

  std::vector<std::string> generators() const {
    std::vector<std::string> out;
    for (const auto& g : m_.generators) out.push_back(g.name);
    return out;
  }

  std::string central_charge() const { return extract_central_charge(m_).str(); }

  std::string n_prod(const std::string& a, const std::string& b, Int n) const {
    return m_.render(n_product(m_, parse_state(m_, a), parse_state(m_, b), n));
  }

  std::string ope(const std::string& a, const std::string& b) const {
    return render_ope(m_, singular_ope(m_, parse_state(m_, a), parse_state(m_, b)),
                      /*human=*/true);
  }

  py::list ope_table(const std::string& a, const std::string& b) const {
    py::list out;
    for (const auto& [in, s] :
         singular_ope(m_, parse_state(m_, a), parse_state(m_, b)))
      out.append(py::make_tuple(in.first, in.second, state_pairs(m_, s)));
    return out;
  }

  py::dict check(const std::string& suite, int depth) const {
    VerifyOptions opt;
    opt.depth = Rat(depth);
    CheckReport r = run_suite(m_, suite, opt);
    py::dict out;
    out["suite"] = suite;
    out["pass"] = r.pass;
    out["fail"] = r.fail;
    out["skipped"] = r.skipped;
    out["ok"] = r.ok();
    py::list failures;
    for (const auto& c : r.cases)
      if (c.status != "pass")
        failures.append(py::make_tuple(c.id, c.inputs, c.status));
    out["failures"] = failures;
    return out;
  }

  py::dict bracket(const std::string& a, Int m, const std::string& b, Int k,
                   const std::string& v) const {
    if (!m_.gl_mode_act)
      throw std::invalid_argument("bracket requires the gl model");
    static const char* tn[4] = {"L", "l", "xi", "xibar"};
    int ta = -1, tb = -1;
    for (int t = 0; t < 4; ++t) {
      if (a == tn[t]) ta = t;
      if (b == tn[t]) tb = t;
    }
    if (ta < 0 || tb < 0)
      throw std::invalid_argument("generators must be from {L, l, xi, xibar}");
    State vs = parse_state(m_, v);
    State ab = m_.gl_mode_act(ta, m, m_.gl_mode_act(tb, k, vs));
    State ba = m_.gl_mode_act(tb, k, m_.gl_mode_act(ta, m, vs));
    State direct = (ta >= 2 && tb >= 2) ? ab + ba : ab - ba;
    State tmpl = gl_template_bracket(m_, ta, m, tb, k, vs);
    State bor = gl_borcherds_bracket(m_, m_.find_generator(a)->state, m + 1,
                                     m_.find_generator(b)->state, k + 1, vs);
    py::dict out;
    out["direct"] = m_.render(direct);
    out["template"] = m_.render(tmpl);
    out["borcherds"] = m_.render(bor);
    out["agree"] = (direct == tmpl) && (direct == bor);
    return out;
  }

 private:
  Model m_;
};

}  // namespace

PYBIND11_MODULE(_logva, mod) {
  mod.doc() = "exact calculator for logarithmic vertex algebras";

  py::class_<PyModel>(mod, "Model")
      .def(py::init<const std::string&>(), py::arg("spec"),
           "Model spec: sf | fb:<rank or gram> | lat:<gram> | gl[:beta=p/q] | "
           "tensor(<spec>,<spec>)")
      .def_property_readonly("name", &PyModel::name)
      .def("generators", &PyModel::generators)
      .def("central_charge", &PyModel::central_charge)
      .def("n_product", &PyModel::n_prod, py::arg("a"), py::arg("b"), py::arg("n"))
      .def("ope", &PyModel::ope, py::arg("a"), py::arg("b"))
      .def("ope_table", &PyModel::ope_table, py::arg("a"), py::arg("b"))
      .def("check", &PyModel::check, py::arg("suite") = "all", py::arg("depth") = 3)
      .def("bracket", &PyModel::bracket, py::arg("a"), py::arg("m"), py::arg("b"),
           py::arg("k"), py::arg("v") = "vac");

  mod.def("suites", [] { return suite_names(); });
}
