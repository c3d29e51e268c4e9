#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "mvdelta/carriers.hpp"
#include "mvdelta/corpus.hpp"
#include "mvdelta/decide.hpp"
#include "mvdelta/gamma_xi.hpp"
#include "mvdelta/ideals.hpp"
#include "mvdelta/plfunc.hpp"
#include "mvdelta/spectrum.hpp"
#include "mvdelta/term.hpp"

#ifdef MVDELTA_HAVE_CLI
#include "cli.hpp"
#endif

namespace py = pybind11;
using namespace mvdelta;

namespace {

std::map<std::string, std::string> assignment_strings(const std::map<std::string, Q01>& a) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : a) out.emplace(k, v.to_string());
  return out;
}

py::dict decide_py(const std::string& text, std::size_t budget) {
  const Equation eq = parse_equation(text);
  const Verdict v = decide(eq, budget);
  py::dict d;
  d["equation"] = print_equation(eq);
  if (std::holds_alternative<Valid>(v)) {
    d["verdict"] = "valid";
  } else if (const auto* c = std::get_if<Counterexample>(&v)) {
    d["verdict"] = "counterexample";
    d["assign"] = assignment_strings(c->assign);
    d["lhs"] = c->lhs.to_string();
    d["rhs"] = c->rhs.to_string();
  } else {
    const auto& l = std::get<LimitExceeded>(v);
    d["verdict"] = "limit_exceeded";
    d["required"] = l.required;
    d["budget"] = l.budget;
  }
  return d;
}

Assignment parse_assignment(const Carrier& carrier, const std::map<std::string, std::string>& assign) {
  Assignment a;
  for (const auto& [k, v] : assign) a.emplace(k, carrier.parse_element(v));
  return a;
}

std::string evaluate_py(const std::string& term, const std::string& carrier_spec,
                        const std::map<std::string, std::string>& assign) {
  const CarrierPtr c = parse_carrier_spec(carrier_spec);
  return c->format(evaluate(parse_term(term), parse_assignment(*c, assign), *c));
}

bool holds_py(const std::string& equation, const std::string& carrier_spec,
              const std::map<std::string, std::string>& assign) {
  const CarrierPtr c = parse_carrier_spec(carrier_spec);
  const Equation eq = parse_equation(equation);
  const Assignment a = parse_assignment(*c, assign);
  const Value l = evaluate(eq.lhs, a, *c);
  const Value r = evaluate(eq.rhs, a, *c);
  return eq.rel == Relation::kEq ? c->equal(l, r) : c->leq(l, r);
}

py::dict spectrum_py(const std::string& spec) {
  const FiniteAlgebra a(parse_carrier_spec(spec));
  const SpectrumResult r = spectrum(a);
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < a.size(); ++i) elements.push_back(a.carrier()->format(a.element(i)));
  std::vector<std::vector<std::string>> homs;
  for (const auto& h : r.homs) {
    std::vector<std::string> t;
    for (const auto& q : h.table) t.push_back(q.to_string());
    homs.push_back(std::move(t));
  }
  py::dict d;
  d["elements"] = elements;
  d["maximal_ideals"] = r.ideals;
  d["homs"] = homs;
  d["closed_sets"] = r.closed_sets;
  d["kernels_match"] = r.kernels_match;
  d["basis_generates"] = r.basis_generates;
  d["discrete"] = r.discrete;
  return d;
}

py::dict gamma_xi_py(const std::string& spec) {
  const GammaXiReport r = gamma_of_xi(FiniteAlgebra(parse_carrier_spec(spec)));
  py::dict d;
  d["algebra_size"] = r.algebra_size;
  d["interval_size"] = r.interval_size;
  d["bijective"] = r.bijective;
  d["preserves_oplus"] = r.preserves_oplus;
  d["preserves_neg"] = r.preserves_neg;
  d["elements"] = r.elements;
  return d;
}

py::dict radical_py(const std::string& spec) {
  const RadicalReport r = radical_of(parse_carrier_spec(spec));
  py::dict d;
  d["carrier"] = r.carrier;
  d["description"] = r.description;
  d["semisimple"] = r.semisimple;
  if (r.members) {
    const CarrierPtr c = parse_carrier_spec(spec);
    std::vector<std::string> m;
    for (const auto& v : *r.members) m.push_back(c->format(v));
    d["members"] = m;
  } else {
    d["members"] = py::none();
  }
  return d;
}

std::vector<std::tuple<std::string, std::string, std::string>> corpus_py() {
  std::vector<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& ne : identity_corpus()) out.emplace_back(ne.item, ne.name, print_equation(ne.eq));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact MV-algebra and series-algebra toolkit";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CarrierError>(m, "CarrierError", PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<DeltaUnsupported>(m, "DeltaUnsupported", PyExc_ValueError);

  m.def("decide", &decide_py, py::arg("equation"), py::arg("budget") = kDefaultPieceBudget);
  m.def("evaluate", &evaluate_py, py::arg("term"), py::arg("carrier") = "unit",
        py::arg("assign") = std::map<std::string, std::string>{});
  m.def("holds", &holds_py, py::arg("equation"), py::arg("carrier") = "unit",
        py::arg("assign") = std::map<std::string, std::string>{});
  m.def("spectrum", &spectrum_py, py::arg("algebra"));
  m.def("gamma_xi", &gamma_xi_py, py::arg("algebra"));
  m.def("radical", &radical_py, py::arg("carrier"));
  m.def("identity_corpus", &corpus_py);
  m.def(
      "xi_chain_iso",
      [](unsigned n, unsigned bound) {
        const ChainIsoReport r = xi_chain_iso(n, bound);
        py::dict d;
        d["count"] = r.count;
        d["injective"] = r.injective;
        d["surjective"] = r.surjective;
        d["additive"] = r.additive;
        d["order_preserving"] = r.order_preserving;
        d["unit_to_n"] = r.unit_to_n;
        return d;
      },
      py::arg("n"), py::arg("bound"));

  py::class_<PLFunc>(m, "PLFunc")
      .def(py::init<>())
      .def_static("constant", [](const std::string& c) { return PLFunc::constant(Q01::parse(c)); })
      .def_static("identity", &PLFunc::identity)
      .def_static("from_json", [](const std::string& s) { return plfunc_from_json(s); })
      .def_static("from_points",
                  [](const std::vector<std::pair<std::string, std::string>>& pts) {
                    std::vector<Breakpoint> b;
                    for (const auto& [x, y] : pts) b.push_back({Rat::parse(x), Rat::parse(y)});
                    return PLFunc::from_points(std::move(b));
                  })
      .def("to_json", [](const PLFunc& f) { return plfunc_to_json(f); })
      .def("points",
           [](const PLFunc& f) {
             std::vector<std::pair<std::string, std::string>> out;
             for (const auto& p : f.points()) out.emplace_back(p.x.to_string(), p.y.to_string());
             return out;
           })
      .def("at", [](const PLFunc& f, const std::string& x) { return f.at(Q01::parse(x)).to_string(); })
      .def("max_value", [](const PLFunc& f) { return f.max_value().to_string(); })
      .def("is_zero", &PLFunc::is_zero)
      .def("oplus", &pl_oplus)
      .def("neg", &pl_neg)
      .def("op", [](const PLFunc& f, const std::string& name, const PLFunc& g) { return pl_op(parse_pl_op(name), f, g); })
      .def("halfn", [](const PLFunc& f, unsigned n) { return pl_halfn(n, f); })
      .def("leq", &pl_leq)
      .def("precompose", &pl_precompose)
      .def("__eq__", [](const PLFunc& f, const PLFunc& g) { return f == g; })
      .def("__repr__", [](const PLFunc& f) { return "PLFunc(" + f.to_string() + ")"; });

  m.def("pl_delta", [](const std::vector<PLFunc>& prefix, const PLFunc& tail) { return pl_delta(prefix, tail); },
        py::arg("prefix"), py::arg("tail"));
  m.def(
      "uniform_dist", [](const PLFunc& f, const PLFunc& g) { return uniform_dist(f, g).to_string(); });

#ifdef MVDELTA_HAVE_CLI
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return std::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
#endif
}
