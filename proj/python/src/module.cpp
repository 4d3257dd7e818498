#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skillmc/skillmc.hpp"

namespace py = pybind11;
using namespace skillmc;

namespace {

Formula as_formula(const py::object& f) {
  if (py::isinstance<py::str>(f)) return parse_formula(f.cast<std::string>());
  return f.cast<Formula>();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Model checker for epistemic logics with skill updates";

  auto error = py::register_exception<Error>(m, "Error");
  auto formula_error = py::register_exception<FormulaError>(m, "FormulaError", error.ptr());
  py::register_exception<SyntaxError>(m, "SyntaxError", formula_error.ptr());
  auto format_error = py::register_exception<FormatError>(m, "FormatError", error.ptr());
  py::register_exception<ConflictError>(m, "ConflictError", format_error.ptr());
  py::register_exception<UnknownWorldError>(m, "UnknownWorldError", format_error.ptr());
  py::register_exception<LimitError>(m, "LimitError", error.ptr());
  py::register_exception<CapExceededError>(m, "CapExceededError", error.ptr());

  py::class_<Formula>(m, "Formula")
      .def(py::init([](const std::string& text) { return parse_formula(text); }),
           py::arg("text"))
      .def("__str__", [](const Formula& f) { return render_formula(f); })
      .def("__repr__",
           [](const Formula& f) { return "Formula('" + render_formula(f) + "')"; })
      .def(py::self == py::self)
      .def("__hash__", &Formula::hash)
      .def("__len__", [](const Formula& f) { return formula_length(f); })
      .def_property_readonly("agents", [](const Formula& f) { return agents_of(f); })
      .def_property_readonly("skills", [](const Formula& f) { return skills_of(f); })
      .def_property_readonly("atoms", [](const Formula& f) { return atoms_of(f); })
      .def_property_readonly("fragment",
                             [](const Formula& f) { return fragment_name(fragment_of(f)); });

  py::class_<Model>(m, "Model")
      .def(py::init<std::vector<WorldId>>(), py::arg("worlds"))
      .def("set_edge", &Model::set_edge, py::arg("w"), py::arg("u"), py::arg("skills"),
           py::return_value_policy::reference_internal)
      .def("set_valuation", &Model::set_valuation, py::arg("w"), py::arg("atoms"),
           py::return_value_policy::reference_internal)
      .def("set_capability", &Model::set_capability, py::arg("agent"), py::arg("skills"),
           py::return_value_policy::reference_internal)
      .def_property_readonly("worlds", &Model::worlds)
      .def("edge_skills", &Model::edge_skills, py::arg("w"), py::arg("u"))
      .def("capability", &Model::capability, py::arg("agent"))
      .def_property_readonly("capabilities", &Model::capabilities)
      .def("valuation", &Model::valuation, py::arg("w"))
      .def_property_readonly("edges", &Model::edges)
      .def("add_skills",
           [](const Model& md, const AgentId& a, SkillSet s) {
             return apply_update(md, AddUpdate{a, std::move(s)});
           })
      .def("remove_skills",
           [](const Model& md, const AgentId& a, SkillSet s) {
             return apply_update(md, RemoveUpdate{a, std::move(s)});
           })
      .def("assign_skills",
           [](const Model& md, const AgentId& a, SkillSet s) {
             return apply_update(md, AssignUpdate{a, std::move(s)});
           })
      .def("copy_skills",
           [](const Model& md, const AgentId& learner, const AgentId& source) {
             return apply_update(md, CopyUpdate{learner, source});
           })
      .def("to_json", [](const Model& md) { return save_model(md); })
      .def(py::self == py::self);

  m.def("parse_formula", &parse_formula, py::arg("text"));
  m.def("render_formula", &render_formula, py::arg("formula"));
  m.def("formula_length", [](const py::object& f) { return formula_length(as_formula(f)); },
        py::arg("formula"));
  m.def("fragment", [](const py::object& f) { return fragment_name(fragment_of(as_formula(f))); },
        py::arg("formula"));

  m.def("load_model", [](const std::string& text) { return load_model(text); }, py::arg("text"));
  m.def("load_model_file", &load_model_file, py::arg("path"));
  m.def("save_model", &save_model, py::arg("model"));
  m.def("demo_model", &demo_model);

  m.def(
      "truth_set",
      [](const Model& md, const py::object& f, std::size_t fresh_skills) {
        EvalOptions opts;
        opts.fresh_skills = fresh_skills;
        return truth_set(md, as_formula(f), opts);
      },
      py::arg("model"), py::arg("formula"), py::arg("fresh_skills") = 1);
  m.def(
      "holds",
      [](const Model& md, const WorldId& w, const py::object& f) {
        return holds(md, w, as_formula(f));
      },
      py::arg("model"), py::arg("world"), py::arg("formula"));
  m.def(
      "common_oracle",
      [](const Model& md, const Group& g, const py::object& f) {
        return common_oracle(md, g, as_formula(f));
      },
      py::arg("model"), py::arg("group"), py::arg("formula"));
  m.def(
      "de_dicto",
      [](const Model& md, const WorldId& w, const AgentId& a, const py::object& f,
         bool include_empty) { return de_dicto(md, w, a, as_formula(f), include_empty); },
      py::arg("model"), py::arg("world"), py::arg("agent"), py::arg("formula"),
      py::arg("include_empty") = true);
  m.def(
      "explicit_de_re",
      [](const Model& md, const WorldId& w, const AgentId& a, const py::object& f,
         bool include_empty) { return explicit_de_re(md, w, a, as_formula(f), include_empty); },
      py::arg("model"), py::arg("world"), py::arg("agent"), py::arg("formula"),
      py::arg("include_empty") = true);
  m.def(
      "implicit_de_re",
      [](const Model& md, const WorldId& w, const AgentId& a, const py::object& f,
         bool include_empty) { return implicit_de_re(md, w, a, as_formula(f), include_empty); },
      py::arg("model"), py::arg("world"), py::arg("agent"), py::arg("formula"),
      py::arg("include_empty") = true);

  py::class_<RootedGraph>(m, "RootedGraph")
      .def(py::init<std::vector<NodeId>, const std::vector<std::pair<NodeId, NodeId>>&,
                    NodeId>(),
           py::arg("nodes"), py::arg("edges"), py::arg("root"))
      .def_property_readonly("nodes", &RootedGraph::nodes)
      .def_property_readonly("root", &RootedGraph::root)
      .def_property_readonly("edges", [](const RootedGraph& g) {
        std::vector<std::pair<NodeId, NodeId>> out;
        for (const auto& [i, j] : g.edges()) out.emplace_back(g.nodes()[i], g.nodes()[j]);
        return out;
      });

  m.def("load_graph", [](const std::string& text) { return load_graph(text); }, py::arg("text"));
  m.def("ueg_winner", [](const RootedGraph& g) { return to_string(ueg_winner(g)); },
        py::arg("graph"));
  m.def(
      "induced_model",
      [](const RootedGraph& g, const std::string& v) { return induced_model(g, parse_variant(v)); },
      py::arg("graph"), py::arg("variant") = "plus");
  m.def(
      "induced_formula",
      [](const RootedGraph& g, const std::string& v) {
        return induced_formula(g, parse_variant(v));
      },
      py::arg("graph"), py::arg("variant") = "plus");
  m.def(
      "reduction_check",
      [](const RootedGraph& g, const std::string& v, std::size_t max_edges) {
        ReductionResult r = reduction_check(g, parse_variant(v), max_edges);
        py::dict out;
        out["game"] = to_string(r.game);
        out["logic"] = r.logic;
        out["agree"] = r.agree;
        return out;
      },
      py::arg("graph"), py::arg("variant") = "plus", py::arg("max_edges") = kDefaultMaxEdges);
}
