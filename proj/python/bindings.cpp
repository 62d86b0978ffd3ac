#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "drgcay/classifier.hpp"
#include "drgcay/errors.hpp"
#include "drgcay/families.hpp"
#include "drgcay/isomorphism.hpp"
#include "drgcay/records.hpp"
#include "drgcay/survey.hpp"

namespace py = pybind11;
using namespace drgcay;

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// JSON crosses the boundary as text; the Python side parses it.
std::string dump(const Json& j) { return j.dump(); }

Graph graph_from(int n, const EdgeList& edges) { return Graph(n, edges); }

py::tuple graph_tuple(const Graph& g) { return py::make_tuple(g.vertex_count(), g.edges()); }

Json set_json(const CayleySpec& spec) {
  Json set = Json::array();
  for (int c : spec.codes()) set.push_back(spec.group().code_to_string(c));
  return set;
}

std::string check(const std::string& group, const std::string& set) {
  const auto spec = parse_spec(group, set);
  Json j;
  j["schema"] = kSchemaVersion;
  j["group"] = spec.group().to_string();
  j["set"] = set_json(spec);
  const Graph g = build_cayley(spec);
  py::gil_scoped_release release;
  j.update(verdict_to_json(g, intersection_array(g), &spec.group()));
  return dump(j);
}

std::string classify_spec(const std::string& group, const std::string& set, std::uint64_t node_budget) {
  const auto spec = parse_spec(group, set);
  py::gil_scoped_release release;
  FamilyCatalog catalog(CanonOptions{node_budget});
  return dump(classification_to_json(classify(spec, catalog)));
}

std::string lemmas(const std::string& group, const std::string& set) {
  const auto spec = parse_spec(group, set);
  py::gil_scoped_release release;
  const auto rep = lemma_suite(spec);
  Json j;
  j["schema"] = kSchemaVersion;
  j["failures"] = rep.failures();
  j["lemmas"] = lemma_report_to_json(rep);
  return dump(j);
}

std::string cayley_spec(const std::string& family, const std::string& params) {
  const auto id = parse_family(family, params);
  const auto spec = cayley_spec_for(id);
  Json j;
  j["schema"] = kSchemaVersion;
  j["family"] = id.label();
  j["group"] = spec.group().to_string();
  j["set"] = set_json(spec);
  Json special = Json::array();
  for (const auto& p : special_generators(spec)) special.push_back(spec.group().code_to_string(p.s));
  j["special_s"] = special;
  return dump(j);
}

std::string array_of(int n, const EdgeList& edges) {
  const Graph g = graph_from(n, edges);
  py::gil_scoped_release release;
  return dump(verdict_to_json(g, intersection_array(g)));
}

py::tuple isomorphic(int n1, const EdgeList& e1, int n2, const EdgeList& e2) {
  const Graph g1 = graph_from(n1, e1), g2 = graph_from(n2, e2);
  IsomorphismResult r;
  {
    py::gil_scoped_release release;
    r = are_isomorphic(g1, g2);
  }
  if (!r.isomorphic) return py::make_tuple(false, py::none());
  return py::make_tuple(true, *r.mapping);
}

std::string certificate(int n, const EdgeList& edges) {
  const Graph g = graph_from(n, edges);
  py::gil_scoped_release release;
  return canonical_form(g).hex();
}

SurveyConfig config(int max_order, int min_order, int min_valency, int workers, const std::string& dedup, bool with_lemmas) {
  SurveyConfig c;
  c.max_order = max_order;
  c.min_order = min_order;
  c.min_valency = min_valency;
  c.workers = workers;
  c.lemmas = with_lemmas;
  if (dedup == "by-certificate") c.dedup = Dedup::ByCertificate;
  else if (dedup != "none") throw BadParameters("dedup must be 'none' or 'by-certificate'");
  return c;
}

py::tuple survey(int max_order, int min_order, int min_valency, int workers, const std::string& dedup, bool with_lemmas) {
  const auto c = config(max_order, min_order, min_valency, workers, dedup, with_lemmas);
  std::string summary, lines;
  {
    py::gil_scoped_release release;
    const auto rep = run_survey(c);
    std::ostringstream out;
    write_jsonl(out, rep);
    summary = dump(survey_summary_to_json(rep));
    lines = out.str();
  }
  return py::make_tuple(summary, lines);
}

std::vector<std::string> groups_of_order(int n) {
  std::vector<std::string> out;
  for (const auto& g : enumerate_groups(n)) out.push_back(g.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_drgcay, m) {
  m.doc() = "Distance-regular Cayley graphs on abelian groups";

  py::register_exception<ResourceCap>(m, "ResourceCap", PyExc_RuntimeError);
  py::register_exception<DisconnectedGraph>(m, "DisconnectedGraph", PyExc_ValueError);

  m.def("check", &check, py::arg("group"), py::arg("set"));
  m.def("classify", &classify_spec, py::arg("group"), py::arg("set"),
        py::arg("node_budget") = CanonOptions{}.node_budget);
  m.def("lemmas", &lemmas, py::arg("group"), py::arg("set"));
  m.def("construct", [](const std::string& family, const std::string& params) {
    return graph_tuple(construct(parse_family(family, params)));
  }, py::arg("family"), py::arg("params") = "");
  m.def("cayley_spec", &cayley_spec, py::arg("family"), py::arg("params") = "");
  m.def("intersection_array", &array_of, py::arg("n"), py::arg("edges"));
  m.def("are_isomorphic", &isomorphic, py::arg("n1"), py::arg("edges1"), py::arg("n2"), py::arg("edges2"));
  m.def("canonical_certificate", &certificate, py::arg("n"), py::arg("edges"));
  m.def("survey", &survey, py::arg("max_order"), py::arg("min_order") = 2, py::arg("min_valency") = 1,
        py::arg("workers") = 1, py::arg("dedup") = "none", py::arg("lemmas") = false);
  m.def("enumerate_groups", &groups_of_order, py::arg("n"));
  m.def("family_names", &family_names);
}
