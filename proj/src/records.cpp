#include "drgcay/records.hpp"

namespace drgcay {

Json array_to_json(const IntersectionArray& arr) { return Json::array({arr.b, arr.c}); }

Json witness_to_json(const RegularityWitness& w, const AbelianGroup* group) {
  auto vertex = [&](int v) -> Json {
    if (group) return group->code_to_string(v);
    return v;
  };
  Json j;
  j["distance"] = w.distance;
  j["x"] = vertex(w.x);
  j["y"] = vertex(w.y);
  j["x_other"] = vertex(w.x_other);
  j["y_other"] = vertex(w.y_other);
  j["quantity"] = std::string(1, w.quantity);
  j["value"] = w.value;
  j["value_other"] = w.value_other;
  return j;
}

Json classification_to_json(const ClassificationResult& r) {
  const auto& g = r.spec.group();
  Json j;
  j["schema"] = kSchemaVersion;
  j["group"] = g.to_string();
  Json set = Json::array();
  for (int c : r.spec.codes()) set.push_back(g.code_to_string(c));
  j["set"] = std::move(set);
  j["hypothesis_met"] = r.hypothesis_met;
  Json special = Json::array();
  for (int c : r.special_s) special.push_back(g.code_to_string(c));
  j["special_s"] = std::move(special);
  j["drg"] = r.is_drg();
  if (const auto* arr = std::get_if<IntersectionArray>(&r.drg)) {
    j["array"] = array_to_json(*arr);
    j["witness"] = nullptr;
  } else {
    j["array"] = nullptr;
    j["witness"] = witness_to_json(std::get<RegularityWitness>(r.drg), &g);
  }
  j["family"] = r.family ? Json(r.family->label()) : Json(nullptr);
  Json labels = Json::array();
  for (const auto& id : r.all_labels) labels.push_back(id.label());
  j["all_labels"] = std::move(labels);
  j["certificate"] = r.certificate.hex();
  return j;
}

Json lemma_report_to_json(const LemmaReport& report) {
  Json out = Json::array();
  for (const auto& e : report.entries) {
    Json j;
    j["id"] = std::string(1, e.id);
    j["name"] = e.name;
    j["status"] = lemma_status_name(e.status());
    j["checked"] = e.checked;
    j["failed"] = e.failed;
    j["vacuous"] = e.vacuous;
    j["first_counterexample"] = e.first_counterexample ? Json(*e.first_counterexample) : Json(nullptr);
    out.push_back(std::move(j));
  }
  return out;
}

Json verdict_to_json(const Graph& g, const DRGVerdict& verdict, const AbelianGroup* group) {
  Json j;
  j["vertices"] = g.vertex_count();
  j["edges_count"] = g.edge_count();
  j["drg"] = is_distance_regular(verdict);
  if (const auto* arr = std::get_if<IntersectionArray>(&verdict)) {
    j["array"] = array_to_json(*arr);
    j["witness"] = nullptr;
    j["three_term_recurrence"] = verify_three_term_recurrence(g, *arr);
  } else {
    j["array"] = nullptr;
    j["witness"] = witness_to_json(std::get<RegularityWitness>(verdict), group);
  }
  return j;
}

Json survey_summary_to_json(const SurveyReport& rep) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["min_order"] = rep.config.min_order;
  j["max_order"] = rep.config.max_order;
  j["theorem_holds"] = rep.theorem_holds;
  j["instances"] = rep.instance_count();
  j["drg_instances"] = rep.drg_count();
  j["distinct_drg_graphs"] = rep.distinct_drg_certificates.size();
  Json fam = Json::object();
  for (const auto& [label, count] : rep.family_counts()) fam[label] = count;
  j["families"] = fam;
  Json cc = Json::array();
  for (const auto& x : rep.crosschecks)
    cc.push_back({{"group", x.group}, {"structural", x.structural}, {"naive", x.naive}, {"equal", x.equal}});
  j["crosscheck"] = cc;
  j["violations"] = rep.violations;
  if (rep.config.lemmas) j["lemmas"] = lemma_report_to_json(rep.lemmas);
  j["seconds"] = rep.seconds;
  return j;
}

}  // namespace drgcay
