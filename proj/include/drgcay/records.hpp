#pragma once

#include <json.hpp>

#include "drgcay/classifier.hpp"
#include "drgcay/graph.hpp"
#include "drgcay/survey.hpp"

namespace drgcay {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json array_to_json(const IntersectionArray& arr);
Json witness_to_json(const RegularityWitness& w, const AbelianGroup* group = nullptr);
/// {schema, group, set, hypothesis_met, special_s, drg, array, witness, family, all_labels, certificate}
Json classification_to_json(const ClassificationResult& r);
Json lemma_report_to_json(const LemmaReport& report);
/// {vertices, edges_count, drg, array, witness, three_term_recurrence}
Json verdict_to_json(const Graph& g, const DRGVerdict& verdict, const AbelianGroup* group = nullptr);
/// Totals, family counts, enumeration cross-checks and violations of a survey run.
Json survey_summary_to_json(const SurveyReport& report);

}  // namespace drgcay
