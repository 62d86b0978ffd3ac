#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "drgcay/cayley.hpp"
#include "drgcay/classifier.hpp"
#include "drgcay/group.hpp"

namespace drgcay {

/// Specs with at least one special generator, sorted by code vector.
/// Built from (subgroup H, spanning S0 of H, generator s outside H).
std::vector<CayleySpec> enumerate_specs(const AbelianGroup& g);

/// Same set by filtering every inverse-closed subset; exponential, for cross-checks.
std::vector<CayleySpec> naive_enumerate_specs(const AbelianGroup& g);

/// Every subgroup of g, sorted by (order, elements).
std::vector<Subgroup> all_subgroups(const AbelianGroup& g);

enum class Dedup { None, ByCertificate };

struct SurveyConfig {
  int max_order = 24;
  int min_order = 2;
  int min_valency = 1;
  Dedup dedup = Dedup::None;
  int workers = 1;  // 0 = hardware concurrency
  int naive_crosscheck_max_order = 12;
  bool lemmas = false;
  CanonOptions canon;
};

struct SurveyRecord {
  CayleySpec spec;
  std::optional<ClassificationResult> result;
  std::optional<std::string> error;  // resource cap or other per-instance failure
  std::optional<LemmaReport> lemmas;
};

struct OrderSummary {
  int order = 0;
  std::string group;
  long long instances = 0;
  long long drg_instances = 0;
  std::map<std::string, long long> families;  // label -> instance count
};

struct CrossCheck {
  std::string group;
  std::size_t structural = 0;
  std::size_t naive = 0;
  bool equal = false;
};

struct SurveyReport {
  SurveyConfig config;
  std::vector<SurveyRecord> records;
  std::vector<OrderSummary> summary;  // one row per group
  std::vector<std::string> distinct_drg_certificates;  // hex, in record order
  std::vector<CrossCheck> crosschecks;
  LemmaReport lemmas;
  std::vector<std::string> violations;
  bool theorem_holds = false;
  double seconds = 0;

  long long instance_count() const { return static_cast<long long>(records.size()); }
  long long drg_count() const;
  std::map<std::string, long long> family_counts() const;
};

/// Deterministic regardless of worker count.
SurveyReport run_survey(const SurveyConfig& config);

/// One JSON object per line; with Dedup::ByCertificate only the first record
/// of each certificate is written.
void write_jsonl(std::ostream& out, const SurveyReport& report);
void write_summary_csv(std::ostream& out, const SurveyReport& report);

}  // namespace drgcay
