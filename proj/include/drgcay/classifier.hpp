#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "drgcay/cayley.hpp"
#include "drgcay/families.hpp"
#include "drgcay/graph.hpp"
#include "drgcay/isomorphism.hpp"

namespace drgcay {

/// Constructed family graphs with their arrays and canonical labelings,
/// computed on first use. Safe to share between threads.
class FamilyCatalog {
 public:
  struct Entry {
    FamilyId id;
    Graph graph;
    std::optional<IntersectionArray> array;  // nullopt when not distance-regular
    CanonicalLabeling labeling;
    bool every_edge_in_k4 = false;
  };

  explicit FamilyCatalog(CanonOptions options = {}) : options_(options) {}

  std::shared_ptr<const Entry> get(const FamilyId& id);
  const CanonOptions& options() const { return options_; }

  /// Process-wide catalog with default options.
  static FamilyCatalog& shared();

 private:
  CanonOptions options_;
  std::mutex mutex_;
  std::map<FamilyId, std::shared_ptr<const Entry>> entries_;
};

/// Fixed label precedence: Hamming, Cycle, CompleteGraph, FoldedHypercube,
/// CompleteBipartite, K2,2,2, K6,6-6K2, Doob, Shrikhande; parameters break ties.
bool family_precedes(const FamilyId& a, const FamilyId& b);

/// Whether every edge of g lies in a clique of size 4.
bool every_edge_in_k4(const Graph& g);

struct ClassificationResult {
  explicit ClassificationResult(CayleySpec s) : spec(std::move(s)) {}

  CayleySpec spec;
  bool hypothesis_met = false;
  std::vector<int> special_s;  // codes, one per inverse pair
  DRGVerdict drg;
  std::optional<FamilyId> family;    // chosen label among the classification list
  std::vector<FamilyId> all_labels;  // every isomorphic family instance, by precedence
  std::optional<std::vector<int>> isomorphism;  // vertex code -> vertex of construct(*family)
  CanonicalCertificate certificate;

  bool is_drg() const { return is_distance_regular(drg); }
};

/// Builds Cay(G;S), decides distance-regularity and, for distance-regular
/// graphs satisfying the hypothesis, names the family by array shortlist and
/// canonical-form confirmation. Throws InvalidConnectionSet for bad specs.
ClassificationResult classify(const CayleySpec& spec, FamilyCatalog& catalog = FamilyCatalog::shared());

enum class LemmaStatus { Pass, Fail, Vacuous };

struct LemmaEntry {
  char id = 'a';
  std::string name;
  long long checked = 0;  // profiles on which the hypothesis held
  long long failed = 0;
  long long vacuous = 0;
  std::optional<std::string> first_counterexample;

  LemmaStatus status() const {
    if (failed > 0) return LemmaStatus::Fail;
    return checked > 0 ? LemmaStatus::Pass : LemmaStatus::Vacuous;
  }
};

struct LemmaReport {
  std::vector<LemmaEntry> entries;  // ids 'a' through 'k'

  LemmaReport();
  long long failures() const;
  const LemmaEntry& entry(char id) const;
  /// Adds counts; keeps the earlier counterexample.
  void merge(const LemmaReport& other);
};

std::string lemma_status_name(LemmaStatus s);

/// Evaluates checks (a)-(k) on every special-generator profile of the spec.
LemmaReport lemma_suite(const CayleySpec& spec, const CanonOptions& options = {});

}  // namespace drgcay
