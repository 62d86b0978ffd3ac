#include "drgcay/survey.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

#include "drgcay/errors.hpp"
#include "drgcay/records.hpp"

namespace drgcay {

std::vector<Subgroup> all_subgroups(const AbelianGroup& g) {
  std::vector<Subgroup> out;
  std::set<std::vector<int>> seen;
  const int zero = 0;
  out.push_back(span_codes(g, std::span<const int>(&zero, 0)));
  seen.insert(out.front().elements());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (int x = 1; x < g.order(); ++x) {
      if (out[i].contains(x)) continue;
      auto gens = out[i].generators();
      gens.push_back(x);
      Subgroup k = span_codes(g, gens);
      if (seen.insert(k.elements()).second) out.push_back(std::move(k));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

namespace {

// Representatives r <= -r of the inverse pairs among `codes` (identity skipped).
std::vector<int> pair_representatives(const AbelianGroup& g, const std::vector<int>& codes) {
  std::vector<int> reps;
  for (int c : codes)
    if (c != 0 && c <= g.neg_code(c)) reps.push_back(c);
  return reps;
}

void add_pair(const AbelianGroup& g, std::vector<int>& set, int r) {
  set.push_back(r);
  if (g.neg_code(r) != r) set.push_back(g.neg_code(r));
}

std::vector<CayleySpec> to_specs(const AbelianGroup& g, const std::set<std::vector<int>>& sets) {
  std::vector<CayleySpec> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(CayleySpec::from_codes(g, s));
  return out;
}

}  // namespace

std::vector<CayleySpec> enumerate_specs(const AbelianGroup& g) {
  std::set<std::vector<int>> found;
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) all[static_cast<std::size_t>(i)] = i;
  const auto outside_reps = pair_representatives(g, all);
  for (const auto& h : all_subgroups(g)) {
    if (h.is_whole_group()) continue;
    std::vector<int> completing;
    for (int s : outside_reps) {
      if (h.contains(s)) continue;
      auto gens = h.generators();
      gens.push_back(s);
      if (span_codes(g, gens).is_whole_group()) completing.push_back(s);
    }
    if (completing.empty()) continue;
    const auto inner = pair_representatives(g, h.elements());
    const std::size_t k = inner.size();
    if (k >= 31) throw ResourceCap("subgroup too large to enumerate connection sets");
    std::vector<int> s0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
      s0.clear();
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (std::uint32_t{1} << b)) add_pair(g, s0, inner[b]);
      if (span_codes(g, s0).order() != h.order()) continue;
      for (int s : completing) {
        auto set = s0;
        add_pair(g, set, s);
        std::sort(set.begin(), set.end());
        found.insert(std::move(set));
      }
    }
  }
  return to_specs(g, found);
}

std::vector<CayleySpec> naive_enumerate_specs(const AbelianGroup& g) {
  std::vector<int> all(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) all[static_cast<std::size_t>(i)] = i;
  const auto reps = pair_representatives(g, all);
  if (reps.size() >= 31) throw ResourceCap("group too large for naive enumeration");
  std::set<std::vector<int>> found;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << reps.size()); ++mask) {
    std::vector<int> set;
    for (std::size_t b = 0; b < reps.size(); ++b)
      if (mask & (std::uint32_t{1} << b)) add_pair(g, set, reps[b]);
    auto spec = CayleySpec::from_codes(g, set);
    if (!validate_spec(spec).ok() || special_generators(spec).empty()) continue;
    found.insert(spec.codes());
  }
  return to_specs(g, found);
}

long long SurveyReport::drg_count() const {
  return std::count_if(records.begin(), records.end(), [](const SurveyRecord& r) { return r.result && r.result->is_drg(); });
}

std::map<std::string, long long> SurveyReport::family_counts() const {
  std::map<std::string, long long> out;
  for (const auto& row : summary)
    for (const auto& [label, count] : row.families) out[label] += count;
  return out;
}

namespace {

void process(SurveyRecord& rec, FamilyCatalog& catalog, const SurveyConfig& config) {
  try {
    rec.result = classify(rec.spec, catalog);
    if (config.lemmas) rec.lemmas = lemma_suite(rec.spec, config.canon);
  } catch (const ResourceCap& e) {
    rec.error = std::string("resource cap: ") + e.what();
  }
}

}  // namespace

SurveyReport run_survey(const SurveyConfig& config) {
  if (config.max_order < 2) throw BadParameters("max_order must be at least 2");
  const auto start = std::chrono::steady_clock::now();
  SurveyReport report;
  report.config = config;

  for (int n = std::max(2, config.min_order); n <= config.max_order; ++n) {
    for (const auto& g : enumerate_groups(n)) {
      auto specs = enumerate_specs(g);
      for (const auto& spec : specs)
        if (!validate_spec(spec).ok() || special_generators(spec).empty())
          throw std::logic_error("enumerator emitted an inadmissible spec in " + g.to_string());
      if (n <= config.naive_crosscheck_max_order) {
        const auto naive = naive_enumerate_specs(g);
        CrossCheck cc{g.to_string(), specs.size(), naive.size(), naive == specs};
        if (!cc.equal) report.violations.push_back("structural and naive enumeration differ for " + g.to_string());
        report.crosschecks.push_back(std::move(cc));
      }
      OrderSummary row;
      row.order = n;
      row.group = g.to_string();
      for (auto& spec : specs) {
        if (static_cast<int>(spec.size()) < config.min_valency) continue;
        report.records.push_back(SurveyRecord{std::move(spec), std::nullopt, std::nullopt, std::nullopt});
      }
      report.summary.push_back(std::move(row));
    }
  }

  FamilyCatalog catalog(config.canon);
  int workers = config.workers > 0 ? config.workers : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  workers = std::min<int>(workers, static_cast<int>(std::max<std::size_t>(1, report.records.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < report.records.size(); i = next++) {
      try {
        process(report.records[i], catalog, config);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = report.records.size();
      }
    }
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Deterministic merge in record order.
  std::set<std::vector<std::uint8_t>> drg_certs;
  std::size_t row = 0;
  for (const auto& rec : report.records) {
    const auto gname = rec.spec.group().to_string();
    while (report.summary[row].group != gname || report.summary[row].order != rec.spec.group().order()) ++row;
    auto& sum = report.summary[row];
    ++sum.instances;
    const std::string where = gname + " {" + rec.spec.set_to_string() + "}";
    if (rec.lemmas) report.lemmas.merge(*rec.lemmas);
    if (!rec.result) {
      report.violations.push_back("undecided " + where + ": " + rec.error.value_or("no result"));
      continue;
    }
    const auto& r = *rec.result;
    if (!r.is_drg()) continue;
    ++sum.drg_instances;
    if (drg_certs.insert(r.certificate.bytes).second) report.distinct_drg_certificates.push_back(r.certificate.hex());
    if (r.family) {
      ++sum.families[r.family->label()];
    } else {
      report.violations.push_back("distance-regular without a listed family: " + where);
    }
  }

  for (const auto& id : classification_instances_upto(config.max_order)) {
    if (id.vertex_count() < config.min_order) continue;
    const auto spec = cayley_spec_for(id);
    if (static_cast<int>(spec.size()) < config.min_valency) continue;
    auto it = std::lower_bound(report.records.begin(), report.records.end(), spec,
                               [](const SurveyRecord& r, const CayleySpec& s) { return r.spec < s; });
    if (it == report.records.end() || it->spec != spec) {
      report.violations.push_back(id.label() + ": construction spec not enumerated");
      continue;
    }
    if (!it->result || !it->result->is_drg()) {
      report.violations.push_back(id.label() + ": construction spec not distance-regular");
      continue;
    }
    const auto& labels = it->result->all_labels;
    if (std::find(labels.begin(), labels.end(), id) == labels.end())
      report.violations.push_back(id.label() + ": construction spec not recognised as " + id.label());
  }

  report.theorem_holds = report.violations.empty();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

void write_jsonl(std::ostream& out, const SurveyReport& report) {
  std::set<std::vector<std::uint8_t>> seen;
  for (const auto& rec : report.records) {
    if (!rec.result) {
      Json j;
      j["schema"] = kSchemaVersion;
      j["group"] = rec.spec.group().to_string();
      Json set = Json::array();
      for (int c : rec.spec.codes()) set.push_back(rec.spec.group().code_to_string(c));
      j["set"] = std::move(set);
      j["error"] = rec.error.value_or("");
      out << j.dump() << '\n';
      continue;
    }
    if (report.config.dedup == Dedup::ByCertificate && !seen.insert(rec.result->certificate.bytes).second) continue;
    out << classification_to_json(*rec.result).dump() << '\n';
  }
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

}  // namespace

void write_summary_csv(std::ostream& out, const SurveyReport& report) {
  out << "order,group,instances,drg_instances,families\n";
  for (const auto& row : report.summary) {
    std::string fam;
    for (const auto& [label, count] : row.families) {
      if (!fam.empty()) fam += ';';
      fam += label + "=" + std::to_string(count);
    }
    out << row.order << ',' << csv_field(row.group) << ',' << row.instances << ',' << row.drg_instances << ','
        << csv_field(fam) << '\n';
  }
}

}  // namespace drgcay
