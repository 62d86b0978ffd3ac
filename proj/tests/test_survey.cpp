#include <doctest.h>

#include <set>
#include <sstream>

#include "drgcay/errors.hpp"
#include "drgcay/survey.hpp"
#include "oracles.hpp"

using namespace drgcay;

namespace {

std::set<std::vector<int>> code_sets(const std::vector<CayleySpec>& specs) {
  std::set<std::vector<int>> out;
  for (const auto& s : specs) out.insert(s.codes());
  return out;
}

std::string jsonl(const SurveyReport& r) {
  std::ostringstream out;
  write_jsonl(out, r);
  return out.str();
}

SurveyConfig config_upto(int n) {
  SurveyConfig c;
  c.max_order = n;
  return c;
}

}  // namespace

TEST_CASE("enumeration examples") {
  // Only the two pentagons: no set of size >= 3 has a special generator in Z5.
  CHECK(code_sets(enumerate_specs(AbelianGroup::cyclic(5))) == std::set<std::vector<int>>{{1, 4}, {2, 3}});
  const auto z6 = code_sets(enumerate_specs(AbelianGroup::cyclic(6)));
  for (std::vector<int> s : {std::vector<int>{1, 5}, {1, 3, 5}, {1, 2, 4, 5}, {2, 3, 4}}) CHECK(z6.count(s) == 1);
  // K6: every deletion of an inverse pair still generates.
  CHECK(z6.count({1, 2, 3, 4, 5}) == 0);
  CHECK(code_sets(enumerate_specs(AbelianGroup::cyclic(4))) == std::set<std::vector<int>>{{1, 3}, {1, 2, 3}});
}

TEST_CASE("structural and naive enumeration agree up to order 12") {
  for (int n = 2; n <= 12; ++n)
    for (const auto& g : enumerate_groups(n)) {
      CAPTURE(g.to_string());
      const auto s = enumerate_specs(g);
      CHECK(s == naive_enumerate_specs(g));
      CHECK(std::is_sorted(s.begin(), s.end()));
      std::set<std::vector<int>> expected;
      for (const auto& set : oracle::all_connection_sets(g))
        if (oracle::has_special_generator(g, set)) expected.insert(set);
      CHECK(code_sets(s) == expected);
      for (const auto& spec : s) {
        CHECK(validate_spec(spec).ok());
        CHECK_FALSE(special_generators(spec).empty());
      }
    }
}

TEST_CASE("subgroup lattice") {
  for (int n = 2; n <= 12; ++n)
    for (const auto& g : enumerate_groups(n)) {
      std::set<std::set<oracle::Tuple>> expected;
      for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
          for (int c = b; c < n; ++c)
            expected.insert(oracle::closure(g.invariant_factors(), {g.decode(a).coords, g.decode(b).coords,
                                                                    g.decode(c).coords}));
      const auto subs = all_subgroups(g);
      std::set<std::set<oracle::Tuple>> got;
      for (const auto& h : subs) {
        std::set<oracle::Tuple> t;
        for (int x : h.elements()) t.insert(g.decode(x).coords);
        got.insert(t);
      }
      CAPTURE(g.to_string());
      CHECK(got == expected);
      CHECK(got.size() == subs.size());
    }
  CHECK(all_subgroups(AbelianGroup({2, 2, 2})).size() == 16);
  CHECK(all_subgroups(AbelianGroup::cyclic(12)).size() == 6);
}

TEST_CASE("survey up to order 6") {
  const auto r = run_survey(config_upto(6));
  CHECK(r.theorem_holds);
  CHECK(r.violations.empty());
  std::set<std::string> labels;
  for (const auto& [label, count] : r.family_counts()) labels.insert(label);
  CHECK(labels == std::set<std::string>{"H(1,2)", "H(1,3)", "H(2,2)", "H(1,4)", "C5", "C6", "K3,3", "K2,2,2"});

  // Brute-force classification of every spec against the expected graphs.
  const std::vector<FamilyId> expected = {FamilyId::hamming(1, 2), FamilyId::hamming(1, 3), FamilyId::hamming(2, 2),
                                          FamilyId::hamming(1, 4), FamilyId::cycle(5),      FamilyId::cycle(6),
                                          FamilyId::complete_bipartite(3, 3), FamilyId::k222()};
  std::vector<std::vector<char>> canon;
  for (const auto& id : expected) canon.push_back(oracle::brute_canon(construct(id)));
  for (const auto& rec : r.records) {
    REQUIRE(rec.result.has_value());
    const auto g = build_cayley(rec.spec);
    const bool drg = oracle::brute_array(g).has_value();
    CHECK(rec.result->is_drg() == drg);
    if (!drg) continue;
    const auto c = oracle::brute_canon(g);
    const auto it = std::find(canon.begin(), canon.end(), c);
    REQUIRE(it != canon.end());
    REQUIRE(rec.result->family.has_value());
    CHECK(*rec.result->family == expected[it - canon.begin()]);
  }
}

TEST_CASE("survey up to order 12") {
  const auto r = run_survey(config_upto(12));
  CHECK(r.theorem_holds);
  const auto fams = r.family_counts();
  for (const char* label : {"H(3,2)", "FoldedCube(4)", "H(2,3)", "K6,6-6K2", "C10", "C11", "C12", "K3,3", "K2,2,2"}) {
    CAPTURE(label);
    CHECK(fams.count(label) == 1);
  }
  CHECK(r.crosschecks.size() == 16);
  for (const auto& cc : r.crosschecks) CHECK(cc.equal);
  CHECK(r.instance_count() == 202);
  CHECK(r.drg_count() == 76);
  long long rows = 0;
  for (const auto& row : r.summary) rows += row.instances;
  CHECK(rows == r.instance_count());
}

TEST_CASE("dedup by certificate") {
  auto c = config_upto(6);
  const auto all = run_survey(c);
  c.dedup = Dedup::ByCertificate;
  const auto dedup = run_survey(c);
  const auto lines = [](const std::string& s) { return std::count(s.begin(), s.end(), '\n'); };
  const auto n_all = lines(jsonl(all));
  const auto n_dedup = lines(jsonl(dedup));
  CHECK(n_all == all.instance_count());
  CHECK(n_dedup < n_all);
  std::set<std::vector<std::uint8_t>> certs;
  for (const auto& rec : all.records) certs.insert(rec.result->certificate.bytes);
  CHECK(n_dedup == static_cast<long long>(certs.size()));
  CHECK(static_cast<std::size_t>(all.drg_count()) > all.family_counts().size());
}

TEST_CASE("reports do not depend on the worker count") {
  auto c = config_upto(16);
  c.workers = 1;
  const auto a = jsonl(run_survey(c));
  c.workers = 8;
  const auto b = jsonl(run_survey(c));
  c.workers = 3;
  const auto d = jsonl(run_survey(c));
  CHECK(a == b);
  CHECK(a == d);
  CHECK(!a.empty());
}

TEST_CASE("filters and summary") {
  auto c = config_upto(10);
  c.min_order = 8;
  c.min_valency = 3;
  const auto r = run_survey(c);
  CHECK(r.theorem_holds);
  for (const auto& rec : r.records) {
    CHECK(rec.spec.group().order() >= 8);
    CHECK(rec.spec.size() >= 3);
  }
  std::ostringstream csv;
  write_summary_csv(csv, r);
  const auto text = csv.str();
  CHECK(text.rfind("order,group,instances,drg_instances,families\n", 0) == 0);
  CHECK(text.find("\n8,Z2xZ2xZ2,") != std::string::npos);
  CHECK(text.find("H(3,2)=") != std::string::npos);

  c = config_upto(1);
  CHECK_THROWS_AS(run_survey(c), BadParameters);
}

TEST_CASE("lemmas inside the survey") {
  auto c = config_upto(10);
  c.lemmas = true;
  const auto r = run_survey(c);
  CHECK(r.lemmas.failures() == 0);
  CHECK(r.lemmas.entry('a').checked > 0);
  for (const auto& rec : r.records) CHECK(rec.lemmas.has_value());
}
