#include "drgcay/classifier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "drgcay/errors.hpp"

namespace drgcay {

namespace {

int precedence_rank(FamilyKind k) {
  switch (k) {
    case FamilyKind::Hamming: return 0;
    case FamilyKind::Cycle: return 1;
    case FamilyKind::CompleteGraph: return 2;
    case FamilyKind::FoldedHypercube: return 3;
    case FamilyKind::CompleteBipartite: return 4;
    case FamilyKind::CompleteTripartite222: return 5;
    case FamilyKind::K66MinusPerfectMatching: return 6;
    case FamilyKind::Doob: return 7;
    case FamilyKind::Shrikhande: return 8;
  }
  return 9;
}

bool needs_k4_prefilter(const FamilyId& id) {
  return (id.kind == FamilyKind::Hamming && id.p2 == 4) || id.kind == FamilyKind::Doob ||
         id.kind == FamilyKind::Shrikhande;
}

}  // namespace

bool family_precedes(const FamilyId& a, const FamilyId& b) {
  const int ra = precedence_rank(a.kind), rb = precedence_rank(b.kind);
  if (ra != rb) return ra < rb;
  return a < b;
}

bool every_edge_in_k4(const Graph& g) {
  std::vector<char> mark(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> common;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int w : g.neighbors(u)) mark[static_cast<std::size_t>(w)] = 1;
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      common.clear();
      for (int w : g.neighbors(v))
        if (mark[static_cast<std::size_t>(w)]) common.push_back(w);
      bool found = false;
      for (std::size_t i = 0; i < common.size() && !found; ++i)
        for (std::size_t j = i + 1; j < common.size() && !found; ++j) found = g.adjacent(common[i], common[j]);
      if (!found) return false;
    }
    for (int w : g.neighbors(u)) mark[static_cast<std::size_t>(w)] = 0;
  }
  return true;
}

std::shared_ptr<const FamilyCatalog::Entry> FamilyCatalog::get(const FamilyId& id) {
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(id); it != entries_.end()) return it->second;
  }
  // Built outside the lock; a racing duplicate computes the same value.
  auto entry = std::make_shared<Entry>();
  entry->id = id;
  entry->graph = construct(id);
  const auto verdict = intersection_array(entry->graph);
  if (const auto* arr = std::get_if<IntersectionArray>(&verdict)) entry->array = *arr;
  entry->labeling = canonical_labeling(entry->graph, options_);
  if (needs_k4_prefilter(id)) entry->every_edge_in_k4 = every_edge_in_k4(entry->graph);
  std::lock_guard lock(mutex_);
  auto [it, inserted] = entries_.emplace(id, std::move(entry));
  return it->second;
}

FamilyCatalog& FamilyCatalog::shared() {
  static FamilyCatalog catalog;
  return catalog;
}

ClassificationResult classify(const CayleySpec& spec, FamilyCatalog& catalog) {
  const Graph g = build_cayley(spec);
  const auto profiles = special_generators(spec);
  ClassificationResult r(spec);
  r.hypothesis_met = !profiles.empty();
  for (const auto& p : profiles) r.special_s.push_back(p.s);
  r.drg = intersection_array(g);
  const auto labeling = canonical_labeling(g, catalog.options());
  r.certificate = labeling.certificate;
  if (!r.hypothesis_met || !r.is_drg()) return r;

  const auto& arr = std::get<IntersectionArray>(r.drg);
  std::optional<bool> k4_cover;
  std::vector<std::shared_ptr<const FamilyCatalog::Entry>> matches;
  for (const auto& id : families_with_order(g.vertex_count())) {
    // Complete graphs of this order are only candidates when the array says so.
    if (id.kind == FamilyKind::CompleteGraph && arr.diameter() != 1) continue;
    if (id.kind == FamilyKind::CompleteBipartite && (arr.diameter() != 2 || arr.valency() != id.p1)) continue;
    if (id.kind == FamilyKind::Cycle && arr.valency() != 2) continue;
    const auto entry = catalog.get(id);
    if (!entry->array || *entry->array != arr) continue;
    if (needs_k4_prefilter(id)) {
      if (!k4_cover) k4_cover = every_edge_in_k4(g);
      if (*k4_cover != entry->every_edge_in_k4) continue;
    }
    if (entry->labeling.certificate != labeling.certificate) continue;
    matches.push_back(entry);
  }
  std::sort(matches.begin(), matches.end(), [](const auto& a, const auto& b) { return family_precedes(a->id, b->id); });
  for (const auto& m : matches) r.all_labels.push_back(m->id);
  for (const auto& m : matches) {
    if (!m->id.in_classification()) continue;
    auto mapping = mapping_from_labelings(labeling, m->labeling);
    if (!is_isomorphism(g, m->graph, mapping))
      throw std::logic_error("isomorphism witness for " + m->id.label() + " failed to validate");
    r.family = m->id;
    r.isomorphism = std::move(mapping);
    break;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Lemma suite

LemmaReport::LemmaReport() {
  static const char* const names[] = {
      "coset adjacency",
      "c2 bound",
      "index bound",
      "product decomposition",
      "index 3 parameters",
      "index 2 parameters",
      "P-map automorphism",
      "distance relations",
      "geodesic cover",
      "c2 with triangles",
      "P-map separates components",
  };
  for (int i = 0; i < 11; ++i) {
    LemmaEntry e;
    e.id = static_cast<char>('a' + i);
    e.name = names[i];
    entries.push_back(std::move(e));
  }
}

long long LemmaReport::failures() const {
  long long total = 0;
  for (const auto& e : entries) total += e.failed;
  return total;
}

const LemmaEntry& LemmaReport::entry(char id) const { return entries.at(static_cast<std::size_t>(id - 'a')); }

void LemmaReport::merge(const LemmaReport& other) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto& e = entries[i];
    const auto& o = other.entries[i];
    e.checked += o.checked;
    e.failed += o.failed;
    e.vacuous += o.vacuous;
    if (!e.first_counterexample && o.first_counterexample) e.first_counterexample = o.first_counterexample;
  }
}

std::string lemma_status_name(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::Pass: return "pass";
    case LemmaStatus::Fail: return "fail";
    case LemmaStatus::Vacuous: return "vacuous";
  }
  return "?";
}

namespace {

// Outcome of one check on one profile: nullopt = vacuous, "" = pass, text = failure.
using Outcome = std::optional<std::string>;

const Outcome kVacuous = std::nullopt;

class Failures {
 public:
  void add(bool ok, const std::string& what) {
    if (!ok && text_.empty()) text_ = what;
  }
  Outcome outcome() const { return text_; }
  bool failed() const { return !text_.empty(); }

 private:
  std::string text_;
};

struct SpecContext {
  const CayleySpec& spec;
  const AbelianGroup& group;
  Graph graph;
  std::vector<std::vector<int>> dist;
  std::optional<IntersectionArray> arr;
  bool is_k4 = false;
};

struct ProfileContext {
  const NotationProfile& p;
  Graph gamma0;
  std::vector<std::vector<int>> dist0;  // indexed by positions in H
  std::vector<int> shift_pos;           // position of x + 2s, when 2s is in H
  int two_s = 0;
  bool s_generates = false;
};

std::string str(const SpecContext& c, int code) { return c.group.code_to_string(code); }

Outcome check_b(const SpecContext& c) {
  if (!c.arr || c.is_k4) return kVacuous;
  Failures f;
  f.add(c.arr->diameter() >= 2, "diameter below 2 but graph is not K4");
  if (c.arr->diameter() >= 2) {
    const int c2 = c.arr->c_at(2);
    f.add(c2 >= 2 && c2 <= 4, "c2 = " + std::to_string(c2));
  }
  return f.outcome();
}

Outcome check_c(const SpecContext& c, const ProfileContext& pc) {
  if (!c.arr) return kVacuous;
  Failures f;
  f.add(pc.p.index <= 4, "index " + std::to_string(pc.p.index));
  if (pc.p.index == 4) f.add(pc.p.order_s == 4, "index 4 with o(s) = " + std::to_string(pc.p.order_s));
  return f.outcome();
}

Outcome check_d(const SpecContext& c, const ProfileContext& pc, const CanonOptions& options) {
  if (pc.p.order_s != pc.p.index) return kVacuous;
  const Graph factor =
      pc.p.order_s >= 3 ? construct(FamilyId::cycle(pc.p.order_s)) : construct(FamilyId::complete(2));
  const Graph product = cartesian_product(factor, pc.gamma0);
  Failures f;
  f.add(are_isomorphic(c.graph, product, options).isomorphic, "graph is not the product of the cycle with gamma0");
  return f.outcome();
}

Outcome check_e(const SpecContext& c, const ProfileContext& pc) {
  if (!c.arr || pc.p.index != 3 || pc.p.order_s < 6) return kVacuous;
  Failures f;
  f.add(c.arr->diameter() >= 2, "diameter below 2");
  f.add(c.arr->a_at(1) == 0, "a1 = " + std::to_string(c.arr->a_at(1)));
  if (c.arr->diameter() >= 2) f.add(c.arr->c_at(2) == 3, "c2 = " + std::to_string(c.arr->c_at(2)));
  f.add(pc.p.order_s == 6, "o(s) = " + std::to_string(pc.p.order_s));
  return f.outcome();
}

Outcome check_f(const SpecContext& c, const ProfileContext& pc) {
  if (!c.arr || pc.p.index != 2 || pc.p.order_s < 4) return kVacuous;
  Failures f;
  const int a1 = c.arr->a_at(1);
  const bool two_s_in_s = c.spec.contains(c.group.multiple_code(pc.p.s, 2));
  f.add(a1 == 0 || a1 == 2, "a1 = " + std::to_string(a1));
  f.add((a1 == 2) == two_s_in_s, "a1 = " + std::to_string(a1) + " but 2s " + (two_s_in_s ? "in" : "not in") + " S");
  if (!pc.s_generates) {
    f.add(c.arr->diameter() >= 2, "diameter below 2");
    if (c.arr->diameter() >= 2) {
      const int c2 = c.arr->c_at(2);
      f.add(c2 == 2 || c2 == 4, "c2 = " + std::to_string(c2));
    }
  }
  return f.outcome();
}

Outcome check_g(const ProfileContext& pc) {
  if (pc.p.order_s != 4 || pc.p.index != 2) return kVacuous;
  Failures f;
  const int m = pc.gamma0.vertex_count();
  for (int x = 0; x < m; ++x) {
    const int px = pc.shift_pos[static_cast<std::size_t>(x)];
    f.add(px >= 0, "x + 2s leaves H");
    if (px < 0) return f.outcome();
    f.add(pc.shift_pos[static_cast<std::size_t>(px)] == x, "P^2 != I");
  }
  f.add(is_isomorphism(pc.gamma0, pc.gamma0, pc.shift_pos), "P is not an automorphism of gamma0");
  return f.outcome();
}

bool section_applies(const SpecContext& c, const ProfileContext& pc) {
  return c.arr && pc.p.order_s == 4 && pc.p.index == 2 && !pc.s_generates;
}

// Counts (c, a) for the pair (x, y) in a graph on H given its distance row from x.
PairCounts counts_in(const Graph& g, const std::vector<int>& row, int y) { return pair_counts(g, row, y); }

Outcome check_h_triangle_free(const SpecContext& c, const ProfileContext& pc) {
  Failures f;
  const auto& H = pc.p.h.elements();
  const int m = static_cast<int>(H.size());
  const auto& arr = *c.arr;
  const int s = pc.p.s;
  const int d = pc.dist0[0][static_cast<std::size_t>(pc.shift_pos[0])];
  for (int x = 0; x < m; ++x)
    f.add(pc.dist0[static_cast<std::size_t>(x)][static_cast<std::size_t>(pc.shift_pos[static_cast<std::size_t>(x)])] == d,
          "d(x, Px) depends on x");
  const int half = d / 2;
  for (int i = 1; i <= half; ++i) {
    f.add(i <= arr.diameter() && arr.a_at(i) == 0, "a" + std::to_string(i) + " != 0");
    f.add(arr.c_at(i) == i, "c" + std::to_string(i) + " = " + std::to_string(arr.c_at(i)));
  }
  auto D = [&](int u, int v) { return c.dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; };
  for (int x = 0; x < m && !f.failed(); ++x) {
    const auto& row = pc.dist0[static_cast<std::size_t>(x)];
    const int px = pc.shift_pos[static_cast<std::size_t>(x)];
    const auto& prow = pc.dist0[static_cast<std::size_t>(px)];
    const int gx = H[static_cast<std::size_t>(x)];
    const int gxs = c.group.add_codes(gx, s);
    for (int y = 0; y < m; ++y) {
      const int i = row[static_cast<std::size_t>(y)];
      const int gy = H[static_cast<std::size_t>(y)];
      const int gys = c.group.add_codes(gy, s);
      const std::string where = " at x=" + str(c, gx) + ", y=" + str(c, gy);
      if (i >= 1 && i <= half) {
        f.add(D(gx, gy) == i && D(gxs, gys) == i, "distance in gamma differs from gamma0" + where);
        f.add(D(gx, gys) == i + 1 && D(gxs, gy) == i + 1, "cross-coset distance is not i+1" + where);
        const auto pcnt = counts_in(pc.gamma0, row, y);
        f.add(pcnt.a == 0 && pcnt.c == i, "gamma0 counts differ" + where);
      }
      if (d % 2 == 0 && i == half + 1) {
        f.add(counts_in(pc.gamma0, row, y).a == 0, "gamma0 a at d/2+1 nonzero" + where);
        if (prow[static_cast<std::size_t>(y)] == half - 1)
          f.add(counts_in(pc.gamma0, row, y).c == half + 1, "gamma0 c at d/2+1 differs" + where);
      }
      if (d % 2 == 1 && i == (d + 1) / 2) {
        f.add(counts_in(pc.gamma0, row, y).c == (d + 1) / 2, "gamma0 c at (d+1)/2 differs" + where);
        if (prow[static_cast<std::size_t>(y)] == (d - 1) / 2)
          f.add(counts_in(pc.gamma0, row, y).a == 0, "gamma0 a at (d+1)/2 nonzero" + where);
      }
    }
  }
  if (d % 2 == 0) {
    const int j = half + 1;
    f.add(j <= arr.diameter(), "diameter below d/2+1");
    if (j <= arr.diameter()) {
      f.add(arr.a_at(j) == 0, "a at d/2+1 = " + std::to_string(arr.a_at(j)));
      f.add(arr.c_at(j) == d + 2, "c at d/2+1 = " + std::to_string(arr.c_at(j)));
    }
  } else {
    const int j = (d + 1) / 2;
    f.add(j <= arr.diameter(), "diameter below (d+1)/2");
    if (j <= arr.diameter()) {
      f.add(arr.c_at(j) == j, "c at (d+1)/2 = " + std::to_string(arr.c_at(j)));
      f.add(arr.a_at(j) == (d + 3) / 2, "a at (d+1)/2 = " + std::to_string(arr.a_at(j)));
    }
  }
  return f.outcome();
}

Outcome check_h_triangles(const SpecContext& c, const ProfileContext& pc, const Graph& gamma1,
                          const std::vector<std::vector<int>>& dist1) {
  Failures f;
  const auto& H = pc.p.h.elements();
  const int m = static_cast<int>(H.size());
  const auto& arr = *c.arr;
  const int s = pc.p.s;
  auto local_d = [&](int x) {
    const int px = pc.shift_pos[static_cast<std::size_t>(x)];
    const int dx = dist1[static_cast<std::size_t>(x)][static_cast<std::size_t>(px)];
    if (dx >= 0) return std::pair{(dx - 1) / 2, true};
    int diam = 0;
    for (int v : dist1[static_cast<std::size_t>(x)]) diam = std::max(diam, v);
    return std::pair{diam, false};
  };
  const auto [d, same] = local_d(0);
  for (int x = 1; x < m; ++x) f.add(local_d(x) == std::pair{d, same}, "local d depends on x");
  for (int i = 1; i <= d; ++i) {
    f.add(i <= arr.diameter() && arr.a_at(i) == 2 * i, "a" + std::to_string(i) + " != " + std::to_string(2 * i));
    f.add(arr.c_at(i) == i, "c" + std::to_string(i) + " = " + std::to_string(arr.c_at(i)));
  }
  auto D = [&](int u, int v) { return c.dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; };
  for (int x = 0; x < m && !f.failed(); ++x) {
    const auto& row = dist1[static_cast<std::size_t>(x)];
    const int gx = H[static_cast<std::size_t>(x)];
    const int gxs = c.group.add_codes(gx, s);
    for (int y = 0; y < m; ++y) {
      const int i = row[static_cast<std::size_t>(y)];
      if (i < 1 || i > d) continue;
      const int gy = H[static_cast<std::size_t>(y)];
      const int gys = c.group.add_codes(gy, s);
      const std::string where = " at x=" + str(c, gx) + ", y=" + str(c, gy);
      f.add(D(gx, gy) == i && D(gxs, gys) == i, "distance in gamma differs from gamma1" + where);
      f.add(D(gx, gys) == i + 1 && D(gxs, gy) == i + 1, "cross-coset distance is not i+1" + where);
      const auto cnt = pair_counts(gamma1, row, y);
      f.add(cnt.a == 2 * i && cnt.c == i, "gamma1 counts differ" + where);
    }
  }
  f.add(d + 1 <= arr.diameter(), "diameter below d+1");
  if (d + 1 <= arr.diameter()) {
    f.add(arr.c_at(d + 1) == d + 1, "c at d+1 = " + std::to_string(arr.c_at(d + 1)));
    if (!same) f.add(arr.a_at(d + 1) == 2 * (d + 1), "a at d+1 = " + std::to_string(arr.a_at(d + 1)));
  }
  return f.outcome();
}

Outcome check_i(const ProfileContext& pc) {
  Failures f;
  const int m = pc.gamma0.vertex_count();
  for (int x = 0; x < m && !f.failed(); ++x) {
    const int px = pc.shift_pos[static_cast<std::size_t>(x)];
    const auto& row = pc.dist0[static_cast<std::size_t>(x)];
    const auto& prow = pc.dist0[static_cast<std::size_t>(px)];
    const int d = row[static_cast<std::size_t>(px)];
    for (int y = 0; y < m; ++y)
      f.add(row[static_cast<std::size_t>(y)] + prow[static_cast<std::size_t>(y)] == d,
            "vertex off every x-Px geodesic");
  }
  return f.outcome();
}

Outcome check_k(const ProfileContext& pc, const std::vector<std::vector<int>>& dist1) {
  Failures f;
  for (int x = 0; x < static_cast<int>(dist1.size()); ++x)
    f.add(dist1[static_cast<std::size_t>(x)][static_cast<std::size_t>(pc.shift_pos[static_cast<std::size_t>(x)])] < 0,
          "x and Px share a component of gamma1");
  return f.outcome();
}

void record(LemmaEntry& e, const Outcome& o, const std::string& context) {
  if (!o) {
    ++e.vacuous;
    return;
  }
  ++e.checked;
  if (!o->empty()) {
    ++e.failed;
    if (!e.first_counterexample) e.first_counterexample = context + ": " + *o;
  }
}

}  // namespace

LemmaReport lemma_suite(const CayleySpec& spec, const CanonOptions& options) {
  LemmaReport report;
  SpecContext c{spec, spec.group(), build_cayley(spec), {}, std::nullopt, false};
  c.dist = distance_matrix(c.graph);
  const auto verdict = intersection_array(c.graph);
  if (const auto* a = std::get_if<IntersectionArray>(&verdict)) c.arr = *a;
  c.is_k4 = c.graph.vertex_count() == 4 && c.graph.edge_count() == 6;
  const bool small = spec.size() < 3;

  for (const auto& p : special_generators(spec)) {
    const std::string context = spec.group().to_string() + " {" + spec.set_to_string() + "} s=" + str(c, p.s);
    auto entry = [&](char id) -> LemmaEntry& { return report.entries[static_cast<std::size_t>(id - 'a')]; };

    Failures fa;
    fa.add(coset_adjacency_check(spec, p), "adjacency between cosets is not given by s and -s");
    record(entry('a'), fa.outcome(), context);
    if (small) {
      for (char id = 'b'; id <= 'k'; ++id) record(entry(id), kVacuous, context);
      continue;
    }

    ProfileContext pc{p, p.gamma0.graph(p.h), {}, {}, 0, p.order_s == spec.group().order()};
    pc.dist0 = distance_matrix(pc.gamma0);
    pc.two_s = spec.group().multiple_code(p.s, 2);
    pc.shift_pos.resize(p.h.elements().size());
    for (std::size_t i = 0; i < p.h.elements().size(); ++i)
      pc.shift_pos[i] = p.h.index_of(spec.group().add_codes(p.h.elements()[i], pc.two_s));

    record(entry('b'), check_b(c), context);
    record(entry('c'), check_c(c, pc), context);
    record(entry('d'), check_d(c, pc, options), context);
    record(entry('e'), check_e(c, pc), context);
    record(entry('f'), check_f(c, pc), context);
    record(entry('g'), check_g(pc), context);

    if (!section_applies(c, pc) || std::any_of(pc.shift_pos.begin(), pc.shift_pos.end(), [](int v) { return v < 0; })) {
      for (char id = 'h'; id <= 'k'; ++id) record(entry(id), kVacuous, context);
      continue;
    }
    const int a1 = c.arr->a_at(1);
    if (a1 == 0) {
      record(entry('h'), check_h_triangle_free(c, pc), context);
      record(entry('i'), check_i(pc), context);
      record(entry('j'), kVacuous, context);
      record(entry('k'), kVacuous, context);
    } else if (a1 == 2 && p.gamma1) {
      const Graph gamma1 = p.gamma1->graph(p.h);
      const auto dist1 = distance_matrix(gamma1);
      record(entry('h'), check_h_triangles(c, pc, gamma1, dist1), context);
      record(entry('i'), kVacuous, context);
      Failures fj;
      if (!c.is_k4) {
        fj.add(c.arr->diameter() >= 2 && c.arr->c_at(2) == 2, "c2 = " + std::to_string(c.arr->c_at(2)));
        record(entry('j'), fj.outcome(), context);
      } else {
        record(entry('j'), kVacuous, context);
      }
      record(entry('k'), check_k(pc, dist1), context);
    } else {
      // a1 outside {0, 2} is already a failure of (f); the later checks have no hypothesis.
      for (char id = 'h'; id <= 'k'; ++id) record(entry(id), kVacuous, context);
    }
  }
  return report;
}

}  // namespace drgcay
