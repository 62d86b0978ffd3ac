#include "drgcay/families.hpp"

#include <algorithm>

#include "drgcay/errors.hpp"

namespace drgcay {

namespace {

long long ipow_ll(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > (1LL << 40)) return r;  // saturate well past any constructible size
  }
  return r;
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

CayleySpec spec_from_presentation(std::vector<int> orders, const std::vector<std::vector<int>>& elems) {
  const CyclicProduct pres(std::move(orders));
  std::vector<GroupElement> mapped;
  mapped.reserve(elems.size());
  for (const auto& e : elems) mapped.push_back(pres.to_canonical(e));
  return CayleySpec(pres.canonical(), mapped);
}

std::vector<int> split_params(std::string_view params) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) throw BadParameters("empty family parameter in '" + std::string(params) + "'");
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(cur, &used));
      if (used != cur.size()) throw std::invalid_argument(cur);
    } catch (const std::exception&) {
      throw BadParameters("family parameter '" + cur + "' is not an integer");
    }
    cur.clear();
  };
  for (char ch : params) {
    if (ch == ' ') continue;
    if (ch == ',') flush();
    else cur.push_back(ch);
  }
  if (!cur.empty() || !out.empty()) flush();
  return out;
}

}  // namespace

std::string FamilyId::label() const {
  const auto s = [](int v) { return std::to_string(v); };
  switch (kind) {
    case FamilyKind::CompleteGraph: return "K" + s(p1);
    case FamilyKind::Cycle: return "C" + s(p1);
    case FamilyKind::CompleteBipartite: return "K" + s(p1) + "," + s(p2);
    case FamilyKind::CompleteTripartite222: return "K2,2,2";
    case FamilyKind::K66MinusPerfectMatching: return "K6,6-6K2";
    case FamilyKind::Hamming: return "H(" + s(p1) + "," + s(p2) + ")";
    case FamilyKind::Shrikhande: return "Shrikhande";
    case FamilyKind::Doob: return "D(" + s(p1) + "," + s(p2) + ")";
    case FamilyKind::FoldedHypercube: return "FoldedCube(" + s(p1) + ")";
  }
  return "?";
}

long long FamilyId::vertex_count() const {
  switch (kind) {
    case FamilyKind::CompleteGraph:
    case FamilyKind::Cycle: return p1;
    case FamilyKind::CompleteBipartite: return static_cast<long long>(p1) + p2;
    case FamilyKind::CompleteTripartite222: return 6;
    case FamilyKind::K66MinusPerfectMatching: return 12;
    case FamilyKind::Hamming: return ipow_ll(p2, p1);
    case FamilyKind::Shrikhande: return 16;
    case FamilyKind::Doob: return ipow_ll(4, p1 + 2 * p2);
    case FamilyKind::FoldedHypercube: return ipow_ll(2, p1 - 1);
  }
  return 0;
}

bool FamilyId::in_classification() const {
  switch (kind) {
    case FamilyKind::CompleteGraph: return p1 >= 2 && p1 <= 4;
    case FamilyKind::Cycle: return p1 >= 3;
    case FamilyKind::CompleteBipartite: return p1 == 3 && p2 == 3;
    case FamilyKind::CompleteTripartite222:
    case FamilyKind::K66MinusPerfectMatching: return true;
    case FamilyKind::Hamming: return p1 >= 1 && p2 >= 2 && p2 <= 4;
    case FamilyKind::Shrikhande: return false;
    case FamilyKind::Doob: return p1 >= 1 && p2 >= 1;
    case FamilyKind::FoldedHypercube: return p1 >= 2;
  }
  return false;
}

void FamilyId::validate() const {
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw BadParameters(label() + ": " + what);
  };
  switch (kind) {
    case FamilyKind::CompleteGraph: need(p1 >= 1, "requires n >= 1"); break;
    case FamilyKind::Cycle: need(p1 >= 3, "requires n >= 3"); break;
    case FamilyKind::CompleteBipartite: need(p1 >= 1 && p2 >= 1, "requires m, n >= 1"); break;
    case FamilyKind::Hamming: need(p1 >= 1 && p2 >= 2, "requires d >= 1 and q >= 2"); break;
    case FamilyKind::Doob: need(p1 >= 0 && p2 >= 1, "requires n >= 0 and m >= 1"); break;
    case FamilyKind::FoldedHypercube: need(p1 >= 2, "requires d >= 2"); break;
    default: break;
  }
  need(vertex_count() <= (1 << 20), "too many vertices to construct");
}

FamilyId parse_family(std::string_view name, std::string_view params) {
  const auto p = split_params(params);
  auto arity = [&](std::size_t k) {
    if (p.size() != k)
      throw BadParameters("family '" + std::string(name) + "' takes " + std::to_string(k) + " parameter(s), got " +
                          std::to_string(p.size()));
  };
  FamilyId id;
  if (name == "complete") arity(1), id = FamilyId::complete(p[0]);
  else if (name == "cycle") arity(1), id = FamilyId::cycle(p[0]);
  else if (name == "complete-bipartite") arity(2), id = FamilyId::complete_bipartite(p[0], p[1]);
  else if (name == "k222" || name == "complete-tripartite") arity(0), id = FamilyId::k222();
  else if (name == "k66-6k2" || name == "k66-minus-matching") arity(0), id = FamilyId::k66_minus_matching();
  else if (name == "hamming") arity(2), id = FamilyId::hamming(p[0], p[1]);
  else if (name == "shrikhande") arity(0), id = FamilyId::shrikhande();
  else if (name == "doob") arity(2), id = FamilyId::doob(p[0], p[1]);
  else if (name == "folded-cube") arity(1), id = FamilyId::folded_hypercube(p[0]);
  else throw BadParameters("unknown family '" + std::string(name) + "'");
  id.validate();
  return id;
}

std::vector<std::string> family_names() {
  return {"complete", "cycle", "complete-bipartite", "k222", "k66-6k2", "hamming", "shrikhande", "doob", "folded-cube"};
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n2 = g2.vertex_count();
  const int n = g1.vertex_count() * n2;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int u = 0; u < g1.vertex_count(); ++u) {
    for (int v = 0; v < n2; ++v) {
      auto& row = adj[static_cast<std::size_t>(u * n2 + v)];
      for (int u2 : g1.neighbors(u)) row.push_back(u2 * n2 + v);
      for (int v2 : g2.neighbors(v)) row.push_back(u * n2 + v2);
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph antipodal_quotient_hypercube(int d) {
  if (d < 2) throw BadParameters("antipodal quotient needs d >= 2");
  if (d > 24) throw BadParameters("antipodal quotient: d too large");
  const unsigned full = (1U << d) - 1U;
  const int blocks = 1 << (d - 1);
  auto block_of = [&](unsigned x) { return static_cast<int>(std::min(x, full ^ x)); };
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(blocks));
  for (int b = 0; b < blocks; ++b) {
    auto& row = adj[static_cast<std::size_t>(b)];
    // Edges leaving either member of the block land in the same blocks.
    for (int i = 0; i < d; ++i) row.push_back(block_of(static_cast<unsigned>(b) ^ (1U << i)));
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph construct(const FamilyId& id) {
  id.validate();
  switch (id.kind) {
    case FamilyKind::CompleteGraph: return complete_graph(id.p1);
    case FamilyKind::Cycle: {
      std::vector<std::pair<int, int>> e;
      for (int i = 0; i < id.p1; ++i) e.emplace_back(std::min(i, (i + 1) % id.p1), std::max(i, (i + 1) % id.p1));
      return Graph(id.p1, e);
    }
    case FamilyKind::CompleteBipartite: {
      std::vector<std::pair<int, int>> e;
      for (int u = 0; u < id.p1; ++u)
        for (int v = 0; v < id.p2; ++v) e.emplace_back(u, id.p1 + v);
      return Graph(id.p1 + id.p2, e);
    }
    case FamilyKind::CompleteTripartite222: {
      std::vector<std::pair<int, int>> e;
      for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
          if (u / 2 != v / 2) e.emplace_back(u, v);
      return Graph(6, e);
    }
    case FamilyKind::K66MinusPerfectMatching: {
      std::vector<std::pair<int, int>> e;
      for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v)
          if (u != v) e.emplace_back(u, 6 + v);
      return Graph(12, e);
    }
    case FamilyKind::Hamming: {
      const Graph kq = complete_graph(id.p2);
      Graph g = kq;
      for (int i = 1; i < id.p1; ++i) g = cartesian_product(g, kq);
      return g;
    }
    case FamilyKind::Shrikhande: return build_cayley(cayley_spec_for(id));
    case FamilyKind::Doob: {
      const Graph shrikhande = construct(FamilyId::shrikhande());
      std::optional<Graph> g;
      if (id.p1 >= 1) g = construct(FamilyId::hamming(id.p1, 4));
      for (int i = 0; i < id.p2; ++i) g = g ? cartesian_product(*g, shrikhande) : shrikhande;
      return *g;
    }
    case FamilyKind::FoldedHypercube: return antipodal_quotient_hypercube(id.p1);
  }
  throw BadParameters("unknown family");
}

CayleySpec cayley_spec_for(const FamilyId& id) {
  id.validate();
  switch (id.kind) {
    case FamilyKind::CompleteGraph: {
      std::vector<std::vector<int>> s;
      for (int x = 1; x < id.p1; ++x) s.push_back({x});
      return spec_from_presentation({id.p1}, s);
    }
    case FamilyKind::Cycle: return spec_from_presentation({id.p1}, {{1}, {id.p1 - 1}});
    case FamilyKind::CompleteBipartite: {
      if (id.p1 != id.p2) throw BadParameters(id.label() + ": not regular, so not a Cayley graph");
      std::vector<std::vector<int>> s;
      for (int x = 1; x < 2 * id.p1; x += 2) s.push_back({x});
      return spec_from_presentation({2 * id.p1}, s);
    }
    case FamilyKind::CompleteTripartite222: return spec_from_presentation({6}, {{1}, {5}, {2}, {4}});
    case FamilyKind::K66MinusPerfectMatching:
      return spec_from_presentation({6, 2}, {{1, 0}, {5, 0}, {2, 1}, {4, 1}, {0, 1}});
    case FamilyKind::Hamming: {
      const int d = id.p1, q = id.p2;
      std::vector<std::vector<int>> s;
      for (int pos = 0; pos < d; ++pos)
        for (int x = 1; x < q; ++x) {
          std::vector<int> e(static_cast<std::size_t>(d), 0);
          e[static_cast<std::size_t>(pos)] = x;
          s.push_back(std::move(e));
        }
      return spec_from_presentation(std::vector<int>(static_cast<std::size_t>(d), q), s);
    }
    case FamilyKind::Shrikhande:
      return spec_from_presentation({4, 4}, {{1, 0}, {3, 0}, {1, 1}, {3, 3}, {0, 1}, {0, 3}});
    case FamilyKind::Doob: {
      // H(n,4) coordinates first, then one Z4 x Z4 block per Shrikhande factor.
      const int n = id.p1, m = id.p2;
      const std::size_t rank = static_cast<std::size_t>(n + 2 * m);
      std::vector<std::vector<int>> s;
      for (int pos = 0; pos < n; ++pos)
        for (int x = 1; x < 4; ++x) {
          std::vector<int> e(rank, 0);
          e[static_cast<std::size_t>(pos)] = x;
          s.push_back(std::move(e));
        }
      const int shr[6][2] = {{1, 0}, {3, 0}, {1, 1}, {3, 3}, {0, 1}, {0, 3}};
      for (int b = 0; b < m; ++b)
        for (const auto& t : shr) {
          std::vector<int> e(rank, 0);
          e[static_cast<std::size_t>(n + 2 * b)] = t[0];
          e[static_cast<std::size_t>(n + 2 * b + 1)] = t[1];
          s.push_back(std::move(e));
        }
      return spec_from_presentation(std::vector<int>(rank, 4), s);
    }
    case FamilyKind::FoldedHypercube: {
      const int d = id.p1;
      if (d == 2) return spec_from_presentation({2}, {{1}});
      // Z4 x (Z2)^{d-3}: (+-1, 0), (2, all-ones), (0, e_i).
      const std::size_t rank = static_cast<std::size_t>(d - 2);
      std::vector<int> orders(rank, 2);
      orders[0] = 4;
      std::vector<std::vector<int>> s;
      std::vector<int> e(rank, 0);
      e[0] = 1;
      s.push_back(e);
      e[0] = 3;
      s.push_back(e);
      std::vector<int> twist(rank, 1);
      twist[0] = 2;
      s.push_back(twist);
      for (std::size_t i = 1; i < rank; ++i) {
        std::vector<int> unit(rank, 0);
        unit[i] = 1;
        s.push_back(std::move(unit));
      }
      return spec_from_presentation(std::move(orders), s);
    }
  }
  throw BadParameters("unknown family");
}

std::vector<FamilyId> families_with_order(int n) {
  std::vector<FamilyId> out;
  if (n < 1) return out;
  out.push_back(FamilyId::complete(n));
  if (n >= 3) out.push_back(FamilyId::cycle(n));
  if (n % 2 == 0) out.push_back(FamilyId::complete_bipartite(n / 2, n / 2));
  if (n == 6) out.push_back(FamilyId::k222());
  if (n == 12) out.push_back(FamilyId::k66_minus_matching());
  for (int q = 2; q <= n; ++q) {
    long long p = q;
    for (int d = 1; p <= n; ++d, p *= q)
      if (p == n) out.push_back(FamilyId::hamming(d, q));
  }
  if (n == 16) out.push_back(FamilyId::shrikhande());
  for (int total = 1; ipow_ll(4, total) <= n; ++total) {
    if (ipow_ll(4, total) != n) continue;
    for (int m = 1; 2 * m <= total; ++m)
      if (total - 2 * m > 0 || m > 1) out.push_back(FamilyId::doob(total - 2 * m, m));
  }
  for (int d = 2; ipow_ll(2, d - 1) <= n; ++d)
    if (ipow_ll(2, d - 1) == n) out.push_back(FamilyId::folded_hypercube(d));
  return out;
}

std::vector<FamilyId> classification_instances_upto(int max_order) {
  std::vector<FamilyId> out;
  for (int n = 2; n <= max_order; ++n)
    for (const auto& id : families_with_order(n))
      if (id.in_classification() && id.kind != FamilyKind::CompleteGraph) out.push_back(id);
  return out;
}

}  // namespace drgcay
