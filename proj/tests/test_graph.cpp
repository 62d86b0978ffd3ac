#include <doctest.h>

#include <sstream>

#include "drgcay/cayley.hpp"
#include "drgcay/errors.hpp"
#include "drgcay/families.hpp"
#include "drgcay/graph.hpp"
#include "oracles.hpp"

using namespace drgcay;

namespace {

IntersectionArray arr(std::vector<int> b, std::vector<int> c) { return IntersectionArray{std::move(b), std::move(c)}; }

Graph k33() { return construct(FamilyId::complete_bipartite(3, 3)); }

// A_1 A_i == b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1}, by explicit matrix products.
bool recurrence_by_matrices(const Graph& g, const IntersectionArray& a) {
  const auto d = oracle::floyd_warshall(g);
  const int n = g.vertex_count();
  const int diam = a.diameter();
  auto dist_matrix = [&](int i) {
    oracle::Matrix m(n, std::vector<int>(n, 0));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) m[x][y] = d[x][y] == i ? 1 : 0;
    return m;
  };
  const auto a1 = dist_matrix(1);
  for (int i = 0; i <= diam; ++i) {
    const auto ai = dist_matrix(i);
    const auto prev = dist_matrix(i - 1);
    const auto next = dist_matrix(i + 1);
    const int bp = i >= 1 ? a.b[i - 1] : 0;
    const int bi = i < diam ? a.b[i] : 0;
    const int ci = i >= 1 ? a.c[i - 1] : 0;
    const int cn = i + 1 <= diam ? a.c[i] : 0;
    const int ai_num = a.valency() - bi - ci;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        int lhs = 0;
        for (int z = 0; z < n; ++z) lhs += a1[x][z] * ai[z][y];
        const int rhs = bp * prev[x][y] + (i == 0 ? 0 : ai_num) * ai[x][y] + cn * next[x][y];
        if (lhs != rhs) return false;
      }
  }
  // Rows beyond the diameter must vanish.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (d[x][y] > diam) return false;
  return true;
}

}  // namespace

TEST_CASE("sphere sizes examples") {
  using V = std::vector<std::size_t>;
  CHECK(bfs_partition(construct(FamilyId::cycle(6)), 0).sphere_sizes() == V{1, 2, 2, 1});
  const auto g = k33();
  for (int v = 0; v < 6; ++v) CHECK(bfs_partition(g, v).sphere_sizes() == V{1, 3, 2});
  CHECK(bfs_partition(construct(FamilyId::hamming(3, 2)), 0).sphere_sizes() == V{1, 3, 3, 1});
}

TEST_CASE("intersection array examples") {
  auto c6 = intersection_array(construct(FamilyId::cycle(6)));
  REQUIRE(is_distance_regular(c6));
  CHECK(std::get<IntersectionArray>(c6) == arr({2, 1, 1}, {1, 1, 2}));
  auto kb = intersection_array(k33());
  REQUIRE(is_distance_regular(kb));
  CHECK(std::get<IntersectionArray>(kb) == arr({3, 2}, {1, 3}));
  CHECK(std::get<IntersectionArray>(kb).to_string() == "{3,2;1,3}");
}

TEST_CASE("Z8 with 1,7,4 is not distance-regular") {
  const auto g = build_cayley(CayleySpec::from_codes(AbelianGroup::cyclic(8), {1, 4, 7}));
  const auto v = intersection_array(g);
  REQUIRE(std::holds_alternative<RegularityWitness>(v));
  const auto w = std::get<RegularityWitness>(v);
  CHECK(w.distance == 2);
  CHECK(w.quantity == 'c');
  CHECK(w.x == 0);
  CHECK(w.y == 2);
  CHECK(w.value == 1);
  CHECK(w.value != w.value_other);
  const auto d = oracle::floyd_warshall(g);
  CHECK(d[0][2] == 2);
  CHECK(d[0][5] == 2);
  CHECK(oracle::pair_counts(g, d, 0, 2).c == 1);
  CHECK(oracle::pair_counts(g, d, 0, 5).c == 2);
  CHECK(oracle::pair_counts(g, d, w.x_other, w.y_other).c == w.value_other);
  CHECK_FALSE(oracle::brute_array(g).has_value());
}

TEST_CASE("three-term recurrence examples") {
  const auto c6 = construct(FamilyId::cycle(6));
  CHECK(verify_three_term_recurrence(c6, arr({2, 1, 1}, {1, 1, 2})));
  CHECK(verify_three_term_recurrence(construct(FamilyId::complete(4)), arr({3}, {1})));
  CHECK_FALSE(verify_three_term_recurrence(c6, arr({2, 1, 1}, {1, 2, 2})));
  CHECK_FALSE(verify_three_term_recurrence(c6, arr({2, 1}, {1, 1})));
}

TEST_CASE("graph stats examples") {
  CHECK(graph_stats(construct(FamilyId::shrikhande())).max_clique == 3);
  CHECK(graph_stats(construct(FamilyId::hamming(2, 4))).max_clique == 4);
  const auto s = graph_stats(construct(FamilyId::hamming(3, 2)));
  CHECK(s.connected);
  CHECK(s.girth == 4);
  CHECK(s.diameter == 3);
  CHECK(s.valency == 3);
  CHECK_FALSE(s.odd_girth.has_value());
  const auto c7 = graph_stats(construct(FamilyId::cycle(7)));
  CHECK(c7.odd_girth == 7);
  CHECK(c7.girth == 7);
  const std::pair<int, int> path[] = {{0, 1}, {1, 2}};
  const auto p = graph_stats(Graph(3, path));
  CHECK_FALSE(p.girth.has_value());
  CHECK_FALSE(p.valency.has_value());
}

TEST_CASE("disconnected graphs are rejected") {
  const std::pair<int, int> edges[] = {{0, 1}, {2, 3}};
  const Graph g(4, edges);
  CHECK_THROWS_AS(intersection_array(g), DisconnectedGraph);
  CHECK_FALSE(graph_stats(g).connected);
  CHECK_FALSE(graph_stats(g).diameter.has_value());
  CHECK(bfs_distances(g, 0)[2] == -1);
  CHECK_FALSE(bfs_partition(g, 0).dist[3].has_value());
}

TEST_CASE("malformed graphs are rejected") {
  const std::pair<int, int> loop[] = {{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), StructuralError);
  const std::pair<int, int> twice[] = {{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(3, twice), StructuralError);
  const std::pair<int, int> range[] = {{0, 3}};
  CHECK_THROWS_AS(Graph(3, range), StructuralError);
}

TEST_CASE("edge list round trip") {
  for (const auto& id : {FamilyId::hamming(3, 3), FamilyId::shrikhande(), FamilyId::cycle(5)}) {
    const auto g = construct(id);
    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(read_edge_list(ss) == g);
  }
  for (const char* bad : {"", "3", "3 2\n0 1\n", "3 1\n1 0\n", "3 1\n0 3\n", "3 1\n0 1\n9"}) {
    std::istringstream in(bad);
    CHECK_THROWS_AS(read_edge_list(in), StructuralError);
  }
}

TEST_CASE("bitset and list representations agree") {
  const auto g = construct(FamilyId::folded_hypercube(6));
  const auto small = Graph::from_adjacency([&] {
    std::vector<std::vector<int>> adj;
    for (int v = 0; v < g.vertex_count(); ++v) adj.push_back(g.neighbors(v));
    return adj;
  }(), 0);
  CHECK_FALSE(small.has_bitsets());
  CHECK(g.has_bitsets());
  CHECK(intersection_array(small) == intersection_array(g));
  CHECK(distance_matrix(small) == distance_matrix(g));
}

TEST_CASE("corpus: verdicts agree with definitional counting and the recurrence") {
  const auto corpus = oracle::medium_corpus(16);
  int drg = 0, not_drg = 0;
  for (const auto& item : corpus) {
    CAPTURE(item.name);
    const auto& g = item.graph;
    const auto verdict = intersection_array(g);
    const auto brute = oracle::brute_array(g);
    REQUIRE(is_distance_regular(verdict) == brute.has_value());
    if (brute) {
      ++drg;
      const auto& a = std::get<IntersectionArray>(verdict);
      CHECK(a == *brute);
      CHECK(verify_three_term_recurrence(g, a));
      const int d = a.diameter();
      const int k = a.valency();
      CHECK(a.c_at(1) == 1);
      CHECK(a.b_at(d) == 0);
      CHECK(a.c_at(0) == 0);
      for (int i = 0; i <= d; ++i) CHECK(a.a_at(i) + a.b_at(i) + a.c_at(i) == k);
      CHECK(a.a_at(0) == 0);
      // a_1 = ... = a_i = 0 forbids odd cycles of length <= 2i + 1.
      int zeros = 0;
      while (zeros + 1 <= d && a.a_at(zeros + 1) == 0) ++zeros;
      const auto stats = graph_stats(g);
      if (zeros > 0 && stats.odd_girth) CHECK(*stats.odd_girth > 2 * zeros + 1);
      CHECK(stats.diameter == d);
      CHECK(stats.valency == k);
    } else {
      ++not_drg;
      const auto& w = std::get<RegularityWitness>(verdict);
      const auto dm = oracle::floyd_warshall(g);
      CHECK(dm[w.x][w.y] == w.distance);
      CHECK(dm[w.x_other][w.y_other] == w.distance);
      auto pick = [&](const oracle::Counts& c) { return w.quantity == 'c' ? c.c : w.quantity == 'a' ? c.a : c.b; };
      CHECK(pick(oracle::pair_counts(g, dm, w.x, w.y)) == w.value);
      CHECK(pick(oracle::pair_counts(g, dm, w.x_other, w.y_other)) == w.value_other);
      CHECK(w.value != w.value_other);
      // The array read off either pair's base vertex cannot satisfy the recurrence.
      for (int base : {w.x, w.x_other}) {
        const auto dist = bfs_distances(g, base);
        int diam = *std::max_element(dist.begin(), dist.end());
        IntersectionArray cand;
        for (int i = 0; i < diam; ++i) {
          int y = static_cast<int>(std::find(dist.begin(), dist.end(), i) - dist.begin());
          cand.b.push_back(oracle::pair_counts(g, dm, base, y).b);
        }
        for (int i = 1; i <= diam; ++i) {
          int y = static_cast<int>(std::find(dist.begin(), dist.end(), i) - dist.begin());
          cand.c.push_back(oracle::pair_counts(g, dm, base, y).c);
        }
        CHECK_FALSE(verify_three_term_recurrence(g, cand));
      }
    }
  }
  CHECK(drg > 100);
  CHECK(not_drg > 100);
}

TEST_CASE("recurrence check agrees with explicit matrix products") {
  const auto corpus = oracle::medium_corpus(10);
  for (const auto& item : corpus) {
    if (item.graph.vertex_count() > 16) continue;
    CAPTURE(item.name);
    const auto v = intersection_array(item.graph);
    if (!is_distance_regular(v)) continue;
    auto a = std::get<IntersectionArray>(v);
    CHECK(recurrence_by_matrices(item.graph, a));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      auto wrong = a;
      wrong.c[i] += 1;
      CHECK(verify_three_term_recurrence(item.graph, wrong) == recurrence_by_matrices(item.graph, wrong));
      CHECK_FALSE(verify_three_term_recurrence(item.graph, wrong));
    }
  }
}

TEST_CASE("distance is 1-Lipschitz along edges") {
  const auto corpus = oracle::medium_corpus(12);
  for (const auto& item : corpus) {
    const auto& g = item.graph;
    const auto full = oracle::floyd_warshall(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
      const auto p = bfs_partition(g, v);
      for (int x = 0; x < g.vertex_count(); ++x) {
        REQUIRE(p.dist[x].has_value());
        CHECK(*p.dist[x] == full[v][x]);
        for (int y : g.neighbors(x)) CHECK(std::abs(*p.dist[x] - *p.dist[y]) <= 1);
      }
      std::size_t total = 0;
      for (std::size_t i = 0; i < p.spheres.size(); ++i) {
        total += p.spheres[i].size();
        for (int x : p.spheres[i]) CHECK(*p.dist[x] == static_cast<int>(i));
      }
      CHECK(total == static_cast<std::size_t>(g.vertex_count()));
    }
  }
}

TEST_CASE("max clique against exhaustive search on small graphs") {
  for (const auto& item : oracle::cayley_corpus(7)) {
    const auto& g = item.graph;
    const int n = g.vertex_count();
    int best = 1;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      bool clique = true;
      for (int u = 0; u < n && clique; ++u)
        for (int v = u + 1; v < n && clique; ++v)
          if ((mask >> u & 1U) && (mask >> v & 1U) && !g.adjacent(u, v)) clique = false;
      if (clique) best = std::max(best, __builtin_popcount(mask));
    }
    CAPTURE(item.name);
    CHECK(max_clique_upto(g, 16) == best);
  }
}
