#include "drgcay/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "drgcay/errors.hpp"

namespace drgcay {

std::size_t Bitset::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::size_t Bitset::count_and(const Bitset& a, const Bitset& b) {
  std::size_t total = 0;
  const std::size_t n = std::min(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) total += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
  return total;
}

Graph::Graph(int vertex_count, std::span<const std::pair<int, int>> edges, int bitset_threshold) : n_(vertex_count) {
  if (vertex_count < 0) throw StructuralError("vertex count must be nonnegative");
  adj_.assign(static_cast<std::size_t>(n_), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw StructuralError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    if (u == v) throw StructuralError("loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) throw StructuralError("repeated edge");
  }
  finish(bitset_threshold);
}

Graph Graph::from_adjacency(std::vector<std::vector<int>> adjacency, int bitset_threshold) {
  Graph g;
  g.n_ = static_cast<int>(adjacency.size());
  g.adj_ = std::move(adjacency);
  for (int v = 0; v < g.n_; ++v) {
    auto& row = g.adj_[static_cast<std::size_t>(v)];
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) throw StructuralError("repeated edge");
    for (int u : row) {
      if (u < 0 || u >= g.n_) throw StructuralError("neighbor out of range");
      if (u == v) throw StructuralError("loop at vertex " + std::to_string(v));
    }
  }
  for (int v = 0; v < g.n_; ++v)
    for (int u : g.adj_[static_cast<std::size_t>(v)]) {
      const auto& back = g.adj_[static_cast<std::size_t>(u)];
      if (!std::binary_search(back.begin(), back.end(), v)) throw StructuralError("adjacency is not symmetric");
    }
  g.finish(bitset_threshold);
  return g;
}

void Graph::finish(int bitset_threshold) {
  edges_ = 0;
  for (const auto& row : adj_) edges_ += row.size();
  edges_ /= 2;
  rows_.clear();
  if (n_ <= bitset_threshold) {
    rows_.assign(static_cast<std::size_t>(n_), Bitset(static_cast<std::size_t>(n_)));
    for (int v = 0; v < n_; ++v)
      for (int u : adj_[static_cast<std::size_t>(v)]) rows_[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
  }
}

bool Graph::adjacent(int u, int v) const {
  if (has_bitsets()) return row(u).test(static_cast<std::size_t>(v));
  const auto& r = neighbors(u);
  return std::binary_search(r.begin(), r.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) throw StructuralError("permutation size mismatch");
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u)) adj[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])].push_back(perm[static_cast<std::size_t>(v)]);
  return from_adjacency(std::move(adj));
}

Graph Graph::induced(std::span<const int> vertices) const {
  std::vector<int> pos(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int u : neighbors(vertices[i]))
      if (pos[static_cast<std::size_t>(u)] >= 0) adj[i].push_back(pos[static_cast<std::size_t>(u)]);
  return from_adjacency(std::move(adj));
}

std::vector<std::size_t> DistancePartition::sphere_sizes() const {
  std::vector<std::size_t> out;
  out.reserve(spheres.size());
  for (const auto& s : spheres) out.push_back(s.size());
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int v) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n) throw StructuralError("base vertex out of range");
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<std::size_t>(n));
  dist[static_cast<std::size_t>(v)] = 0;
  queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int x = queue[head];
    for (int y : g.neighbors(x)) {
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

DistancePartition bfs_partition(const Graph& g, int v) {
  const auto dist = bfs_distances(g, v);
  DistancePartition out;
  out.base = v;
  out.dist.resize(dist.size());
  for (std::size_t u = 0; u < dist.size(); ++u) {
    if (dist[u] < 0) continue;
    out.dist[u] = dist[u];
    if (static_cast<std::size_t>(dist[u]) >= out.spheres.size()) out.spheres.resize(static_cast<std::size_t>(dist[u]) + 1);
    out.spheres[static_cast<std::size_t>(dist[u])].push_back(static_cast<int>(u));
  }
  return out;
}

std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

int IntersectionArray::b_at(int i) const {
  if (i < 0 || i >= diameter()) return 0;
  return b[static_cast<std::size_t>(i)];
}

int IntersectionArray::c_at(int i) const {
  if (i <= 0 || i > diameter()) return 0;
  return c[static_cast<std::size_t>(i - 1)];
}

std::string IntersectionArray::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
  os << ';';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << '}';
  return os.str();
}

PairCounts pair_counts(const Graph& g, std::span<const int> dist_from_x, int y) {
  PairCounts out;
  const int i = dist_from_x[static_cast<std::size_t>(y)];
  for (int z : g.neighbors(y)) {
    const int dz = dist_from_x[static_cast<std::size_t>(z)];
    if (dz == i - 1) ++out.c;
    else if (dz == i) ++out.a;
    else if (dz == i + 1) ++out.b;
  }
  return out;
}

DRGVerdict intersection_array(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) throw DisconnectedGraph("empty graph");
  {
    const auto d0 = bfs_distances(g, 0);
    if (std::find(d0.begin(), d0.end(), -1) != d0.end()) throw DisconnectedGraph("graph is disconnected");
  }

  struct Reference {
    int x = -1, y = -1;
    PairCounts counts;
  };
  std::vector<Reference> refs;
  std::optional<RegularityWitness> witness;

  for (int x = 0; x < n; ++x) {
    const auto dist = bfs_distances(g, x);
    for (int y = 0; y < n; ++y) {
      const int i = dist[static_cast<std::size_t>(y)];
      // Only strictly smaller distances can improve on an existing witness.
      if (witness && i >= witness->distance) continue;
      if (static_cast<std::size_t>(i) >= refs.size()) refs.resize(static_cast<std::size_t>(i) + 1);
      const PairCounts pc = pair_counts(g, dist, y);
      auto& ref = refs[static_cast<std::size_t>(i)];
      if (ref.x < 0) {
        ref = {x, y, pc};
        continue;
      }
      char q = 0;
      int v0 = 0, v1 = 0;
      if (pc.c != ref.counts.c) q = 'c', v0 = ref.counts.c, v1 = pc.c;
      else if (pc.a != ref.counts.a) q = 'a', v0 = ref.counts.a, v1 = pc.a;
      else if (pc.b != ref.counts.b) q = 'b', v0 = ref.counts.b, v1 = pc.b;
      if (q != 0) witness = RegularityWitness{i, ref.x, ref.y, x, y, q, v0, v1};
    }
  }
  if (witness) return *witness;

  IntersectionArray arr;
  const int d = static_cast<int>(refs.size()) - 1;
  for (int i = 0; i < d; ++i) arr.b.push_back(refs[static_cast<std::size_t>(i)].counts.b);
  for (int i = 1; i <= d; ++i) arr.c.push_back(refs[static_cast<std::size_t>(i)].counts.c);
  return arr;
}

bool verify_three_term_recurrence(const Graph& g, const IntersectionArray& arr) {
  if (arr.b.size() != arr.c.size()) throw StructuralError("intersection array has mismatched b and c lengths");
  const int n = g.vertex_count();
  const int d = arr.diameter();
  const int k = arr.valency();
  const auto dm = distance_matrix(g);
  for (int i = 0; i <= d; ++i) {
    const int b_prev = i >= 1 ? arr.b_at(i - 1) : 0;
    const int a_i = i == 0 ? 0 : k - arr.b_at(i) - arr.c_at(i);
    const int c_next = i + 1 <= d ? arr.c_at(i + 1) : 0;
    for (int x = 0; x < n; ++x) {
      const auto& row_x = dm[static_cast<std::size_t>(x)];
      for (int y = 0; y < n; ++y) {
        // (A_1 A_i)_{xy}: neighbours z of x with distance(z, y) = i.
        long long lhs = 0;
        for (int z : g.neighbors(x))
          if (dm[static_cast<std::size_t>(z)][static_cast<std::size_t>(y)] == i) ++lhs;
        const int dxy = row_x[static_cast<std::size_t>(y)];
        long long rhs = 0;
        if (dxy == i - 1) rhs += b_prev;
        if (dxy == i) rhs += a_i;
        if (dxy == i + 1) rhs += c_next;
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

namespace {

void clique_search(const Graph& g, std::vector<int>& candidates, int size, int cap, int& best) {
  if (size > best) best = size;
  if (best >= cap) return;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (size + static_cast<int>(candidates.size() - i) <= best) return;
    const int v = candidates[i];
    std::vector<int> next;
    for (std::size_t j = i + 1; j < candidates.size(); ++j)
      if (g.adjacent(v, candidates[j])) next.push_back(candidates[j]);
    clique_search(g, next, size + 1, cap, best);
    if (best >= cap) return;
  }
}

}  // namespace

int max_clique_upto(const Graph& g, int cap) {
  if (cap <= 0 || g.vertex_count() == 0) return 0;
  int best = 0;
  std::vector<int> all(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) all[static_cast<std::size_t>(v)] = v;
  clique_search(g, all, 0, cap, best);
  return std::min(best, cap);
}

GraphStats graph_stats(const Graph& g, int clique_cap) {
  GraphStats s;
  const int n = g.vertex_count();
  if (n == 0) return s;
  s.valency = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != *s.valency) {
      s.valency.reset();
      break;
    }
  int diameter = 0;
  bool connected = true;
  int girth = std::numeric_limits<int>::max();
  int odd_girth = std::numeric_limits<int>::max();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue{root};
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (int y : g.neighbors(x)) {
        auto& dy = dist[static_cast<std::size_t>(y)];
        const int dx = dist[static_cast<std::size_t>(x)];
        if (dy < 0) {
          dy = dx + 1;
          parent[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        } else if (parent[static_cast<std::size_t>(x)] != y) {
          girth = std::min(girth, dx + dy + 1);
          if (dx == dy) odd_girth = std::min(odd_girth, 2 * dx + 1);
        }
      }
    }
    for (int d : dist) {
      if (d < 0) connected = false;
      diameter = std::max(diameter, d);
    }
  }
  s.connected = connected;
  if (connected) s.diameter = diameter;
  if (girth != std::numeric_limits<int>::max()) s.girth = girth;
  if (odd_girth != std::numeric_limits<int>::max()) s.odd_girth = odd_girth;
  s.max_clique = max_clique_upto(g, clique_cap);
  return s;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw StructuralError("edge list: bad header (expected 'n m')");
  if (n > std::numeric_limits<int>::max()) throw StructuralError("edge list: too many vertices");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) throw StructuralError("edge list: expected " + std::to_string(m) + " edges");
    if (!(0 <= u && u < v && v < n))
      throw StructuralError("edge list: line " + std::to_string(i + 2) + " must satisfy 0 <= u < v < n");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw StructuralError("edge list: trailing content");
  return Graph(static_cast<int>(n), edges);
}

}  // namespace drgcay
