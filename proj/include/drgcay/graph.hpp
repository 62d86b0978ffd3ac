#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace drgcay {

/// Fixed-size bit row used for adjacency and cell masks.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  std::size_t count() const;
  /// |a & b| without materializing the intersection.
  static std::size_t count_and(const Bitset& a, const Bitset& b);

  std::span<const std::uint64_t> words() const { return words_; }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

/// Finite undirected simple graph on vertices 0..n-1.
class Graph {
 public:
  /// Adjacency rows are kept as bitsets up to this many vertices.
  static constexpr int kDefaultBitsetThreshold = 4096;

  Graph() = default;
  /// Throws StructuralError on loops, out-of-range endpoints or repeated edges.
  Graph(int vertex_count, std::span<const std::pair<int, int>> edges,
        int bitset_threshold = kDefaultBitsetThreshold);
  /// Builds from neighbor lists; the lists must already be symmetric.
  static Graph from_adjacency(std::vector<std::vector<int>> adjacency,
                              int bitset_threshold = kDefaultBitsetThreshold);

  int vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;
  bool has_bitsets() const { return !rows_.empty(); }
  const Bitset& row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  std::vector<std::pair<int, int>> edges() const;

  /// Relabels vertex v to perm[v].
  Graph permuted(std::span<const int> perm) const;
  /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const int> vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void finish(int bitset_threshold);

  int n_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<Bitset> rows_;
};

/// Breadth-first distances from one base vertex.
struct DistancePartition {
  int base = 0;
  std::vector<std::optional<int>> dist;  // nullopt: unreachable
  std::vector<std::vector<int>> spheres;  // spheres[i] = N_i(base), ascending

  std::vector<std::size_t> sphere_sizes() const;
};

DistancePartition bfs_partition(const Graph& g, int v);
/// Plain distance vector with -1 for unreachable; the hot-path form of bfs_partition.
std::vector<int> bfs_distances(const Graph& g, int v);
/// Full distance matrix, -1 for unreachable.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

/// {b0..b_{d-1}; c1..c_d}. Stored with b_d = 0 and c_0 = 0 implicit.
struct IntersectionArray {
  std::vector<int> b;
  std::vector<int> c;

  int diameter() const { return static_cast<int>(b.size()); }
  int valency() const { return b.empty() ? 0 : b[0]; }
  int b_at(int i) const;
  int c_at(int i) const;
  int a_at(int i) const { return valency() - b_at(i) - c_at(i); }
  std::string to_string() const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
  friend auto operator<=>(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Two pairs at the same distance whose named intersection count differs.
struct RegularityWitness {
  int distance = 0;
  int x = 0, y = 0;              // reference pair
  int x_other = 0, y_other = 0;  // offending pair
  char quantity = 'c';           // 'c', 'a' or 'b'
  int value = 0, value_other = 0;

  friend bool operator==(const RegularityWitness&, const RegularityWitness&) = default;
};

using DRGVerdict = std::variant<IntersectionArray, RegularityWitness>;

inline bool is_distance_regular(const DRGVerdict& v) { return std::holds_alternative<IntersectionArray>(v); }

/// Intersection counts (c, a, b) for the pair (x, y) at distance i, given distances from x.
struct PairCounts {
  int c = 0, a = 0, b = 0;
};
PairCounts pair_counts(const Graph& g, std::span<const int> dist_from_x, int y);

/// Throws DisconnectedGraph. Witness is the lexicographically least offending (i, x', y').
DRGVerdict intersection_array(const Graph& g);

/// Checks A_1 A_i = b_{i-1} A_{i-1} + a_i A_i + c_{i+1} A_{i+1} exactly for 0 <= i <= d.
bool verify_three_term_recurrence(const Graph& g, const IntersectionArray& arr);

struct GraphStats {
  bool connected = false;
  std::optional<int> diameter;  // only for connected graphs
  std::optional<int> valency;   // nullopt when irregular
  std::optional<int> girth;     // nullopt when acyclic
  std::optional<int> odd_girth; // nullopt when bipartite
  int max_clique = 0;           // capped at clique_cap
};

GraphStats graph_stats(const Graph& g, int clique_cap = 8);
int max_clique_upto(const Graph& g, int cap);

/// Edge-list text: `n m`, then m lines `u v` with u < v.
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace drgcay
