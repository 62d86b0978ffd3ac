#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drgcay/cayley.hpp"
#include "drgcay/graph.hpp"

namespace drgcay {

enum class FamilyKind {
  CompleteGraph,            // K_n            (n)
  Cycle,                    // C_n            (n)
  CompleteBipartite,        // K_{m,n}        (m, n)
  CompleteTripartite222,    // K_{2,2,2}
  K66MinusPerfectMatching,  // K_{6,6} - 6K_2
  Hamming,                  // H(d, q)        (d, q)
  Shrikhande,
  Doob,                     // D(n, m)        (n, m)
  FoldedHypercube,          // folded d-cube  (d)
};

struct FamilyId {
  FamilyKind kind = FamilyKind::CompleteGraph;
  int p1 = 0;
  int p2 = 0;

  static FamilyId complete(int n) { return {FamilyKind::CompleteGraph, n, 0}; }
  static FamilyId cycle(int n) { return {FamilyKind::Cycle, n, 0}; }
  static FamilyId complete_bipartite(int m, int n) { return {FamilyKind::CompleteBipartite, m, n}; }
  static FamilyId k222() { return {FamilyKind::CompleteTripartite222, 0, 0}; }
  static FamilyId k66_minus_matching() { return {FamilyKind::K66MinusPerfectMatching, 0, 0}; }
  static FamilyId hamming(int d, int q) { return {FamilyKind::Hamming, d, q}; }
  static FamilyId shrikhande() { return {FamilyKind::Shrikhande, 0, 0}; }
  static FamilyId doob(int n, int m) { return {FamilyKind::Doob, n, m}; }
  static FamilyId folded_hypercube(int d) { return {FamilyKind::FoldedHypercube, d, 0}; }

  /// Report label, e.g. `H(3,2)`, `K3,3`, `K6,6-6K2`, `FoldedCube(6)`.
  std::string label() const;
  /// Number of vertices of the constructed graph.
  long long vertex_count() const;
  /// Whether this instance is one of the graphs of the classification list
  /// (Doob needs n >= 1, complete graphs only up to K_4, only K_{3,3} among bipartite graphs).
  bool in_classification() const;
  /// Throws BadParameters naming the violated constraint.
  void validate() const;

  friend bool operator==(const FamilyId&, const FamilyId&) = default;
  friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
};

/// CLI spelling: `hamming` + `3,2`, `folded-cube` + `6`, `doob` + `1,1`, ...
FamilyId parse_family(std::string_view name, std::string_view params);
std::vector<std::string> family_names();

/// Vertex labels: Hamming and Doob use mixed radix (first factor most
/// significant); the folded cube uses the block representative with top bit 0;
/// K_{m,n} puts the m-side first; Shrikhande is its Cayley graph on Z4 x Z4.
Graph construct(const FamilyId& id);

/// The Cayley spec realising the family; throws BadParameters for K_{m,n}, m != n.
CayleySpec cayley_spec_for(const FamilyId& id);

/// Vertex (u, v) becomes u * |V(g2)| + v.
Graph cartesian_product(const Graph& g1, const Graph& g2);

/// Quotient of H(d, 2) by antipodal pairs; throws BadParameters for d < 2.
Graph antipodal_quotient_hypercube(int d);

/// Every family instance (with the parameters that make the graph have this
/// many vertices) that could be a Cayley graph, i.e. is vertex-transitive.
std::vector<FamilyId> families_with_order(int n);

/// Listed-family instances with 2 <= order <= max_order.
std::vector<FamilyId> classification_instances_upto(int max_order);

}  // namespace drgcay
