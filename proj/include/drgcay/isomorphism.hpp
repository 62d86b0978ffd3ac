#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "drgcay/graph.hpp"

namespace drgcay {

struct InvariantSummary {
  int vertex_count = 0;
  std::vector<int> degrees;                         // sorted
  std::vector<std::vector<int>> distance_signature; // sorted multiset of per-vertex sphere sizes

  friend bool operator==(const InvariantSummary&, const InvariantSummary&) = default;
};

/// Canonical adjacency encoding: 4-byte big-endian vertex count followed by
/// the upper triangle of the relabelled adjacency matrix, row-major, packed
/// most significant bit first. Equal bytes <=> isomorphic graphs.
struct CanonicalCertificate {
  std::vector<std::uint8_t> bytes;
  InvariantSummary summary;

  std::string hex() const;

  friend bool operator==(const CanonicalCertificate& a, const CanonicalCertificate& b) { return a.bytes == b.bytes; }
  friend auto operator<=>(const CanonicalCertificate& a, const CanonicalCertificate& b) { return a.bytes <=> b.bytes; }
};

struct CanonOptions {
  std::uint64_t node_budget = 10'000'000;
};

struct CanonicalLabeling {
  CanonicalCertificate certificate;
  std::vector<int> order;  // order[i] = vertex placed at canonical position i
  std::uint64_t nodes = 0; // search nodes visited
  std::vector<std::vector<int>> automorphisms;  // generators found during the search
};

/// Individualization-refinement with automorphism pruning. Throws ResourceCap
/// when the node budget is exceeded.
CanonicalLabeling canonical_labeling(const Graph& g, const CanonOptions& options = {});
CanonicalCertificate canonical_form(const Graph& g, const CanonOptions& options = {});

InvariantSummary invariant_summary(const Graph& g);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<std::vector<int>> mapping;  // mapping[v] in g2 for v in g1; validated
};

/// Edge-preserving bijection check.
bool is_isomorphism(const Graph& g1, const Graph& g2, std::span<const int> mapping);

/// Mapping g1 -> g2 built from two canonical labelings of isomorphic graphs.
std::vector<int> mapping_from_labelings(const CanonicalLabeling& l1, const CanonicalLabeling& l2);

IsomorphismResult are_isomorphic(const Graph& g1, const Graph& g2, const CanonOptions& options = {});

}  // namespace drgcay
