#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drgcay/graph.hpp"
#include "drgcay/group.hpp"

namespace drgcay {

/// A group and a connection set, the set held as sorted element codes.
class CayleySpec {
 public:
  CayleySpec(AbelianGroup group, const std::vector<GroupElement>& connection_set);
  static CayleySpec from_codes(AbelianGroup group, std::vector<int> codes);

  const AbelianGroup& group() const { return group_; }
  const std::vector<int>& codes() const { return codes_; }
  std::vector<GroupElement> elements() const;
  bool contains(int code) const;
  std::size_t size() const { return codes_.size(); }

  std::string set_to_string() const;

  friend bool operator==(const CayleySpec& a, const CayleySpec& b) {
    return a.group_ == b.group_ && a.codes_ == b.codes_;
  }
  friend std::strong_ordering operator<=>(const CayleySpec& a, const CayleySpec& b) {
    if (auto c = a.group_ <=> b.group_; c != 0) return c;
    return a.codes_ <=> b.codes_;
  }

 private:
  CayleySpec() = default;
  AbelianGroup group_;
  std::vector<int> codes_;
};

struct SpecValidation {
  bool inverse_closed = false;
  bool excludes_identity = false;
  bool generates = false;

  bool ok() const { return inverse_closed && excludes_identity && generates; }
};

SpecValidation validate_spec(const CayleySpec& spec);

/// Throws InvalidConnectionSet naming the failed check. Vertex v is the element with code v.
Graph build_cayley(const CayleySpec& spec);

/// Cayley graph on a subgroup H; vertex i is H.elements()[i].
struct SubgroupCayley {
  std::vector<int> codes;  // connection set, codes in the parent group

  Graph graph(const Subgroup& h) const;
};

/// A special generator s (span(S \ {s,-s}) != G) and the derived quantities.
struct NotationProfile {
  int s = 0;  // element code
  Subgroup h;
  int index = 0;
  int order_s = 0;
  SubgroupCayley gamma0;                // S \ {s, -s}
  std::optional<SubgroupCayley> gamma1; // S \ {s, 2s, 3s}, when o(s) = 4 and 2s in S
};

/// One profile per inverse pair {s,-s} whose removal leaves a proper span;
/// the representative is the smaller code of s and -s.
std::vector<NotationProfile> special_generators(const CayleySpec& spec);

/// Between different H-cosets, g ~ h exactly when h - g is s or -s.
bool coset_adjacency_check(const CayleySpec& spec, const NotationProfile& profile);

/// Parses `1,5,3` or `(1,0),(5,0)` into elements of a presentation.
std::vector<std::vector<int>> parse_element_list(std::string_view text);

/// Parses `--group`/`--set` spellings. The group may be any product of
/// cyclic groups; elements are mapped to the invariant-factor form.
CayleySpec parse_spec(std::string_view group, std::string_view set);

}  // namespace drgcay
