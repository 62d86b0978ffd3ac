#include "drgcay/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "drgcay/errors.hpp"

namespace drgcay {

CayleySpec::CayleySpec(AbelianGroup group, const std::vector<GroupElement>& connection_set) : group_(std::move(group)) {
  codes_.reserve(connection_set.size());
  for (const auto& e : connection_set) codes_.push_back(group_.encode(e));
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
}

CayleySpec CayleySpec::from_codes(AbelianGroup group, std::vector<int> codes) {
  CayleySpec spec;
  spec.group_ = std::move(group);
  for (int c : codes)
    if (c < 0 || c >= spec.group_.order()) throw StructuralError("element code out of range");
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  spec.codes_ = std::move(codes);
  return spec;
}

std::vector<GroupElement> CayleySpec::elements() const {
  std::vector<GroupElement> out;
  out.reserve(codes_.size());
  for (int c : codes_) out.push_back(group_.decode(c));
  return out;
}

bool CayleySpec::contains(int code) const { return std::binary_search(codes_.begin(), codes_.end(), code); }

std::string CayleySpec::set_to_string() const {
  std::string out;
  for (std::size_t i = 0; i < codes_.size(); ++i) {
    if (i) out += ',';
    out += group_.code_to_string(codes_[i]);
  }
  return out;
}

SpecValidation validate_spec(const CayleySpec& spec) {
  SpecValidation v;
  const auto& g = spec.group();
  v.excludes_identity = !spec.contains(0);
  v.inverse_closed = std::all_of(spec.codes().begin(), spec.codes().end(),
                                 [&](int c) { return spec.contains(g.neg_code(c)); });
  v.generates = span_codes(g, spec.codes()).is_whole_group();
  return v;
}

Graph build_cayley(const CayleySpec& spec) {
  const auto v = validate_spec(spec);
  if (!v.excludes_identity) throw InvalidConnectionSet("connection set contains the identity");
  if (!v.inverse_closed) throw InvalidConnectionSet("connection set is not inverse-closed");
  if (!v.generates) throw InvalidConnectionSet("connection set does not generate the group");
  const auto& g = spec.group();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x) {
    auto& row = adj[static_cast<std::size_t>(x)];
    row.reserve(spec.size());
    for (int s : spec.codes()) row.push_back(g.add_codes(x, s));
  }
  return Graph::from_adjacency(std::move(adj));
}

Graph SubgroupCayley::graph(const Subgroup& h) const {
  const auto& g = h.parent();
  std::vector<std::vector<int>> adj(h.elements().size());
  for (std::size_t i = 0; i < h.elements().size(); ++i) {
    for (int s : codes) {
      const int pos = h.index_of(g.add_codes(h.elements()[i], s));
      if (pos < 0) throw StructuralError("connection element outside the subgroup");
      adj[i].push_back(pos);
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

std::vector<NotationProfile> special_generators(const CayleySpec& spec) {
  const auto& g = spec.group();
  std::vector<NotationProfile> out;
  for (int s : spec.codes()) {
    const int minus_s = g.neg_code(s);
    if (minus_s < s) continue;  // one representative per inverse pair
    std::vector<int> rest;
    for (int t : spec.codes())
      if (t != s && t != minus_s) rest.push_back(t);
    Subgroup h = span_codes(g, rest);
    if (h.is_whole_group()) continue;
    const int order_s = element_order_code(g, s);
    const int index = subgroup_index(g, h);
    std::optional<SubgroupCayley> gamma1;
    const int two_s = g.multiple_code(s, 2);
    if (order_s == 4 && spec.contains(two_s)) {
      const int three_s = g.multiple_code(s, 3);
      std::vector<int> set1;
      for (int t : spec.codes())
        if (t != s && t != two_s && t != three_s) set1.push_back(t);
      gamma1 = SubgroupCayley{std::move(set1)};
    }
    out.push_back(NotationProfile{s, std::move(h), index, order_s, SubgroupCayley{std::move(rest)}, std::move(gamma1)});
  }
  return out;
}

bool coset_adjacency_check(const CayleySpec& spec, const NotationProfile& profile) {
  const auto& g = spec.group();
  const auto part = cosets(g, profile.h);
  const int minus_s = g.neg_code(profile.s);
  for (int x = 0; x < g.order(); ++x) {
    for (int y = 0; y < g.order(); ++y) {
      if (part.coset_of[static_cast<std::size_t>(x)] == part.coset_of[static_cast<std::size_t>(y)]) continue;
      const int diff = g.sub_codes(y, x);
      const bool adjacent = spec.contains(diff);
      const bool predicted = diff == profile.s || diff == minus_s;
      if (adjacent != predicted) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> parse_element_list(std::string_view text) {
  std::vector<std::vector<int>> out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc{}) throw StructuralError("cannot parse element list '" + std::string(text) + "'");
    i = static_cast<std::size_t>(ptr - text.data());
    return value;
  };
  skip_ws();
  if (i == text.size()) return out;
  while (true) {
    skip_ws();
    std::vector<int> elem;
    if (i < text.size() && text[i] == '(') {
      ++i;
      while (true) {
        elem.push_back(read_int());
        skip_ws();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        throw StructuralError("unterminated element in '" + std::string(text) + "'");
      }
    } else {
      elem.push_back(read_int());
    }
    out.push_back(std::move(elem));
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != ',') throw StructuralError("expected ',' in element list '" + std::string(text) + "'");
    ++i;
  }
  return out;
}

CayleySpec parse_spec(std::string_view group, std::string_view set) {
  const auto presentation = CyclicProduct::parse(group);
  std::vector<GroupElement> elems;
  for (const auto& coords : parse_element_list(set)) elems.push_back(presentation.to_canonical(coords));
  return CayleySpec(presentation.canonical(), elems);
}

}  // namespace drgcay
