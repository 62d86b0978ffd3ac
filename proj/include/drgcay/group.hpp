#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace drgcay {

/// A group element as a tuple of residues, one per invariant factor.
struct GroupElement {
  std::vector<int> coords;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Finite abelian group Z_{d1} x ... x Z_{dk} with d1 | d2 | ... | dk, each di >= 2.
///
/// The factor sequence is canonical, so equality of two groups is
/// isomorphism. Elements have a mixed-radix integer code in [0, order)
/// with the first coordinate most significant; code order is therefore
/// lexicographic order on tuples and code 0 is the identity.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  explicit AbelianGroup(std::vector<int> invariant_factors);

  static AbelianGroup cyclic(int n);

  const std::vector<int>& invariant_factors() const { return factors_; }
  int order() const { return order_; }
  std::size_t rank() const { return factors_.size(); }

  bool contains(const GroupElement& g) const;
  GroupElement identity() const { return GroupElement{std::vector<int>(rank(), 0)}; }

  int encode(const GroupElement& g) const;
  GroupElement decode(int code) const;

  int add_codes(int a, int b) const;
  int neg_code(int a) const;
  int sub_codes(int a, int b) const { return add_codes(a, neg_code(b)); }
  int multiple_code(int a, int times) const;

  /// `Z6`, `Z2xZ6`; the trivial group is `Z1`.
  std::string to_string() const;
  /// `(1,0)`, or a bare residue for cyclic groups.
  std::string element_to_string(const GroupElement& g) const;
  std::string code_to_string(int code) const { return element_to_string(decode(code)); }

  friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.factors_ == b.factors_; }
  /// Report order: by order, then rank, then factor sequence.
  friend std::strong_ordering operator<=>(const AbelianGroup& a, const AbelianGroup& b);

 private:
  std::vector<int> factors_;
  std::vector<int> strides_;
  int order_ = 1;
};

GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement neg(const AbelianGroup& g, const GroupElement& a);
int element_order(const AbelianGroup& g, const GroupElement& a);
int element_order_code(const AbelianGroup& g, int code);

/// Subgroup stored as an explicit, sorted set of element codes.
class Subgroup {
 public:
  Subgroup(AbelianGroup parent, std::vector<int> element_codes, std::vector<int> generator_codes);

  const AbelianGroup& parent() const { return parent_; }
  const std::vector<int>& elements() const { return elements_; }
  const std::vector<int>& generators() const { return generators_; }
  int order() const { return static_cast<int>(elements_.size()); }
  bool contains(int code) const { return member_[static_cast<std::size_t>(code)] != 0; }
  bool is_whole_group() const { return order() == parent_.order(); }
  /// Position of `code` inside elements(), or -1.
  int index_of(int code) const { return position_[static_cast<std::size_t>(code)]; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.elements_ == b.elements_;
  }

 private:
  AbelianGroup parent_;
  std::vector<int> elements_;
  std::vector<int> generators_;
  std::vector<char> member_;
  std::vector<int> position_;
};

/// Smallest subgroup containing the given codes (closure by breadth-first addition).
Subgroup span_codes(const AbelianGroup& g, std::span<const int> codes);
Subgroup span(const AbelianGroup& g, std::span<const GroupElement> elements);

struct CosetPartition {
  int index = 0;
  std::vector<int> coset_of;            // indexed by element code
  std::vector<std::vector<int>> cosets;  // cosets[0] is the subgroup itself
};

int subgroup_index(const AbelianGroup& g, const Subgroup& h);
CosetPartition cosets(const AbelianGroup& g, const Subgroup& h);

/// One group per isomorphism class of order n, sorted by rank then factors.
std::vector<AbelianGroup> enumerate_groups(int n);

/// A direct product of cyclic groups in any order (e.g. Z6 x Z2), together
/// with an explicit isomorphism onto its invariant-factor form.
///
/// Each factor is split into prime-power components; components of each prime
/// are dealt out to invariant-factor slots by ascending exponent and recombined
/// with the Chinese remainder theorem.
class CyclicProduct {
 public:
  explicit CyclicProduct(std::vector<int> orders);

  static CyclicProduct parse(std::string_view spelling);

  const std::vector<int>& orders() const { return orders_; }
  const AbelianGroup& canonical() const { return canonical_; }
  int order() const { return canonical_.order(); }

  GroupElement to_canonical(std::span<const int> coords) const;
  std::string to_string() const;

 private:
  struct Component {
    std::size_t factor = 0;  // input factor index
    int modulus = 1;         // p^a
    std::size_t slot = 0;    // invariant factor index
    std::int64_t weight = 0; // CRT idempotent modulo the slot's factor
  };
  std::vector<int> orders_;
  AbelianGroup canonical_;
  std::vector<Component> components_;
};

}  // namespace drgcay
