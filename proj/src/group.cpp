#include "drgcay/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include "drgcay/errors.hpp"

namespace drgcay {

namespace {

std::vector<std::pair<int, int>> factorize(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    int a = 0;
    while (n % p == 0) {
      n /= p;
      ++a;
    }
    if (a > 0) out.emplace_back(p, a);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int ipow(int base, int exp) {
  int r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Partitions of n with parts in ascending order, generated in a fixed order.
void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (n == 0) {
    std::vector<int> asc(cur.rbegin(), cur.rend());
    out.push_back(std::move(asc));
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from per-prime ascending exponent lists.
std::vector<int> assemble_factors(const std::vector<int>& primes, const std::vector<std::vector<int>>& exps) {
  std::size_t rank = 0;
  for (const auto& e : exps) rank = std::max(rank, e.size());
  std::vector<int> factors(rank, 1);
  for (std::size_t p = 0; p < primes.size(); ++p) {
    const std::size_t offset = rank - exps[p].size();
    for (std::size_t k = 0; k < exps[p].size(); ++k) factors[offset + k] *= ipow(primes[p], exps[p][k]);
  }
  return factors;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  std::int64_t g = m, x = 0, x1 = 1, a1 = ((a % m) + m) % m;
  while (a1 != 0) {
    const std::int64_t q = g / a1;
    std::tie(g, a1) = std::make_tuple(a1, g - q * a1);
    std::tie(x, x1) = std::make_tuple(x1, x - q * x1);
  }
  return ((x % m) + m) % m;
}

}  // namespace

AbelianGroup::AbelianGroup(std::vector<int> invariant_factors) : factors_(std::move(invariant_factors)) {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw StructuralError("invariant factor must be >= 2");
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0)
      throw StructuralError("invariant factors must divide one another: " + std::to_string(factors_[i]) +
                            " does not divide " + std::to_string(factors_[i + 1]));
  }
  strides_.assign(factors_.size(), 1);
  order_ = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    strides_[i] = order_;
    order_ *= factors_[i];
  }
}

AbelianGroup AbelianGroup::cyclic(int n) {
  if (n < 1) throw StructuralError("cyclic group order must be >= 1");
  return n == 1 ? AbelianGroup{} : AbelianGroup{std::vector<int>{n}};
}

bool AbelianGroup::contains(const GroupElement& g) const {
  if (g.coords.size() != factors_.size()) return false;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (g.coords[i] < 0 || g.coords[i] >= factors_[i]) return false;
  return true;
}

int AbelianGroup::encode(const GroupElement& g) const {
  if (g.coords.size() != factors_.size())
    throw StructuralError("element has " + std::to_string(g.coords.size()) + " coordinates, group " + to_string() +
                          " has rank " + std::to_string(rank()));
  int code = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (g.coords[i] < 0 || g.coords[i] >= factors_[i])
      throw StructuralError("residue " + std::to_string(g.coords[i]) + " out of range for Z" +
                            std::to_string(factors_[i]));
    code += g.coords[i] * strides_[i];
  }
  return code;
}

GroupElement AbelianGroup::decode(int code) const {
  if (code < 0 || code >= order_) throw StructuralError("element code out of range");
  GroupElement g{std::vector<int>(factors_.size())};
  for (std::size_t i = 0; i < factors_.size(); ++i) g.coords[i] = (code / strides_[i]) % factors_[i];
  return g;
}

int AbelianGroup::add_codes(int a, int b) const {
  int code = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int d = factors_[i];
    int r = (a / strides_[i]) % d + (b / strides_[i]) % d;
    if (r >= d) r -= d;
    code += r * strides_[i];
  }
  return code;
}

int AbelianGroup::neg_code(int a) const {
  int code = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int d = factors_[i];
    const int r = (a / strides_[i]) % d;
    code += (r == 0 ? 0 : d - r) * strides_[i];
  }
  return code;
}

int AbelianGroup::multiple_code(int a, int times) const {
  int code = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const int d = factors_[i];
    const long long r = static_cast<long long>((a / strides_[i]) % d) * times;
    code += static_cast<int>(((r % d) + d) % d) * strides_[i];
  }
  return code;
}

std::string AbelianGroup::to_string() const {
  if (factors_.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += 'Z' + std::to_string(factors_[i]);
  }
  return out;
}

std::string AbelianGroup::element_to_string(const GroupElement& g) const {
  if (g.coords.size() == 1) return std::to_string(g.coords[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(g.coords[i]);
  }
  return out + ")";
}

std::strong_ordering operator<=>(const AbelianGroup& a, const AbelianGroup& b) {
  if (auto c = a.order_ <=> b.order_; c != 0) return c;
  if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
  return a.factors_ <=> b.factors_;
}

GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
  return g.decode(g.add_codes(g.encode(a), g.encode(b)));
}

GroupElement neg(const AbelianGroup& g, const GroupElement& a) { return g.decode(g.neg_code(g.encode(a))); }

int element_order(const AbelianGroup& g, const GroupElement& a) {
  g.encode(a);  // validates
  int result = 1;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    const int d = g.invariant_factors()[i];
    result = std::lcm(result, d / std::gcd(d, a.coords[i]));
  }
  return result;
}

int element_order_code(const AbelianGroup& g, int code) { return element_order(g, g.decode(code)); }

Subgroup::Subgroup(AbelianGroup parent, std::vector<int> element_codes, std::vector<int> generator_codes)
    : parent_(std::move(parent)), elements_(std::move(element_codes)), generators_(std::move(generator_codes)) {
  std::sort(elements_.begin(), elements_.end());
  member_.assign(static_cast<std::size_t>(parent_.order()), 0);
  position_.assign(static_cast<std::size_t>(parent_.order()), -1);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    member_[static_cast<std::size_t>(elements_[i])] = 1;
    position_[static_cast<std::size_t>(elements_[i])] = static_cast<int>(i);
  }
}

Subgroup span_codes(const AbelianGroup& g, std::span<const int> codes) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> members{0};
  seen[0] = 1;
  std::vector<int> gens;
  for (int c : codes) {
    if (c < 0 || c >= g.order()) throw StructuralError("element code out of range");
    if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end()) gens.push_back(c);
  }
  // In a finite group the additive closure of T already contains all inverses.
  for (std::size_t head = 0; head < members.size(); ++head) {
    const int x = members[head];
    for (int t : gens) {
      const int y = g.add_codes(x, t);
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        members.push_back(y);
      }
    }
  }
  return Subgroup(g, std::move(members), std::move(gens));
}

Subgroup span(const AbelianGroup& g, std::span<const GroupElement> elements) {
  std::vector<int> codes;
  codes.reserve(elements.size());
  for (const auto& e : elements) codes.push_back(g.encode(e));
  return span_codes(g, codes);
}

int subgroup_index(const AbelianGroup& g, const Subgroup& h) {
  if (h.parent() != g) throw StructuralError("subgroup belongs to a different group");
  return g.order() / h.order();
}

CosetPartition cosets(const AbelianGroup& g, const Subgroup& h) {
  CosetPartition out;
  out.coset_of.assign(static_cast<std::size_t>(g.order()), -1);
  out.index = subgroup_index(g, h);
  for (int rep = 0; rep < g.order(); ++rep) {
    if (out.coset_of[static_cast<std::size_t>(rep)] >= 0) continue;
    const int id = static_cast<int>(out.cosets.size());
    std::vector<int> coset;
    coset.reserve(h.elements().size());
    for (int e : h.elements()) {
      const int x = g.add_codes(rep, e);
      out.coset_of[static_cast<std::size_t>(x)] = id;
      coset.push_back(x);
    }
    std::sort(coset.begin(), coset.end());
    out.cosets.push_back(std::move(coset));
  }
  return out;
}

std::vector<AbelianGroup> enumerate_groups(int n) {
  if (n < 1) throw StructuralError("group order must be >= 1");
  if (n == 1) return {AbelianGroup{}};
  const auto pf = factorize(n);
  std::vector<int> primes;
  std::vector<std::vector<std::vector<int>>> choices;
  for (auto [p, a] : pf) {
    primes.push_back(p);
    std::vector<int> cur;
    std::vector<std::vector<int>> parts;
    partitions(a, a, cur, parts);
    choices.push_back(std::move(parts));
  }
  std::vector<AbelianGroup> out;
  std::vector<std::size_t> idx(primes.size(), 0);
  while (true) {
    std::vector<std::vector<int>> exps;
    for (std::size_t p = 0; p < primes.size(); ++p) exps.push_back(choices[p][idx[p]]);
    out.emplace_back(assemble_factors(primes, exps));
    std::size_t p = 0;
    while (p < idx.size() && ++idx[p] == choices[p].size()) idx[p++] = 0;
    if (p == idx.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

CyclicProduct::CyclicProduct(std::vector<int> orders) : orders_(std::move(orders)) {
  struct Raw {
    std::size_t factor;
    int prime, exponent, modulus;
  };
  std::map<int, std::vector<Raw>> by_prime;
  for (std::size_t j = 0; j < orders_.size(); ++j) {
    if (orders_[j] < 1) throw StructuralError("cyclic factor order must be >= 1");
    for (auto [p, a] : factorize(orders_[j])) by_prime[p].push_back({j, p, a, ipow(p, a)});
  }
  std::size_t rank = 0;
  for (auto& [p, comps] : by_prime) {
    // Ties in exponent: components of larger input factors go to larger slots.
    std::stable_sort(comps.begin(), comps.end(), [&](const Raw& x, const Raw& y) {
      if (x.exponent != y.exponent) return x.exponent < y.exponent;
      return orders_[x.factor] < orders_[y.factor];
    });
    rank = std::max(rank, comps.size());
  }
  std::vector<int> factors(rank, 1);
  for (auto& [p, comps] : by_prime) {
    const std::size_t offset = rank - comps.size();
    for (std::size_t k = 0; k < comps.size(); ++k) {
      factors[offset + k] *= comps[k].modulus;
      components_.push_back({comps[k].factor, comps[k].modulus, offset + k, 0});
    }
  }
  for (auto& c : components_) {
    const std::int64_t d = factors[c.slot];
    const std::int64_t rest = d / c.modulus;
    // weight = 1 mod p^a, 0 mod d/p^a
    c.weight = (rest * mod_inverse(rest % c.modulus, c.modulus)) % d;
  }
  canonical_ = AbelianGroup(std::move(factors));
}

CyclicProduct CyclicProduct::parse(std::string_view spelling) {
  std::vector<int> orders;
  std::size_t pos = 0;
  auto fail = [&]() -> CyclicProduct {
    throw StructuralError("cannot parse group spelling '" + std::string(spelling) + "' (expected e.g. Z6xZ2)");
  };
  std::string s;
  for (char ch : spelling)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) return fail();
  while (pos < s.size()) {
    if (s[pos] != 'Z' && s[pos] != 'z') return fail();
    ++pos;
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), value);
    if (ec != std::errc{} || value < 1) return fail();
    pos = static_cast<std::size_t>(ptr - s.data());
    orders.push_back(value);
    if (pos < s.size()) {
      if (s[pos] != 'x' && s[pos] != 'X' && s[pos] != '*') return fail();
      ++pos;
      if (pos == s.size()) return fail();
    }
  }
  return CyclicProduct(std::move(orders));
}

GroupElement CyclicProduct::to_canonical(std::span<const int> coords) const {
  if (coords.size() != orders_.size())
    throw StructuralError("element has " + std::to_string(coords.size()) + " coordinates, presentation " +
                          to_string() + " has " + std::to_string(orders_.size()));
  for (std::size_t j = 0; j < coords.size(); ++j)
    if (coords[j] < 0 || coords[j] >= orders_[j])
      throw StructuralError("residue " + std::to_string(coords[j]) + " out of range for Z" +
                            std::to_string(orders_[j]));
  const auto& f = canonical_.invariant_factors();
  std::vector<std::int64_t> acc(f.size(), 0);
  for (const auto& c : components_) {
    const std::int64_t residue = coords[c.factor] % c.modulus;
    acc[c.slot] = (acc[c.slot] + residue * c.weight) % f[c.slot];
  }
  GroupElement out{std::vector<int>(f.size())};
  for (std::size_t i = 0; i < f.size(); ++i) out.coords[i] = static_cast<int>(acc[i]);
  return out;
}

std::string CyclicProduct::to_string() const {
  if (orders_.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) out += 'x';
    out += 'Z' + std::to_string(orders_[i]);
  }
  return out;
}

}  // namespace drgcay
