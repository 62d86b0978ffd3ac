#include <doctest.h>

#include <random>
#include <set>

#include "drgcay/errors.hpp"
#include "drgcay/group.hpp"
#include "oracles.hpp"

using namespace drgcay;

namespace {

GroupElement el(std::vector<int> c) { return GroupElement{std::move(c)}; }

std::set<std::vector<int>> tuples(const AbelianGroup& g, const Subgroup& h) {
  std::set<std::vector<int>> out;
  for (int c : h.elements()) out.insert(g.decode(c).coords);
  return out;
}

}  // namespace

TEST_CASE("addition and negation examples") {
  const auto z6 = AbelianGroup::cyclic(6);
  CHECK(add(z6, el({1}), el({5})) == z6.identity());
  CHECK(neg(z6, el({2})) == el({4}));

  // Z4 x Z2 written in that order; the invariant-factor form is Z2 x Z4.
  const auto p = CyclicProduct::parse("Z4xZ2");
  CHECK(p.canonical() == AbelianGroup({2, 4}));
  const std::vector<int> a{3, 1}, b{1, 1};
  CHECK(add(p.canonical(), p.to_canonical(a), p.to_canonical(b)) == p.canonical().identity());
  const AbelianGroup z2z4({2, 4});
  CHECK(add(z2z4, el({1, 3}), el({1, 1})) == el({0, 0}));
}

TEST_CASE("element order examples") {
  CHECK(element_order(AbelianGroup::cyclic(6), el({1})) == 6);
  const auto p = CyclicProduct::parse("Z6xZ2");
  const std::vector<int> s{1, 0};
  CHECK(element_order(p.canonical(), p.to_canonical(s)) == 6);
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> f(static_cast<std::size_t>(n), 2);
    f.push_back(4);
    const AbelianGroup g(f);
    std::vector<int> x(f.size(), 0);
    x.back() = 1;
    CHECK(element_order(g, el(x)) == 4);
  }
}

TEST_CASE("span examples") {
  const auto z6 = AbelianGroup::cyclic(6);
  std::vector<GroupElement> t{el({2}), el({4})};
  CHECK(span(z6, t).elements() == std::vector<int>{0, 2, 4});
  t = {el({3})};
  CHECK(span(z6, t).elements() == std::vector<int>{0, 3});
  const auto z5 = AbelianGroup::cyclic(5);
  t = {el({2}), el({3})};
  CHECK(span(z5, t).is_whole_group());
}

TEST_CASE("index examples") {
  const auto z6 = AbelianGroup::cyclic(6);
  const int three = 3, two = 2;
  CHECK(subgroup_index(z6, span_codes(z6, std::span<const int>(&three, 1))) == 3);
  CHECK(subgroup_index(z6, span_codes(z6, std::span<const int>(&two, 1))) == 2);
  const int one = 1;
  CHECK(subgroup_index(z6, span_codes(z6, std::span<const int>(&one, 1))) == 1);
}

TEST_CASE("enumerate_groups examples") {
  const auto g16 = enumerate_groups(16);
  REQUIRE(g16.size() == 5);
  std::set<std::string> names;
  for (const auto& g : g16) names.insert(g.to_string());
  CHECK(names == std::set<std::string>{"Z16", "Z2xZ8", "Z4xZ4", "Z2xZ2xZ4", "Z2xZ2xZ2xZ2"});
  CHECK(enumerate_groups(6).size() == 1);
  CHECK(enumerate_groups(6).front().to_string() == "Z6");
  const auto g12 = enumerate_groups(12);
  REQUIRE(g12.size() == 2);
  CHECK(g12[0].to_string() == "Z12");
  CHECK(g12[1].to_string() == "Z2xZ6");
}

TEST_CASE("group count matches product of partition numbers up to 64") {
  for (int n = 1; n <= 64; ++n) {
    CAPTURE(n);
    const auto groups = enumerate_groups(n);
    CHECK(static_cast<long long>(groups.size()) == oracle::abelian_group_count(n));
    std::set<std::vector<int>> distinct;
    for (const auto& g : groups) {
      CHECK(g.order() == n);
      distinct.insert(g.invariant_factors());
    }
    CHECK(distinct.size() == groups.size());
  }
}

TEST_CASE("element orders divide the group order up to 24") {
  for (int n = 1; n <= 24; ++n)
    for (const auto& g : enumerate_groups(n))
      for (int c = 0; c < g.order(); ++c) {
        const auto x = g.decode(c);
        const int o = element_order(g, x);
        CHECK(n % o == 0);
        CHECK(o == oracle::element_order(g.invariant_factors(), x.coords));
        CHECK(element_order_code(g, c) == o);
      }
}

TEST_CASE("span agrees with repeated set expansion") {
  std::mt19937 rng(20240611);
  for (int n = 2; n <= 24; ++n)
    for (const auto& g : enumerate_groups(n))
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<int> codes;
        const int k = std::uniform_int_distribution<int>(0, 3)(rng);
        for (int i = 0; i < k; ++i) codes.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
        std::vector<oracle::Tuple> gens;
        for (int c : codes) gens.push_back(g.decode(c).coords);
        CAPTURE(g.to_string());
        const auto h = span_codes(g, codes);
        CHECK(tuples(g, h) == oracle::closure(g.invariant_factors(), gens));
        CHECK(subgroup_index(g, h) * h.order() == g.order());
        const auto part = cosets(g, h);
        CHECK(part.index == subgroup_index(g, h));
        CHECK(part.cosets.front() == h.elements());
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y)
            CHECK((part.coset_of[x] == part.coset_of[y]) == h.contains(g.sub_codes(x, y)));
      }
}

TEST_CASE("codes are lexicographic and round-trip") {
  const AbelianGroup g({2, 6});
  CHECK(g.order() == 12);
  GroupElement prev;
  for (int c = 0; c < g.order(); ++c) {
    const auto x = g.decode(c);
    CHECK(g.encode(x) == c);
    if (c > 0) CHECK(prev < x);
    prev = x;
    CHECK(g.add_codes(c, g.neg_code(c)) == 0);
    CHECK(g.multiple_code(c, element_order_code(g, c)) == 0);
  }
  CHECK(g.to_string() == "Z2xZ6");
  CHECK(g.code_to_string(7) == "(1,1)");
  CHECK(AbelianGroup::cyclic(1).to_string() == "Z1");
}

TEST_CASE("invalid groups and elements are rejected") {
  CHECK_THROWS_AS(AbelianGroup({4, 2}), StructuralError);
  CHECK_THROWS_AS(AbelianGroup({1, 3}), StructuralError);
  const AbelianGroup g({2, 4});
  CHECK_THROWS_AS(g.encode(el({1})), StructuralError);
  CHECK_THROWS_AS(g.encode(el({2, 0})), StructuralError);
  CHECK_THROWS_AS(g.decode(8), StructuralError);
  CHECK_THROWS_AS(CyclicProduct::parse("Z6xx"), StructuralError);
  CHECK_THROWS_AS(CyclicProduct::parse("G6"), StructuralError);
}

TEST_CASE("cyclic products map isomorphically onto invariant factors") {
  for (const char* spelling : {"Z6xZ2", "Z4xZ2", "Z3xZ4", "Z2xZ2xZ4", "Z6xZ10", "Z12xZ18", "Z8"}) {
    CAPTURE(spelling);
    const auto p = CyclicProduct::parse(spelling);
    const auto& orders = p.orders();
    const auto& g = p.canonical();
    int total = 1;
    for (int o : orders) total *= o;
    REQUIRE(g.order() == total);
    std::vector<std::vector<int>> all{{}};
    for (int o : orders) {
      std::vector<std::vector<int>> next;
      for (const auto& prefix : all)
        for (int r = 0; r < o; ++r) {
          auto t = prefix;
          t.push_back(r);
          next.push_back(t);
        }
      all = std::move(next);
    }
    std::set<int> image;
    for (const auto& x : all) image.insert(g.encode(p.to_canonical(x)));
    CHECK(static_cast<int>(image.size()) == total);
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      const auto& x = all[rng() % all.size()];
      const auto& y = all[rng() % all.size()];
      CHECK(add(g, p.to_canonical(x), p.to_canonical(y)) == p.to_canonical(oracle::add(orders, x, y)));
    }
  }
  CHECK(CyclicProduct::parse("Z6xZ2").canonical().to_string() == "Z2xZ6");
  CHECK(CyclicProduct::parse("Z4xZ2xZ2xZ2").canonical().to_string() == "Z2xZ2xZ2xZ4");
}
