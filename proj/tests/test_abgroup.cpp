#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ng/abgroup.hpp"

using namespace ng;

namespace {
// n-cycle acting on the first n points of {0, ..., size-1}
PermTable cycle(uint32_t size, uint32_t n, uint32_t offset = 0) {
  std::vector<uint32_t> img(size);
  std::iota(img.begin(), img.end(), 0);
  for (uint32_t i = 0; i < n; ++i) img[offset + i] = offset + (i + 1) % n;
  return PermTable(std::move(img));
}
}  // namespace

TEST_CASE("perm table basics") {
  auto id = PermTable::identity(4);
  CHECK(id.is_identity());
  CHECK(id.order() == 1);

  auto c = cycle(4, 4);
  CHECK(!c.is_identity());
  CHECK(c.order() == 4);
  CHECK(c.compose(c).order() == 2);
  CHECK(c.compose(c.inverse()).is_identity());
  CHECK(c.inverse().order() == 4);

  // compose applies the right permutation first
  PermTable a({1, 0, 2});
  PermTable b({0, 2, 1});
  CHECK(a.compose(b)[1] == a[b[1]]);

  CHECK_THROWS_AS(PermTable({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(PermTable({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(a.compose(id), std::invalid_argument);  // size mismatch
}

TEST_CASE("perm order is the lcm of cycle lengths") {
  PermTable two_three({1, 0, 3, 4, 2});  // 2-cycle and 3-cycle
  CHECK(two_three.order() == 6);
  PermTable fix5 = PermTable::identity(5);
  CHECK(fix5.order() == 1);
}

TEST_CASE("generated group of commuting cycles") {
  // disjoint 2-cycle and 3-cycle generate Z_2 x Z_3 = Z_6
  std::vector<PermTable> gens{cycle(5, 2, 0), cycle(5, 3, 2)};
  auto g = generate_group(gens);
  CHECK(g.elements.size() == 6);
  CHECK(g.elements[0].is_identity());
  CHECK(g.type.to_string() == "Z_6");

  // powers of one 6-cycle
  std::vector<PermTable> one{cycle(6, 6)};
  CHECK(generate_group(one).type == AbelianType::from_cyclic_orders(std::vector<uint64_t>{6}));

  // two independent 2-cycles: Z_2 x Z_2
  std::vector<PermTable> klein{cycle(4, 2, 0), cycle(4, 2, 2)};
  auto k = generate_group(klein);
  CHECK(k.elements.size() == 4);
  CHECK(k.type.to_string() == "Z_2⊕Z_2");

  // the trivial group from no generators is rejected or trivial; identity gen
  std::vector<PermTable> trivial{PermTable::identity(3)};
  auto t = generate_group(trivial);
  CHECK(t.elements.size() == 1);
  CHECK(t.type.is_trivial());
}

TEST_CASE("non-abelian generators are rejected") {
  // two transpositions with a common point generate S_3
  PermTable s({1, 0, 2});
  PermTable t({0, 2, 1});
  std::vector<PermTable> gens{s, t};
  CHECK_THROWS_AS(generate_group(gens), std::domain_error);
}

TEST_CASE("group size cap") {
  std::vector<PermTable> gens{cycle(12, 12)};
  CHECK_THROWS_AS(generate_group(gens, 5), resource_limit_error);
}

TEST_CASE("abelian type canonicalization") {
  auto t = AbelianType::from_cyclic_orders(std::vector<uint64_t>{2, 3});
  CHECK(t.invariant_factors() == std::vector<uint64_t>{6});
  CHECK(t.to_string() == "Z_6");
  CHECK(t.order() == 6);

  auto u = AbelianType::from_cyclic_orders(std::vector<uint64_t>{2, 2, 4});
  CHECK(u.invariant_factors() == (std::vector<uint64_t>{2, 2, 4}));
  CHECK(u.to_string() == "Z_2⊕Z_2⊕Z_4");

  auto v = AbelianType::from_cyclic_orders(std::vector<uint64_t>{6, 10, 15});
  CHECK(v.invariant_factors() == (std::vector<uint64_t>{30, 30}));

  auto w = AbelianType::from_cyclic_orders(std::vector<uint64_t>{1, 1, 1});
  CHECK(w.is_trivial());
  CHECK(w.to_string() == "Z_1");
  CHECK(w.order() == 1);

  CHECK_THROWS_AS(AbelianType::from_cyclic_orders(std::vector<uint64_t>{0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(AbelianType::from_invariant_factors({4, 6}), std::invalid_argument);
  CHECK_THROWS_AS(AbelianType::from_invariant_factors({1, 2}), std::invalid_argument);
}

TEST_CASE("primary decomposition") {
  auto t = AbelianType::from_cyclic_orders(std::vector<uint64_t>{4, 6, 9});
  // 4*6*9 = Z_4 + Z_2 + Z_3 + Z_9 -> invariant factors 6, 36
  CHECK(t.invariant_factors() == (std::vector<uint64_t>{6, 36}));
  auto pd = t.primary_decomposition();
  CHECK(pd.at(2) == (std::vector<uint32_t>{2, 1}));
  CHECK(pd.at(3) == (std::vector<uint32_t>{2, 1}));
  CHECK(pd.size() == 2);
}

TEST_CASE("direct sum and multiple subgroup") {
  auto a = AbelianType::from_cyclic_orders(std::vector<uint64_t>{4});
  auto b = AbelianType::from_cyclic_orders(std::vector<uint64_t>{6});
  CHECK(direct_sum(a, b).invariant_factors() == (std::vector<uint64_t>{2, 12}));
  CHECK(direct_sum(a, AbelianType()).invariant_factors() == a.invariant_factors());

  // 2 * (Z_4 + Z_6) = Z_2 + Z_3 = Z_6
  CHECK(multiple_subgroup(2, direct_sum(a, b)).to_string() == "Z_6");
  // 3 * Z_9 = Z_3, 3 * Z_4 = Z_4
  auto c = AbelianType::from_cyclic_orders(std::vector<uint64_t>{9, 4});
  CHECK(multiple_subgroup(3, c).invariant_factors() == (std::vector<uint64_t>{12}));
  CHECK(multiple_subgroup(36, c).is_trivial());
  CHECK(is_isomorphic(multiple_subgroup(1, c), c));
}

TEST_CASE("order statistics roundtrip on random types") {
  std::mt19937 rng(424242);
  std::uniform_int_distribution<int> pick(0, 5);
  const uint64_t pool[] = {2, 3, 4, 5, 8, 9};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<uint64_t> orders;
    int parts = 1 + trial % 4;
    for (int i = 0; i < parts; ++i) orders.push_back(pool[pick(rng)]);
    auto t = AbelianType::from_cyclic_orders(orders);
    auto stats = order_statistics(t);
    uint64_t total = 0;
    for (auto [o, cnt] : stats) total += cnt;
    CHECK(BigInt(total) == t.order());
    CHECK(type_from_order_statistics(stats) == t);
  }
}

TEST_CASE("order statistics distinguish equal-order groups") {
  auto a = AbelianType::from_cyclic_orders(std::vector<uint64_t>{2, 2, 4});
  auto b = AbelianType::from_cyclic_orders(std::vector<uint64_t>{2, 8});
  auto c = AbelianType::from_cyclic_orders(std::vector<uint64_t>{4, 4});
  CHECK(a.order() == b.order());
  CHECK(b.order() == c.order());
  auto sa = order_statistics(a), sb = order_statistics(b), sc = order_statistics(c);
  CHECK(sa != sb);
  CHECK(sb != sc);
  CHECK(type_from_order_statistics(sa) == a);
  CHECK(type_from_order_statistics(sb) == b);
  CHECK(type_from_order_statistics(sc) == c);
}

TEST_CASE("flat order list overload") {
  // Z_2 x Z_2: orders 1, 2, 2, 2
  std::vector<uint64_t> orders{1, 2, 2, 2};
  CHECK(type_from_order_statistics(orders).to_string() == "Z_2⊕Z_2");
  std::vector<uint64_t> bad{1, 2, 2};
  CHECK_THROWS_AS(type_from_order_statistics(bad), invariant_error);
}

TEST_CASE("orbit partition") {
  // 3-cycle on {0,1,2} and 2-cycle on {4,5} leave 3 fixed
  std::vector<PermTable> gens{cycle(6, 3, 0), cycle(6, 2, 4)};
  auto parts = orbit_partition(gens);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == (std::vector<uint32_t>{0, 1, 2}));
  CHECK(parts[1] == (std::vector<uint32_t>{3}));
  CHECK(parts[2] == (std::vector<uint32_t>{4, 5}));
}

TEST_CASE("relation lattice agrees with closure enumeration") {
  std::vector<std::vector<PermTable>> cases;
  cases.push_back({cycle(5, 2, 0), cycle(5, 3, 2)});            // Z_6
  cases.push_back({cycle(4, 2, 0), cycle(4, 2, 2)});            // Z_2 x Z_2
  cases.push_back({cycle(9, 3, 0), cycle(9, 3, 3), cycle(9, 3, 6)});  // Z_3^3
  auto six = cycle(6, 6, 0);
  cases.push_back({six, six.compose(six)});                     // redundant gens
  for (const auto& gens : cases)
    CHECK(type_via_relation_lattice(gens) == generate_group(gens).type);
}
