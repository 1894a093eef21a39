#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "ng/abgroup.hpp"
#include "ng/bijection.hpp"
#include "ng/gfpoly.hpp"
#include "ng/necklace.hpp"

using namespace ng;

namespace {
bool tables_are_mutually_inverse(const BijectionFamily& fam) {
  for (size_t k = 0; k < fam.params.size(); ++k) {
    const auto& fwd = fam.forward[k];
    const auto& inv = fam.inverse[k];
    if (fwd.size() != fam.necklaces.size()) return false;
    if (inv.size() != fam.polys.size()) return false;
    for (size_t i = 0; i < fwd.size(); ++i)
      if (inv[fwd[i]] != i) return false;
    for (size_t j = 0; j < inv.size(); ++j)
      if (fwd[inv[j]] != j) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("family shape at p=2 n=4") {
  auto fam = build_family(MapKind::reutenauer, 2, 4);
  CHECK(fam.p == 2);
  CHECK(fam.n == 4);
  CHECK(fam.necklaces.size() == 3);
  CHECK(fam.polys.size() == 3);
  // one parameter per normal polynomial of degree 4
  CHECK(fam.params.size() == count_normal(2, 4));
  CHECK(fam.params.size() == 2);
  for (const auto& par : fam.params) {
    CHECK(is_normal(par.poly));
    CHECK(par.basis_codes.size() == 4);
    CHECK(par.basis_codes[0] == par.root_code);
  }
  CHECK(tables_are_mutually_inverse(fam));

  auto gol = build_family(MapKind::golomb, 2, 4);
  CHECK(gol.params.size() == count_primitive(2, 4));
  CHECK(gol.params.size() == 2);
  for (const auto& par : gol.params) CHECK(is_primitive(par.poly));
  CHECK(tables_are_mutually_inverse(gol));
}

TEST_CASE("single evaluations from the definitions") {
  auto fam = build_family(MapKind::reutenauer, 2, 4);
  // the necklace 0001 selects exactly one basis element, so its image is the
  // minimal polynomial of the parameter's root
  auto v = Necklace::from_string(2, "0001");
  for (const auto& par : fam.params)
    CHECK(reutenauer_map(*fam.ctx, par.basis_codes, v) == par.poly);

  auto gol = build_family(MapKind::golomb, 2, 4);
  // 0001 has code 1 at some rotation: image is minpoly of the root itself
  for (const auto& par : gol.params)
    CHECK(golomb_map(*fam.ctx, par.root_code, v) ==
          minimal_polynomial(gol.ctx->from_code(par.root_code)));
}

TEST_CASE("images do not depend on the rotation of the digit string") {
  for (auto kind : {MapKind::reutenauer, MapKind::golomb}) {
    auto fam = build_family(kind, 2, 6);
    const auto& par = fam.params.front();
    for (const auto& v : fam.necklaces) {
      std::vector<uint32_t> d(v.digits().begin(), v.digits().end());
      auto base = kind == MapKind::reutenauer
                      ? reutenauer_image_digits(*fam.ctx, par.basis_codes, d)
                      : golomb_image_digits(*fam.ctx, par.root_code, d);
      for (uint32_t s = 0; s < v.n(); ++s) {
        std::rotate(d.begin(), d.begin() + 1, d.end());
        auto img = kind == MapKind::reutenauer
                       ? reutenauer_image_digits(*fam.ctx, par.basis_codes, d)
                       : golomb_image_digits(*fam.ctx, par.root_code, d);
        CHECK(img == base);
      }
    }
  }
}

TEST_CASE("every image is an irreducible polynomial of full degree") {
  for (auto kind : {MapKind::reutenauer, MapKind::golomb}) {
    for (auto [p, n] : {std::pair{2u, 8u}, {3u, 4u}, {5u, 3u}}) {
      auto fam = build_family(kind, p, n);
      for (const auto& fwd : fam.forward) {
        std::set<uint32_t> hit(fwd.begin(), fwd.end());
        CHECK(hit.size() == fam.polys.size());  // bijective
      }
      for (const auto& f : fam.polys) {
        CHECK(f.degree() == static_cast<int>(n));
        CHECK(is_irreducible(f));
      }
    }
  }
}

TEST_CASE("tables are total inverses across parameters and sizes") {
  for (auto kind : {MapKind::reutenauer, MapKind::golomb})
    for (uint32_t n = 2; n <= 10; ++n)
      CHECK(tables_are_mutually_inverse(build_family(kind, 2, n)));
  CHECK(tables_are_mutually_inverse(build_family(MapKind::reutenauer, 3, 5)));
  CHECK(tables_are_mutually_inverse(build_family(MapKind::golomb, 3, 5)));
}

TEST_CASE("index lookups") {
  auto fam = build_family(MapKind::reutenauer, 2, 5);
  for (size_t i = 0; i < fam.necklaces.size(); ++i)
    CHECK(fam.necklace_index(fam.necklaces[i]) == i);
  for (size_t j = 0; j < fam.polys.size(); ++j)
    CHECK(fam.poly_index(fam.polys[j]) == j);
  CHECK_THROWS(fam.necklace_index(Necklace::from_string(2, "0001")));
}

TEST_CASE("parameter choice permutes images inside fixed orbits") {
  // composing inverse[0] with forward[k] permutes necklaces; pushing any
  // necklace orbit forward must give the same polynomial partition for all k
  for (auto kind : {MapKind::reutenauer, MapKind::golomb}) {
    auto fam = build_family(kind, 2, 8);
    auto gens = fam.necklace_generators();
    REQUIRE(gens.size() == fam.params.size());
    auto orbits = orbit_partition(gens);
    for (const auto& orbit : orbits) {
      std::set<uint32_t> image0;
      for (uint32_t v : orbit) image0.insert(fam.forward[0][v]);
      for (size_t k = 1; k < fam.params.size(); ++k) {
        std::set<uint32_t> imagek;
        for (uint32_t v : orbit) imagek.insert(fam.forward[k][v]);
        CHECK(imagek == image0);
      }
    }
  }
}

TEST_CASE("pairwise compositions stay inside the generated group") {
  for (auto kind : {MapKind::reutenauer, MapKind::golomb}) {
    for (uint32_t n : {4u, 6u, 9u}) {
      auto fam = build_family(kind, 2, n);
      auto gens = fam.necklace_generators();
      auto group = generate_group(gens);
      std::set<PermTable> members(group.elements.begin(), group.elements.end());
      // inv_A o fwd_B for every ordered pair (A, B)
      for (size_t a = 0; a < fam.params.size(); ++a) {
        std::vector<uint32_t> inv_a(fam.inverse[a]);
        for (size_t b = 0; b < fam.params.size(); ++b) {
          std::vector<uint32_t> img(fam.necklaces.size());
          for (size_t v = 0; v < img.size(); ++v)
            img[v] = inv_a[fam.forward[b][v]];
          CHECK(members.count(PermTable(std::move(img))) == 1);
        }
      }
    }
  }
}

TEST_CASE("necklace side and polynomial side have the same type") {
  for (auto kind : {MapKind::reutenauer, MapKind::golomb}) {
    for (uint32_t n : {5u, 8u}) {
      auto fam = build_family(kind, 2, n);
      auto a = generate_group(fam.necklace_generators());
      auto b = generate_group(fam.poly_generators());
      CHECK(a.type == b.type);
      CHECK(a.elements.size() == b.elements.size());
    }
  }
}

TEST_CASE("relation lattice route agrees with closure on family groups") {
  for (auto kind : {MapKind::reutenauer, MapKind::golomb}) {
    for (uint32_t n : {4u, 6u, 8u, 10u}) {
      auto fam = build_family(kind, 2, n);
      auto gens = fam.necklace_generators();
      CHECK(type_via_relation_lattice(gens) == generate_group(gens).type);
    }
  }
}

TEST_CASE("known group types") {
  auto r9 = build_family(MapKind::reutenauer, 2, 9);
  CHECK(generate_group(r9.necklace_generators()).type.to_string() == "Z_21");
  auto g8 = build_family(MapKind::golomb, 2, 8);
  CHECK(generate_group(g8.necklace_generators()).type.to_string() == "Z_2⊕Z_8");
}
