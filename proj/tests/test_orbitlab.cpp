#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "ng/golden.hpp"
#include "ng/necklace.hpp"
#include "ng/orbitlab.hpp"

using namespace ng;

namespace {
// Orbits as sets of necklace strings, for comparison against recorded data.
std::vector<std::set<std::string>> orbit_strings(const OrbitReport& r) {
  std::vector<std::set<std::string>> out;
  for (const auto& orbit : r.orbits) {
    std::set<std::string> s;
    for (uint32_t v : orbit) s.insert(r.universe[v].to_string());
    out.push_back(std::move(s));
  }
  return out;
}
}  // namespace

TEST_CASE("orbit structure and averaging edges match recorded small cases") {
  for (const auto& example : golden::orbit_examples()) {
    auto fam = build_family(MapKind::reutenauer, 2, example.n);
    auto report = orbit_report(fam);
    auto got = orbit_strings(report);

    REQUIRE(got.size() == example.orbits.size());
    // recorded orbits are keyed by their smallest member, same as the report
    for (size_t i = 0; i < got.size(); ++i) {
      std::set<std::string> want(example.orbits[i].begin(), example.orbits[i].end());
      CHECK(got[i] == want);
    }
    REQUIRE(report.averaging.size() == example.averaging.size());
    for (size_t i = 0; i < report.averaging.size(); ++i) {
      int want = example.averaging[i];
      const auto& edge = report.averaging[i];
      if (want < 0) {
        CHECK(edge.kind == AveragingEdge::Kind::periodic);
      } else {
        CHECK(edge.kind == AveragingEdge::Kind::orbit);
        CHECK(edge.target == static_cast<uint32_t>(want));
      }
    }
  }
}

TEST_CASE("orbit invariants at several sizes") {
  for (uint32_t n = 2; n <= 12; ++n) {
    auto fam = build_family(MapKind::reutenauer, 2, n);
    auto report = orbit_report(fam);
    CHECK(report.universe.size() == count_aperiodic(2, n));
    CHECK(std::is_sorted(report.universe.begin(), report.universe.end()));

    size_t covered = 0;
    for (const auto& orbit : report.orbits) {
      CHECK(std::is_sorted(orbit.begin(), orbit.end()));
      covered += orbit.size();
      CHECK(report.group_order % orbit.size() == 0);  // orbit size divides group order
    }
    CHECK(covered == report.universe.size());
    CHECK(BigInt(report.group_order) == report.group_type.order());

    auto sizes = report.orbit_sizes();
    CHECK(std::is_sorted(sizes.rbegin(), sizes.rend()));
  }
}

TEST_CASE("main orbit detection") {
  // n = 4: the first orbit {0001, 0111} has size 2 = group order, free action
  auto r4 = orbit_report(build_family(MapKind::reutenauer, 2, 4));
  REQUIRE(r4.main_orbit.has_value());
  CHECK(*r4.main_orbit == 0);
  CHECK(r4.group_order == 2);

  // a main orbit exists at every n in the working range
  for (uint32_t n = 2; n <= 13; ++n) {
    auto r = orbit_report(build_family(MapKind::reutenauer, 2, n));
    CHECK(r.main_orbit.has_value());
    CHECK(r.main_orbit_candidates >= 1);
    const auto& mo = r.orbits[*r.main_orbit];
    CHECK(mo.size() == r.group_order);
  }

  // trivial group: every singleton orbit qualifies
  auto r3 = orbit_report(build_family(MapKind::reutenauer, 2, 3));
  CHECK(r3.group_order == 1);
  CHECK(r3.main_orbit_candidates == static_cast<uint32_t>(r3.orbits.size()));
}

TEST_CASE("averaging reach starts at the main orbit and follows orbit edges") {
  auto report = orbit_report(build_family(MapKind::reutenauer, 2, 6));
  REQUIRE(report.main_orbit.has_value());
  REQUIRE(!report.averaging_reach.empty());
  CHECK(report.averaging_reach.front() == *report.main_orbit);
  // consecutive entries are joined by orbit edges
  for (size_t i = 0; i + 1 < report.averaging_reach.size(); ++i) {
    const auto& edge = report.averaging[report.averaging_reach[i]];
    CHECK(edge.kind == AveragingEdge::Kind::orbit);
    CHECK(edge.target == report.averaging_reach[i + 1]);
  }
  // the walk stops at a non-orbit edge or a revisit
  const auto& last = report.averaging[report.averaging_reach.back()];
  bool revisit = false;
  if (last.kind == AveragingEdge::Kind::orbit)
    revisit = std::find(report.averaging_reach.begin(), report.averaging_reach.end(),
                        last.target) != report.averaging_reach.end();
  CHECK((last.kind != AveragingEdge::Kind::orbit || revisit));
}

TEST_CASE("flip permutation is an involution matching digit complement") {
  auto fam = build_family(MapKind::reutenauer, 2, 7);
  auto perm = flip_permutation(fam.necklaces);
  CHECK(perm.size() == fam.necklaces.size());
  CHECK(perm.compose(perm).is_identity());
  for (size_t i = 0; i < fam.necklaces.size(); ++i)
    CHECK(fam.necklaces[perm[static_cast<uint32_t>(i)]] == flip(fam.necklaces[i]));
}

TEST_CASE("flip-extended orbits merge plain orbits in pairs") {
  // n = 4: plain orbits {0001,0111} and {0011}; flip maps 0001 <-> 0111,
  // 0011 to itself, so the extended orbits coincide with the plain ones
  auto r4 = flip_extended_orbits(build_family(MapKind::reutenauer, 2, 4));
  REQUIRE(r4.flip_orbits.has_value());
  CHECK(r4.flip_orbits->size() == 2);
  CHECK(r4.flip_violations.empty());

  // n = 5: the two plain orbits of size 3 merge into one of size 6
  auto r5 = flip_extended_orbits(build_family(MapKind::reutenauer, 2, 5));
  REQUIRE(r5.flip_orbits.has_value());
  CHECK(r5.flip_orbits->size() == 1);
  CHECK((*r5.flip_orbits)[0].size() == 6);
  CHECK(r5.flip_violations.empty());

  // every extended orbit is a union of one or two plain orbits, n <= 12
  for (uint32_t n = 2; n <= 12; ++n) {
    auto r = flip_extended_orbits(build_family(MapKind::reutenauer, 2, n));
    REQUIRE(r.flip_orbits.has_value());
    CHECK(r.flip_violations.empty());
    size_t covered = 0;
    for (const auto& ext : *r.flip_orbits) covered += ext.size();
    CHECK(covered == r.universe.size());
    CHECK(r.flip_orbits->size() <= r.orbits.size());
  }
}

TEST_CASE("flip extension rejects p != 2") {
  auto fam = build_family(MapKind::reutenauer, 3, 4);
  CHECK_THROWS_AS(flip_extended_orbits(fam), std::domain_error);
  // the plain report works fine at p = 3 and leaves flip data empty
  auto r = orbit_report(fam);
  CHECK(!r.flip_orbits.has_value());
  CHECK(r.flip_violations.empty());
}

TEST_CASE("golomb families get reports too") {
  auto r = orbit_report(build_family(MapKind::golomb, 2, 12));
  CHECK(r.kind == MapKind::golomb);
  CHECK(r.group_order == 144);
  auto sizes = r.orbit_sizes();
  std::vector<uint64_t> want{144, 48, 36, 24, 24, 12, 12, 8, 6, 6, 4, 4, 2, 2, 2, 1};
  CHECK(sizes == want);
}
