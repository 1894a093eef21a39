#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ng/abelian_type.hpp"
#include "ng/abgroup.hpp"
#include "ng/bijection.hpp"

namespace ng {

// Where the averaging operator sends one orbit: into a single other orbit,
// entirely onto periodic words, or a mix of destinations. Mixed edges are
// representable on purpose; the suites treat them as findings, not errors.
struct AveragingEdge {
  enum class Kind { orbit, periodic, mixed };
  Kind kind = Kind::periodic;
  uint32_t target = 0;  // valid for Kind::orbit only
};

struct MainOrbitScan {
  std::optional<uint32_t> index;  // first qualifying orbit
  uint32_t candidates = 0;
};

struct OrbitReport {
  uint32_t p = 0, n = 0;
  MapKind kind = MapKind::reutenauer;
  AbelianType group_type;
  uint64_t group_order = 1;
  std::vector<Necklace> universe;             // sorted; orbit entries index into it
  std::vector<std::vector<uint32_t>> orbits;  // each ascending, ordered by first point
  std::optional<uint32_t> main_orbit;
  uint32_t main_orbit_candidates = 0;
  std::vector<AveragingEdge> averaging;    // one edge per orbit
  std::vector<uint32_t> averaging_reach;   // orbits visited by iterated averaging from the main orbit
  std::optional<std::vector<std::vector<uint32_t>>> flip_orbits;  // extended-group orbits, p = 2
  std::vector<std::string> flip_violations;

  std::vector<uint64_t> orbit_sizes() const;  // descending multiset
};

// Digit-complement permutation on a sorted universe of binary necklaces.
PermTable flip_permutation(std::span<const Necklace> universe);

std::vector<AveragingEdge> averaging_on_orbits(std::span<const Necklace> universe,
                                               const std::vector<std::vector<uint32_t>>& orbits);

// Orbits of size equal to the group order on which every point has a trivial
// stabilizer, checked pointwise against the full element list.
MainOrbitScan find_main_orbit(std::span<const PermTable> elements,
                              const std::vector<std::vector<uint32_t>>& orbits);

// Full analysis of a family's necklace action: orbits, group type, averaging
// edges, main orbit, averaging reach.
OrbitReport orbit_report(const BijectionFamily& family,
                         uint64_t max_group_order = 10'000'000);

// Same report with flip_orbits filled in: orbits of the group extended by the
// digit complement. Requires p = 2. Every extended orbit must be the union of
// one or two plain orbits; exceptions land in flip_violations.
OrbitReport flip_extended_orbits(const BijectionFamily& family,
                                 uint64_t max_group_order = 10'000'000);

}  // namespace ng
