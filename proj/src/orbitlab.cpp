#include "ng/orbitlab.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ng {

namespace {

uint32_t universe_index(std::span<const Necklace> universe, const Necklace& v) {
  auto it = std::lower_bound(universe.begin(), universe.end(), v);
  if (it == universe.end() || !(*it == v))
    throw invariant_error("necklace missing from universe");
  return static_cast<uint32_t>(it - universe.begin());
}

std::vector<uint32_t> orbit_of_point(std::span<const Necklace> universe,
                                     const std::vector<std::vector<uint32_t>>& orbits) {
  std::vector<uint32_t> owner(universe.size(), 0);
  for (uint32_t i = 0; i < orbits.size(); ++i)
    for (uint32_t v : orbits[i]) owner[v] = i;
  return owner;
}

}  // namespace

std::vector<uint64_t> OrbitReport::orbit_sizes() const {
  std::vector<uint64_t> sizes;
  sizes.reserve(orbits.size());
  for (const auto& o : orbits) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

PermTable flip_permutation(std::span<const Necklace> universe) {
  std::vector<uint32_t> img(universe.size());
  for (size_t i = 0; i < universe.size(); ++i)
    img[i] = universe_index(universe, flip(universe[i]));
  return PermTable(std::move(img));
}

std::vector<AveragingEdge> averaging_on_orbits(std::span<const Necklace> universe,
                                               const std::vector<std::vector<uint32_t>>& orbits) {
  std::vector<uint32_t> owner = orbit_of_point(universe, orbits);
  std::vector<AveragingEdge> edges;
  edges.reserve(orbits.size());
  for (const auto& orbit : orbits) {
    size_t periodic = 0;
    std::set<uint32_t> targets;
    for (uint32_t v : orbit) {
      auto image = averaging(universe[v]);
      if (!image)
        ++periodic;
      else
        targets.insert(owner[universe_index(universe, *image)]);
    }
    AveragingEdge e;
    if (periodic == orbit.size()) {
      e.kind = AveragingEdge::Kind::periodic;
    } else if (periodic == 0 && targets.size() == 1) {
      e.kind = AveragingEdge::Kind::orbit;
      e.target = *targets.begin();
    } else {
      e.kind = AveragingEdge::Kind::mixed;
    }
    edges.push_back(e);
  }
  return edges;
}

MainOrbitScan find_main_orbit(std::span<const PermTable> elements,
                              const std::vector<std::vector<uint32_t>>& orbits) {
  MainOrbitScan scan;
  for (uint32_t i = 0; i < orbits.size(); ++i) {
    if (orbits[i].size() != elements.size()) continue;
    bool free_action = true;
    for (uint32_t v : orbits[i]) {
      size_t fixing = 0;
      for (const PermTable& g : elements)
        if (g[v] == v) ++fixing;
      if (fixing != 1) {
        free_action = false;
        break;
      }
    }
    if (!free_action) continue;
    ++scan.candidates;
    if (!scan.index) scan.index = i;
  }
  return scan;
}

OrbitReport orbit_report(const BijectionFamily& family, uint64_t max_group_order) {
  OrbitReport report;
  report.p = family.p;
  report.n = family.n;
  report.kind = family.kind;
  report.universe = family.necklaces;

  std::vector<PermTable> gens = family.necklace_generators();
  GeneratedGroup group = generate_group(gens, max_group_order);
  report.group_type = group.type;
  report.group_order = group.elements.size();
  report.orbits = orbit_partition(gens);

  size_t covered = 0;
  for (const auto& o : report.orbits) {
    covered += o.size();
    if (report.group_order % o.size() != 0)
      throw invariant_error("orbit size does not divide group order");
  }
  if (covered != report.universe.size())
    throw invariant_error("orbits do not cover the necklace set");

  report.averaging = averaging_on_orbits(report.universe, report.orbits);

  MainOrbitScan scan = find_main_orbit(group.elements, report.orbits);
  report.main_orbit = scan.index;
  report.main_orbit_candidates = scan.candidates;

  if (report.main_orbit) {
    std::vector<bool> seen(report.orbits.size(), false);
    uint32_t at = *report.main_orbit;
    while (!seen[at]) {
      seen[at] = true;
      report.averaging_reach.push_back(at);
      const AveragingEdge& e = report.averaging[at];
      if (e.kind != AveragingEdge::Kind::orbit) break;
      at = e.target;
    }
  }
  return report;
}

OrbitReport flip_extended_orbits(const BijectionFamily& family, uint64_t max_group_order) {
  if (family.p != 2) throw std::domain_error("flip extension needs p = 2");
  OrbitReport report = orbit_report(family, max_group_order);

  std::vector<PermTable> gens = family.necklace_generators();
  gens.push_back(flip_permutation(report.universe));
  report.flip_orbits = orbit_partition(gens);

  // Each extended orbit must be a union of one or two plain orbits.
  std::vector<uint32_t> owner = orbit_of_point(report.universe, *report.flip_orbits);
  std::vector<std::vector<uint32_t>> parts(report.flip_orbits->size());
  for (uint32_t i = 0; i < report.orbits.size(); ++i)
    parts[owner[report.orbits[i].front()]].push_back(i);
  for (uint32_t i = 0; i < parts.size(); ++i) {
    size_t total = 0;
    for (uint32_t j : parts[i]) total += report.orbits[j].size();
    if ((parts[i].size() != 1 && parts[i].size() != 2) ||
        total != (*report.flip_orbits)[i].size()) {
      std::ostringstream os;
      os << "extended orbit " << i << " spans " << parts[i].size() << " plain orbits";
      report.flip_violations.push_back(os.str());
    }
  }
  return report;
}

}  // namespace ng
