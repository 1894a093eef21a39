#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ng::golden {

// One row of the recorded reference tables: necklace count, group order,
// group type in invariant-factor order, orbit sizes descending.
struct TableRow {
  uint32_t n;
  uint64_t necklace_count;
  uint64_t group_order;
  std::string group;
  std::vector<uint64_t> orbit_sizes;
};

const std::vector<TableRow>& reutenauer_table();  // p = 2, n = 2..15
const std::vector<TableRow>& golomb_table();      // p = 2, n = 2..12

// Reference matrices for n = 9 in BigMatrix text format: the de Bruijn
// Laplacian and its conjugate under the shift basis.
const std::string& a9_text();
const std::string& a9_prime_text();

// Worked orbit examples for p = 2: the listed orbits and, per orbit, the
// averaging destination (orbit index) or -1 for "becomes periodic".
struct OrbitExample {
  uint32_t n;
  std::vector<std::vector<std::string>> orbits;
  std::vector<int> averaging;
};

const std::vector<OrbitExample>& orbit_examples();  // n = 4, 5, 6

}  // namespace ng::golden
