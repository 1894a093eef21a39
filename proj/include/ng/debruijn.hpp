#pragma once

#include <cstdint>
#include <vector>

#include "ng/abelian_type.hpp"
#include "ng/common.hpp"
#include "ng/zlinalg.hpp"

namespace ng {

// Directed multigraph on vertices {0, ..., n-1} with edge multiplicities.
class MultiDigraph {
 public:
  explicit MultiDigraph(uint32_t n);
  void add_edges(uint32_t from, uint32_t to, uint32_t multiplicity = 1);

  uint32_t vertex_count() const { return n_; }
  uint32_t edge_mult(uint32_t i, uint32_t j) const;
  uint32_t indegree(uint32_t v) const;   // loops excluded
  uint32_t outdegree(uint32_t v) const;  // loops excluded
  bool is_eulerian() const;              // indegree == outdegree everywhere
  bool is_strongly_connected() const;

 private:
  uint32_t n_;
  std::vector<uint32_t> mult_;  // row-major n x n
};

// Vertices Z_n with the p edges i -> p*i + j (mod n), j = 0..p-1; p >= 2 and
// need not be prime. The result is checked to be Eulerian and strongly
// connected at construction.
MultiDigraph build_gamma(uint32_t p, uint32_t n);

// L[i][i] = -indegree(v_i) (loops excluded), L[i][j] = edge multiplicity
// i -> j for i != j. Requires an Eulerian graph.
BigMatrix laplacian(const MultiDigraph& g);

enum class SandpileMethod { full, minor };

// Torsion of the Laplacian cokernel. The full method runs the Smith form on
// all of L (one zero must remain); the minor method removes row and column 0
// first. Requires Eulerian and strongly connected input.
AbelianType sandpile_group(const MultiDigraph& g, SandpileMethod method = SandpileMethod::full);

// Orbits of v -> multiplier * v on Z_n \ {0}; gcd(multiplier, n) must be 1.
// Orbits are listed by smallest member, each in cycle order from it.
struct DoublingOrbits {
  uint32_t multiplier = 0, modulus = 0;
  std::vector<std::vector<uint32_t>> orbits;

  std::vector<uint32_t> reps() const;
  std::vector<uint32_t> lengths() const;
  uint32_t orbit_length_of(uint32_t v) const;
};
DoublingOrbits doubling_orbits(uint32_t multiplier, uint32_t n);

// Sandpile group of the binary graph on Z_n for odd n, assembled from the
// doubling orbits without any matrix work.
AbelianType closed_form_odd(uint32_t n);

// Same group for n = 2^k * m with k >= 1 (m odd), assembled from the odd case.
AbelianType closed_form_doubling(uint32_t n);

}  // namespace ng
