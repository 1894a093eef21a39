#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ng/abelian_type.hpp"
#include "ng/common.hpp"

namespace ng {

// A permutation of {0, ..., size-1} stored as its image table.
class PermTable {
 public:
  explicit PermTable(std::vector<uint32_t> images);
  static PermTable identity(uint32_t size);

  uint32_t size() const { return static_cast<uint32_t>(img_.size()); }
  uint32_t operator[](uint32_t i) const { return img_[i]; }
  std::span<const uint32_t> images() const { return img_; }

  // (a.compose(b))(i) == a(b(i))
  PermTable compose(const PermTable& other) const;
  PermTable inverse() const;
  bool is_identity() const;
  uint64_t order() const;  // lcm of cycle lengths

  bool operator==(const PermTable& o) const { return img_ == o.img_; }
  bool operator<(const PermTable& o) const { return img_ < o.img_; }

 private:
  std::vector<uint32_t> img_;
};

struct GeneratedGroup {
  std::vector<PermTable> elements;  // deterministic order, identity first
  AbelianType type;
};

// Closure of the generators under composition, assuming the result is
// abelian; commutativity is verified against the generators afterwards and a
// violation raises std::domain_error("not abelian"). Exceeding max_order
// raises resource_limit_error.
GeneratedGroup generate_group(std::span<const PermTable> generators,
                              uint64_t max_order = 10'000'000);

// Recover the isomorphism type of a finite abelian group from the multiset
// of its element orders. Inconsistent statistics raise invariant_error.
AbelianType type_from_order_statistics(std::span<const std::pair<uint64_t, uint64_t>> order_counts);
AbelianType type_from_order_statistics(std::span<const uint64_t> orders);

// Exact multiset of element orders of a finite abelian type, as sorted
// (order, count) pairs.
std::vector<std::pair<uint64_t, uint64_t>> order_statistics(const AbelianType& type);

// Orbits of the subgroup generated by the given tables on {0, ..., size-1},
// each orbit sorted ascending, orbits ordered by smallest point.
std::vector<std::vector<uint32_t>> orbit_partition(std::span<const PermTable> tables);

// Independent route to the type of an abelian permutation group: the kernel
// lattice of exponent vectors on the generators, via the Smith normal form.
// Enumerates a box of exponent combinations; sized for small groups only.
AbelianType type_via_relation_lattice(std::span<const PermTable> generators,
                                      uint64_t box_cap = 2'000'000);

}  // namespace ng
