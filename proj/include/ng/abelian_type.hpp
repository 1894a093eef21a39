#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ng/common.hpp"

namespace ng {

// Isomorphism type of a finite abelian group, canonicalized as the chain of
// invariant factors d_1 | d_2 | ... | d_k with every d_i >= 2. The trivial
// group has an empty chain.
class AbelianType {
 public:
  AbelianType() = default;

  // Any list of cyclic orders Z_{m_1} + ... + Z_{m_r}; entries equal to 1 are
  // dropped, the rest are recombined into invariant factors.
  static AbelianType from_cyclic_orders(std::span<const uint64_t> orders);

  // The given list must already be a divisibility chain of values >= 2.
  static AbelianType from_invariant_factors(std::vector<uint64_t> factors);

  const std::vector<uint64_t>& invariant_factors() const { return d_; }
  bool is_trivial() const { return d_.empty(); }
  BigInt order() const;

  // prime -> exponent partition, largest exponent first.
  std::map<uint64_t, std::vector<uint32_t>> primary_decomposition() const;

  std::string to_string() const;  // "Z_1", "Z_2⊕Z_4", ...

  bool operator==(const AbelianType& o) const { return d_ == o.d_; }

 private:
  std::vector<uint64_t> d_;
};

AbelianType direct_sum(const AbelianType& a, const AbelianType& b);

// Type of the subgroup kG = {k*g : g in G}: each Z_m contributes Z_{m/gcd(k,m)}.
AbelianType multiple_subgroup(uint64_t k, const AbelianType& g);

inline bool is_isomorphic(const AbelianType& a, const AbelianType& b) { return a == b; }

}  // namespace ng
