#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ng {

// An aperiodic necklace over the alphabet {0, ..., p-1}, stored as the
// lexicographically smallest rotation. Instances are always canonical;
// periodic input is reported as std::nullopt, never as a Necklace.
class Necklace {
 public:
  static std::optional<Necklace> canonicalize(uint32_t p, std::span<const uint32_t> digits);
  // Digit string ("00101") or comma-separated residues for p > 10 ("0,11,3").
  static Necklace from_string(uint32_t p, std::string_view text);

  uint32_t p() const { return p_; }
  uint32_t n() const { return static_cast<uint32_t>(d_.size()); }
  std::span<const uint32_t> digits() const { return d_; }
  std::string to_string() const;

  bool operator==(const Necklace& o) const { return p_ == o.p_ && d_ == o.d_; }
  // Length first, then lexicographic on digits.
  bool operator<(const Necklace& o) const;

 private:
  Necklace(uint32_t p, std::vector<uint32_t> d) : p_(p), d_(std::move(d)) {}
  uint32_t p_;
  std::vector<uint32_t> d_;
};

// Number of aperiodic necklaces of length n over p symbols (Moebius formula).
uint64_t count_aperiodic(uint32_t p, uint32_t n);

// All aperiodic necklaces of length n over p symbols, sorted ascending.
std::vector<Necklace> enumerate_necklaces(uint32_t p, uint32_t n);

// Digit-wise cyclic neighbor sum nu_i + nu_{i+1} mod p, re-canonicalized.
// std::nullopt when the image is periodic.
std::optional<Necklace> averaging(const Necklace& v);

// Complement of every digit; p must be 2.
Necklace flip(const Necklace& v);

}  // namespace ng
