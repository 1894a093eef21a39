#pragma once

#include <cstdint>
#include <vector>

#include "ng/abelian_type.hpp"
#include "ng/common.hpp"

namespace ng {

// Circulant matrix over F_p stored by its first row; row i+1 is row i shifted
// one step right, so the matrix lives in the algebra F_p[x]/(x^n - 1) with the
// first row as coefficient vector.
class CirculantFp {
 public:
  CirculantFp(uint32_t p, uint32_t n, std::vector<uint32_t> first_row);
  static CirculantFp identity(uint32_t p, uint32_t n);
  static CirculantFp shift(uint32_t p, uint32_t n);  // permutation circulant of (0,1,...,n-1)
  static CirculantFp from_code(uint32_t p, uint32_t n, uint64_t code);

  uint32_t p() const { return p_; }
  uint32_t n() const { return n_; }
  const std::vector<uint32_t>& first_row() const { return row_; }
  uint64_t code() const;       // sum row[i] * p^i
  CirculantFp rotated() const;  // this * shift
  uint64_t min_rotation_code() const;

  bool operator==(const CirculantFp& o) const { return p_ == o.p_ && row_ == o.row_; }

 private:
  uint32_t p_;
  uint32_t n_;
  std::vector<uint32_t> row_;
};

// Cyclic convolution of the first rows.
CirculantFp circulant_multiply(const CirculantFp& a, const CirculantFp& b);
inline CirculantFp operator*(const CirculantFp& a, const CirculantFp& b) {
  return circulant_multiply(a, b);
}

// True iff the first row is invertible mod x^n - 1.
bool is_unit(const CirculantFp& a);

// |C_n(F_p)*| from the factorization of x^n - 1 into irreducible powers.
BigInt unit_group_order(uint32_t p, uint32_t n);

// Exhaustive count over all p^n circulants; p^n capped at 2^24.
uint64_t count_units_bruteforce(uint32_t p, uint32_t n);

// Canonical type of C_n(F_p)* / <shift>, by coset enumeration with minimal
// rotation representatives and order statistics. p^n capped at 2^24.
AbelianType quotient_group_type(uint32_t p, uint32_t n);

}  // namespace ng
