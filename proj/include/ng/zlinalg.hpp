#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ng/abelian_type.hpp"
#include "ng/common.hpp"

namespace ng {

// Dense matrix of arbitrary-precision integers.
class BigMatrix {
 public:
  BigMatrix(size_t rows, size_t cols);
  static BigMatrix identity(size_t n);
  // Rows are newline-separated, entries whitespace-separated.
  static BigMatrix from_string(std::string_view text);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  BigInt& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const BigInt& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  BigMatrix transposed() const;
  // Copy with one row and one column removed.
  BigMatrix without_row_col(size_t row, size_t col) const;
  friend BigMatrix operator*(const BigMatrix& a, const BigMatrix& b);
  bool operator==(const BigMatrix& o) const = default;

  std::string to_string() const;

 private:
  size_t rows_, cols_;
  std::vector<BigInt> a_;
};

// diagonal holds d_1 | d_2 | ... (non-negative, divisibility chain, zeros
// trailing); when transforms are kept, left * input * right == diag(diagonal).
struct SmithForm {
  std::vector<BigInt> diagonal;
  std::optional<BigMatrix> left, right;
};

SmithForm smith_normal_form(const BigMatrix& m, bool keep_transforms = false);

struct CokernelDecomposition {
  AbelianType torsion;
  size_t free_rank = 0;
};

// Z^cols / (lattice spanned by the rows of m).
CokernelDecomposition cokernel_type(const BigMatrix& m);

// Rewrite a square matrix in the basis e_0 - e_1, ..., e_{n-2} - e_{n-1}, e_{n-1}.
// The change of basis is unimodular, so the Smith form is unchanged.
BigMatrix conjugate_by_shift_basis(const BigMatrix& m);

}  // namespace ng
