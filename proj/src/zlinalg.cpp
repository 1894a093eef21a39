#include "ng/zlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ng {

BigMatrix::BigMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("matrix dimensions must be positive");
  a_.resize(rows * cols);
}

BigMatrix BigMatrix::identity(size_t n) {
  BigMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BigMatrix BigMatrix::from_string(std::string_view text) {
  std::vector<std::vector<BigInt>> rows;
  std::istringstream is{std::string(text)};
  std::string line;
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<BigInt> row;
    std::string tok;
    while (ls >> tok) row.emplace_back(tok);
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows[0].size())
      throw std::invalid_argument("ragged matrix text");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix text");
  BigMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = std::move(rows[i][j]);
  return m;
}

BigMatrix BigMatrix::transposed() const {
  BigMatrix m(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

BigMatrix BigMatrix::without_row_col(size_t row, size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::invalid_argument("index out of range");
  if (rows_ == 1 || cols_ == 1) throw std::invalid_argument("cannot shrink to empty matrix");
  BigMatrix m(rows_ - 1, cols_ - 1);
  for (size_t i = 0, di = 0; i < rows_; ++i) {
    if (i == row) continue;
    for (size_t j = 0, dj = 0; j < cols_; ++j) {
      if (j == col) continue;
      m.at(di, dj) = at(i, j);
      ++dj;
    }
    ++di;
  }
  return m;
}

BigMatrix operator*(const BigMatrix& a, const BigMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  BigMatrix m(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const BigInt& v = a.at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j) m.at(i, j) += v * b.at(k, j);
    }
  return m;
}

std::string BigMatrix::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < rows_; ++i) {
    if (i) os << '\n';
    for (size_t j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j);
    }
  }
  return os.str();
}

namespace {

BigInt big_abs(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

struct SnfWorker {
  BigMatrix a;
  std::optional<BigMatrix> u, v;

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < a.cols(); ++k) std::swap(a.at(i, k), a.at(j, k));
    if (u)
      for (size_t k = 0; k < u->cols(); ++k) std::swap(u->at(i, k), u->at(j, k));
  }
  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < a.rows(); ++k) std::swap(a.at(k, i), a.at(k, j));
    if (v)
      for (size_t k = 0; k < v->rows(); ++k) std::swap(v->at(k, i), v->at(k, j));
  }
  // row dst += f * row src
  void add_row(size_t dst, size_t src, const BigInt& f) {
    for (size_t k = 0; k < a.cols(); ++k) a.at(dst, k) += f * a.at(src, k);
    if (u)
      for (size_t k = 0; k < u->cols(); ++k) u->at(dst, k) += f * u->at(src, k);
  }
  void add_col(size_t dst, size_t src, const BigInt& f) {
    for (size_t k = 0; k < a.rows(); ++k) a.at(k, dst) += f * a.at(k, src);
    if (v)
      for (size_t k = 0; k < v->rows(); ++k) v->at(k, dst) += f * v->at(k, src);
  }
  void negate_row(size_t i) {
    for (size_t k = 0; k < a.cols(); ++k) a.at(i, k) = -a.at(i, k);
    if (u)
      for (size_t k = 0; k < u->cols(); ++k) u->at(i, k) = -u->at(i, k);
  }
};

}  // namespace

SmithForm smith_normal_form(const BigMatrix& m, bool keep_transforms) {
  SnfWorker w{m, std::nullopt, std::nullopt};
  if (keep_transforms) {
    w.u = BigMatrix::identity(m.rows());
    w.v = BigMatrix::identity(m.cols());
  }
  const size_t r = m.rows(), c = m.cols();
  const size_t steps = std::min(r, c);
  for (size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero |entry| of the trailing submatrix, ties at the
      // lowest (row, col), becomes the pivot.
      size_t pi = r, pj = c;
      BigInt best;
      for (size_t i = t; i < r; ++i)
        for (size_t j = t; j < c; ++j) {
          const BigInt& x = w.a.at(i, j);
          if (x == 0) continue;
          BigInt ax = big_abs(x);
          if (pi == r || ax < best) {
            best = ax;
            pi = i;
            pj = j;
          }
        }
      if (pi == r) {
        // Trailing submatrix is zero; diagonal stays zero from here on.
        t = steps;
        break;
      }
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      const BigInt& d = w.a.at(t, t);
      bool dirty = false;
      for (size_t i = t + 1; i < r; ++i) {
        if (w.a.at(i, t) == 0) continue;
        BigInt q = w.a.at(i, t) / d;
        if (q != 0) w.add_row(i, t, -q);
        if (w.a.at(i, t) != 0) dirty = true;
      }
      for (size_t j = t + 1; j < c; ++j) {
        if (w.a.at(t, j) == 0) continue;
        BigInt q = w.a.at(t, j) / d;
        if (q != 0) w.add_col(j, t, -q);
        if (w.a.at(t, j) != 0) dirty = true;
      }
      if (dirty) continue;  // leftovers are smaller than |d|; reselect pivot
      // Row and column are clear; enforce that the pivot divides everything
      // that remains, otherwise fold an offending row in and restart.
      bool fixed = false;
      for (size_t i = t + 1; i < r && !fixed; ++i)
        for (size_t j = t + 1; j < c && !fixed; ++j) {
          if (w.a.at(i, j) % d != 0) {
            w.add_row(t, i, 1);
            fixed = true;
          }
        }
      if (!fixed) break;
    }
    if (t >= steps) break;
    if (w.a.at(t, t) < 0) w.negate_row(t);
  }
  SmithForm out;
  out.diagonal.reserve(steps);
  for (size_t t = 0; t < steps; ++t) out.diagonal.push_back(w.a.at(t, t));
  // Sanity: the construction must have produced a non-negative divisibility chain.
  for (size_t t = 0; t + 1 < steps; ++t) {
    const BigInt& x = out.diagonal[t];
    const BigInt& y = out.diagonal[t + 1];
    if (x < 0 || (x == 0 && y != 0) || (x != 0 && y % x != 0))
      throw invariant_error("Smith diagonal is not a divisibility chain");
  }
  if (keep_transforms) {
    out.left = std::move(w.u);
    out.right = std::move(w.v);
  }
  return out;
}

CokernelDecomposition cokernel_type(const BigMatrix& m) {
  SmithForm s = smith_normal_form(m);
  CokernelDecomposition out;
  std::vector<uint64_t> torsion;
  size_t nonzero = 0;
  const BigInt cap = BigInt(UINT64_MAX);
  for (const BigInt& d : s.diagonal) {
    if (d == 0) continue;
    ++nonzero;
    if (d > cap) throw resource_limit_error("invariant factor exceeds 64 bits");
    uint64_t v = d.convert_to<uint64_t>();
    if (v > 1) torsion.push_back(v);
  }
  out.torsion = AbelianType::from_cyclic_orders(torsion);
  out.free_rank = m.cols() - nonzero;
  return out;
}

BigMatrix conjugate_by_shift_basis(const BigMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("square matrix required");
  const size_t n = m.rows();
  // Basis e_0 - e_1, ..., e_{n-2} - e_{n-1}, e_{n-1} as the rows of a
  // unimodular bidiagonal matrix; rewrite m as Cinv * m * C.
  BigMatrix cmat(n, n), cinv(n, n);
  for (size_t i = 0; i < n; ++i) {
    cmat.at(i, i) = 1;
    if (i + 1 < n) cmat.at(i, i + 1) = -1;
    for (size_t j = i; j < n; ++j) cinv.at(i, j) = 1;
  }
  return cinv * m * cmat;
}

}  // namespace ng
