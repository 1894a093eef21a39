#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ng/common.hpp"

namespace ng {

// Dense polynomial over F_p, coefficients stored lowest degree first,
// always normalized (reduced mod p, no leading zeros).
class PolyModP {
 public:
  explicit PolyModP(uint32_t p);  // zero polynomial
  PolyModP(uint32_t p, std::vector<uint32_t> coeffs);
  static PolyModP x(uint32_t p);
  static PolyModP constant(uint32_t p, uint32_t c);
  // Accepts e.g. "x^4+x+1", "2x^2+x+2", "0", "1"; whitespace is ignored.
  static PolyModP from_string(uint32_t p, std::string_view text);

  uint32_t p() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::span<const uint32_t> coeffs() const { return c_; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  // sum coeff(i) * p^i; throws std::overflow_error when it would not fit.
  uint64_t code() const;
  std::string to_string() const;

  PolyModP monic() const;  // divide by the leading coefficient
  friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
  static std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator%(const PolyModP& a, const PolyModP& b);
  static PolyModP gcd(PolyModP a, PolyModP b);  // monic unless both zero
  static PolyModP powmod(const PolyModP& base, uint64_t e, const PolyModP& mod);

  bool operator==(const PolyModP& o) const { return p_ == o.p_ && c_ == o.c_; }
  // Degree first, then coefficients from the highest power down; this agrees
  // with ordering by code() where code() is defined.
  bool operator<(const PolyModP& o) const;

 private:
  void normalize();
  uint32_t p_;
  std::vector<uint32_t> c_;
};

bool is_irreducible(const PolyModP& f);

// All monic irreducible polynomials of degree n over F_p, sorted ascending.
// Uses an exhaustive filter when p^n is small and a Frobenius-orbit walk of
// F_{p^n} otherwise; both produce the same sorted list.
std::vector<PolyModP> enumerate_irreducible(uint32_t p, uint32_t n);
std::vector<PolyModP> enumerate_irreducible_by_orbits(uint32_t p, uint32_t n);

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

// Element of F_{p^n} = F_p[x]/(modulus), as a coordinate vector of length n
// in the power basis 1, x, ..., x^(n-1). The context must outlive the element.
class FieldElem {
 public:
  const FieldCtx& ctx() const { return *ctx_; }
  std::span<const uint32_t> coords() const { return coords_; }
  uint64_t code() const;
  bool is_zero() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem pow(uint64_t e) const;
  FieldElem frobenius() const;  // a -> a^p
  bool operator==(const FieldElem& o) const;

 private:
  friend class FieldCtx;
  FieldElem(const FieldCtx* ctx, std::vector<uint32_t> coords)
      : ctx_(ctx), coords_(std::move(coords)) {}
  const FieldCtx* ctx_;
  std::vector<uint32_t> coords_;
};

// Immutable field context. All arithmetic for elements of one field goes
// through its context; mixing contexts raises std::invalid_argument.
class FieldCtx {
 public:
  // modulus must be monic irreducible of degree >= 1 with prime p.
  static FieldCtxPtr make(PolyModP modulus);
  // Smallest (by code) monic irreducible of degree n over F_p.
  static FieldCtxPtr make_default(uint32_t p, uint32_t n);

  uint32_t p() const { return p_; }
  uint32_t n() const { return n_; }
  const PolyModP& modulus() const { return modulus_; }
  // p^n; throws std::overflow_error when it exceeds 2^62.
  uint64_t order() const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem alpha() const;  // the class of x
  FieldElem from_coords(std::vector<uint32_t> coords) const;
  FieldElem from_poly(const PolyModP& f) const;
  FieldElem from_code(uint64_t code) const;

  // Code-space kernels used by the dense scans; all require order() to fit.
  uint64_t add_codes(uint64_t a, uint64_t b) const;
  uint64_t mul_codes(uint64_t a, uint64_t b) const;
  uint64_t pow_code(uint64_t a, uint64_t e) const;
  uint64_t frobenius_code(uint64_t a) const;

  // out = a * b reduced; all spans of length n, out distinct from inputs.
  void mul_into(std::span<const uint32_t> a, std::span<const uint32_t> b,
                std::span<uint32_t> out) const;

 private:
  explicit FieldCtx(PolyModP modulus);
  void decode(uint64_t code, uint32_t* out) const;
  uint64_t encode(const uint32_t* c) const;

  uint32_t p_, n_;
  PolyModP modulus_;
  std::vector<uint32_t> mod_c_;    // modulus coefficients, length n+1
  std::vector<uint64_t> pow_p_;    // p^0 .. p^n (saturated)
  bool code_ok_;                   // p^n <= 2^62
};

// Orbit of a under the Frobenius a -> a^p, up to the first repetition.
std::vector<FieldElem> frobenius_orbit(const FieldElem& a);

// Monic minimal polynomial of a over F_p; degree = orbit length (divides n).
PolyModP minimal_polynomial(const FieldElem& a);

// Evaluate f (coefficients lifted from F_p) at a field element.
FieldElem eval_at(const PolyModP& f, const FieldElem& a);

// f monic irreducible of degree n: do the Frobenius iterates of a root form
// an F_p-basis of F_{p^n}? Independent of the presentation of the field.
bool is_normal(const PolyModP& f);

// Same question asked of a concrete root in its own context.
bool is_normal_root(const FieldElem& root);

// f monic irreducible: is a root a generator of the multiplicative group?
bool is_primitive(const PolyModP& f);

uint64_t count_normal(uint32_t p, uint32_t n);
uint64_t count_primitive(uint32_t p, uint32_t n);

// Classification of every element of F_{p^n} by minimal polynomial.
// minpolys is sorted by (degree, coefficient order); root_rep[i] is the
// smallest element code whose minimal polynomial is minpolys[i].
struct FieldScan {
  FieldCtxPtr ctx;
  std::vector<PolyModP> minpolys;
  std::vector<uint32_t> minpoly_of_code;
  std::vector<uint64_t> root_rep;

  size_t index_of(const PolyModP& f) const;  // throws if absent
};

// Requires p^n <= max_codes (resource_limit_error otherwise).
FieldScan scan_field(const FieldCtxPtr& ctx, uint64_t max_codes = uint64_t{1} << 24);

}  // namespace ng
