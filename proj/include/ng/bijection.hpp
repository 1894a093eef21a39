#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ng/abgroup.hpp"
#include "ng/common.hpp"
#include "ng/gfpoly.hpp"
#include "ng/necklace.hpp"

namespace ng {

enum class MapKind { reutenauer, golomb };

// One parameter of a map family: a normal polynomial together with the
// Frobenius orbit of one of its roots (Reutenauer), or a primitive
// polynomial with one root (Golomb). Roots live in the family's context.
struct MapParam {
  PolyModP poly;
  uint64_t root_code = 0;
  std::vector<uint64_t> basis_codes;  // Frobenius orbit of the root
};

// All parameters of one kind at (p, n), with both directions of every map
// materialized as total index tables over the shared sorted universes of
// aperiodic necklaces and monic irreducible polynomials of degree n.
class BijectionFamily {
 public:
  MapKind kind;
  uint32_t p = 0, n = 0;
  FieldCtxPtr ctx;
  std::vector<Necklace> necklaces;
  std::vector<PolyModP> polys;
  std::vector<MapParam> params;
  std::vector<std::vector<uint32_t>> forward;  // [param][necklace index] -> poly index
  std::vector<std::vector<uint32_t>> inverse;  // [param][poly index] -> necklace index

  size_t necklace_index(const Necklace& v) const;
  size_t poly_index(const PolyModP& f) const;

  // Generators of the necklace-side group: inverse[0] composed with every
  // forward table. The polynomial-side group uses the opposite composition.
  std::vector<PermTable> necklace_generators() const;
  std::vector<PermTable> poly_generators() const;
};

BijectionFamily build_family(MapKind kind, uint32_t p, uint32_t n,
                             uint64_t max_field_codes = uint64_t{1} << 24);

// Single evaluations, straight from the definitions. The digit overloads
// accept any digit sequence (not only canonical necklaces), which makes the
// rotation invariance directly observable.
PolyModP reutenauer_map(const FieldCtx& ctx, std::span<const uint64_t> basis_codes,
                        const Necklace& v);
PolyModP golomb_map(const FieldCtx& ctx, uint64_t root_code, const Necklace& v);
PolyModP reutenauer_image_digits(const FieldCtx& ctx, std::span<const uint64_t> basis_codes,
                                 std::span<const uint32_t> digits);
PolyModP golomb_image_digits(const FieldCtx& ctx, uint64_t root_code,
                             std::span<const uint32_t> digits);

}  // namespace ng
