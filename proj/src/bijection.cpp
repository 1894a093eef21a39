#include "ng/bijection.hpp"

#include <algorithm>
#include <stdexcept>

#include "ng/numth.hpp"

namespace ng {

size_t BijectionFamily::necklace_index(const Necklace& v) const {
  auto it = std::lower_bound(necklaces.begin(), necklaces.end(), v);
  if (it == necklaces.end() || !(*it == v))
    throw std::invalid_argument("necklace not in the family universe");
  return static_cast<size_t>(it - necklaces.begin());
}

size_t BijectionFamily::poly_index(const PolyModP& f) const {
  auto it = std::lower_bound(polys.begin(), polys.end(), f);
  if (it == polys.end() || !(*it == f))
    throw std::invalid_argument("polynomial not in the family universe");
  return static_cast<size_t>(it - polys.begin());
}

std::vector<PermTable> BijectionFamily::necklace_generators() const {
  std::vector<PermTable> out;
  out.reserve(params.size());
  const auto& inv0 = inverse[0];
  for (const auto& fwd : forward) {
    std::vector<uint32_t> img(necklaces.size());
    for (size_t v = 0; v < img.size(); ++v) img[v] = inv0[fwd[v]];
    out.emplace_back(std::move(img));
  }
  return out;
}

std::vector<PermTable> BijectionFamily::poly_generators() const {
  std::vector<PermTable> out;
  out.reserve(params.size());
  const auto& inv0 = inverse[0];
  for (const auto& fwd : forward) {
    std::vector<uint32_t> img(polys.size());
    for (size_t f = 0; f < img.size(); ++f) img[f] = fwd[inv0[f]];
    out.emplace_back(std::move(img));
  }
  return out;
}

namespace {

std::vector<uint64_t> orbit_codes(const FieldCtx& ctx, uint64_t root) {
  std::vector<uint64_t> orbit{root};
  uint64_t t = ctx.frobenius_code(root);
  while (t != root) {
    orbit.push_back(t);
    if (orbit.size() > ctx.n()) throw invariant_error("frobenius orbit exceeds field degree");
    t = ctx.frobenius_code(t);
  }
  return orbit;
}

}  // namespace

BijectionFamily build_family(MapKind kind, uint32_t p, uint32_t n, uint64_t max_field_codes) {
  BijectionFamily fam;
  fam.kind = kind;
  fam.p = p;
  fam.n = n;
  fam.ctx = FieldCtx::make_default(p, n);
  fam.necklaces = enumerate_necklaces(p, n);
  fam.polys = enumerate_irreducible(p, n);
  if (fam.necklaces.size() != fam.polys.size())
    throw invariant_error("necklace and polynomial universes differ in size");
  FieldScan scan = scan_field(fam.ctx, max_field_codes);

  // scan minpoly index -> universe polynomial index (degree n only)
  std::vector<uint32_t> to_universe(scan.minpolys.size(), UINT32_MAX);
  for (size_t i = 0; i < fam.polys.size(); ++i)
    to_universe[scan.index_of(fam.polys[i])] = static_cast<uint32_t>(i);

  // Parameters, in universe polynomial order.
  for (size_t i = 0; i < fam.polys.size(); ++i) {
    const PolyModP& f = fam.polys[i];
    uint64_t root = scan.root_rep[scan.index_of(f)];
    std::vector<uint64_t> orbit = orbit_codes(*fam.ctx, root);
    if (orbit.size() != n) throw invariant_error("root of a degree-n polynomial has a short orbit");
    if (kind == MapKind::reutenauer) {
      if (!is_normal_root(fam.ctx->from_code(root))) continue;
    } else {
      if (!is_primitive(f)) continue;
    }
    fam.params.push_back(MapParam{f, root, std::move(orbit)});
  }
  if (fam.params.empty()) throw invariant_error("no parameters at this size");

  const uint64_t q = fam.ctx->order();
  const size_t nv = fam.necklaces.size();

  // Discrete-log tables over a fixed primitive element make the Golomb
  // evaluation a single modular multiplication per necklace.
  std::vector<uint32_t> dlog;
  std::vector<uint64_t> pow_w;
  if (kind == MapKind::golomb && q <= (uint64_t{1} << 22)) {
    uint64_t w = fam.params[0].root_code;
    pow_w.resize(q - 1);
    dlog.assign(q, UINT32_MAX);
    uint64_t t = 1;
    for (uint64_t j = 0; j < q - 1; ++j) {
      pow_w[j] = t;
      if (dlog[t] != UINT32_MAX) throw invariant_error("reference root is not primitive");
      dlog[t] = static_cast<uint32_t>(j);
      t = fam.ctx->mul_codes(t, w);
    }
    if (t != 1) throw invariant_error("reference root is not primitive");
  }

  // Exponent weights p^i mod (q-1) for the Golomb map; basis coordinate rows
  // and digit masks for the Reutenauer map.
  std::vector<uint64_t> pmod;
  if (kind == MapKind::golomb) {
    pmod.resize(n);
    uint64_t t = 1 % (q - 1);
    for (uint32_t i = 0; i < n; ++i) {
      pmod[i] = t;
      t = numth::mulmod(t, p, q - 1);
    }
  }

  fam.forward.assign(fam.params.size(), {});
  fam.inverse.assign(fam.params.size(), {});
  for (size_t k = 0; k < fam.params.size(); ++k) {
    const MapParam& par = fam.params[k];
    auto& fwd = fam.forward[k];
    auto& inv = fam.inverse[k];
    fwd.assign(nv, UINT32_MAX);
    inv.assign(nv, UINT32_MAX);

    // Decoded basis rows for the generic sum path.
    std::vector<std::vector<uint32_t>> basis_rows;
    if (kind == MapKind::reutenauer && p != 2) {
      for (uint64_t b : par.basis_codes) {
        std::vector<uint32_t> row(n);
        uint64_t v = b;
        for (uint32_t i = 0; i < n; ++i) {
          row[i] = static_cast<uint32_t>(v % p);
          v /= p;
        }
        basis_rows.push_back(std::move(row));
      }
    }
    uint64_t gamma_log = 0;
    if (kind == MapKind::golomb && !dlog.empty()) gamma_log = dlog[par.root_code];

    std::vector<uint32_t> acc(n);
    for (size_t vi = 0; vi < nv; ++vi) {
      auto digits = fam.necklaces[vi].digits();
      uint64_t code;
      if (kind == MapKind::reutenauer) {
        if (p == 2) {
          code = 0;
          for (uint32_t i = 0; i < n; ++i)
            if (digits[i]) code ^= par.basis_codes[i];
        } else {
          std::fill(acc.begin(), acc.end(), 0u);
          for (uint32_t i = 0; i < n; ++i) {
            uint32_t d = digits[i];
            if (d == 0) continue;
            const auto& row = basis_rows[i];
            for (uint32_t j = 0; j < n; ++j)
              acc[j] = static_cast<uint32_t>((acc[j] + static_cast<uint64_t>(d) * row[j]) % p);
          }
          code = 0;
          for (uint32_t j = n; j-- > 0;) code = code * p + acc[j];
        }
      } else {
        uint64_t e = 0;
        for (uint32_t i = 0; i < n; ++i)
          e = (e + numth::mulmod(digits[i], pmod[i], q - 1)) % (q - 1);
        if (!dlog.empty()) {
          code = pow_w[gamma_log * e % (q - 1)];
        } else {
          code = fam.ctx->pow_code(par.root_code, e);
        }
      }
      uint32_t pi = to_universe[scan.minpoly_of_code[code]];
      if (pi == UINT32_MAX) throw invariant_error("map image has degree below n");
      if (inv[pi] != UINT32_MAX) throw invariant_error("map is not injective");
      fwd[vi] = pi;
      inv[pi] = static_cast<uint32_t>(vi);
    }
    for (uint32_t v : inv)
      if (v == UINT32_MAX) throw invariant_error("map is not surjective");
  }
  return fam;
}

// --- single evaluations -------------------------------------------------------

PolyModP reutenauer_image_digits(const FieldCtx& ctx, std::span<const uint64_t> basis_codes,
                                 std::span<const uint32_t> digits) {
  if (basis_codes.size() != ctx.n() || digits.size() != ctx.n())
    throw std::invalid_argument("digit or basis length does not match the field degree");
  FieldElem sum = ctx.zero();
  for (uint32_t i = 0; i < ctx.n(); ++i) {
    if (digits[i] == 0) continue;
    FieldElem b = ctx.from_code(basis_codes[i]);
    std::vector<uint32_t> scale(ctx.n(), 0);
    scale[0] = digits[i] % ctx.p();
    sum = sum + b * ctx.from_coords(std::move(scale));
  }
  return minimal_polynomial(sum);
}

PolyModP golomb_image_digits(const FieldCtx& ctx, uint64_t root_code,
                             std::span<const uint32_t> digits) {
  if (digits.size() != ctx.n())
    throw std::invalid_argument("digit length does not match the field degree");
  const uint64_t q1 = ctx.order() - 1;
  uint64_t e = 0;
  uint64_t pw = 1 % q1;
  for (uint32_t i = 0; i < ctx.n(); ++i) {
    e = (e + numth::mulmod(digits[i] % ctx.p(), pw, q1)) % q1;
    pw = numth::mulmod(pw, ctx.p(), q1);
  }
  return minimal_polynomial(ctx.from_code(ctx.pow_code(root_code, e)));
}

PolyModP reutenauer_map(const FieldCtx& ctx, std::span<const uint64_t> basis_codes,
                        const Necklace& v) {
  if (v.p() != ctx.p() || v.n() != ctx.n())
    throw std::invalid_argument("necklace does not match the field parameters");
  return reutenauer_image_digits(ctx, basis_codes, v.digits());
}

PolyModP golomb_map(const FieldCtx& ctx, uint64_t root_code, const Necklace& v) {
  if (v.p() != ctx.p() || v.n() != ctx.n())
    throw std::invalid_argument("necklace does not match the field parameters");
  return golomb_image_digits(ctx, root_code, v.digits());
}

}  // namespace ng
