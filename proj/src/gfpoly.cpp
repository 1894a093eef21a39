#include "ng/gfpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ng/numth.hpp"

namespace ng {

namespace {

uint32_t inv_mod_p(uint32_t a, uint32_t p) {
  return static_cast<uint32_t>(numth::powmod(a, p - 2, p));
}

void check_prime(uint32_t p) {
  if (p < 2 || !numth::is_prime(p))
    throw std::invalid_argument("coefficient modulus must be a prime");
}

}  // namespace

PolyModP::PolyModP(uint32_t p) : p_(p) { check_prime(p); }

PolyModP::PolyModP(uint32_t p, std::vector<uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  check_prime(p);
  for (auto& v : c_) v %= p_;
  normalize();
}

void PolyModP::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyModP PolyModP::x(uint32_t p) { return PolyModP(p, {0, 1}); }

PolyModP PolyModP::constant(uint32_t p, uint32_t c) { return PolyModP(p, {c}); }

PolyModP PolyModP::from_string(uint32_t p, std::string_view text) {
  check_prime(p);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::vector<uint32_t> coeffs;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t next = s.find('+', pos);
    std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
    pos = next == std::string::npos ? s.size() : next + 1;
    if (term.empty()) throw std::invalid_argument("malformed polynomial text");
    uint64_t coef = 1;
    size_t i = 0;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      size_t j = 0;
      coef = 0;
      while (j < term.size() && std::isdigit(static_cast<unsigned char>(term[j]))) {
        coef = coef * 10 + (term[j] - '0');
        if (coef > UINT32_MAX) throw std::invalid_argument("coefficient too large");
        ++j;
      }
      i = j;
    }
    uint64_t exp = 0;
    if (i < term.size()) {
      if (term[i] != 'x') throw std::invalid_argument("malformed polynomial term");
      ++i;
      exp = 1;
      if (i < term.size()) {
        if (term[i] != '^') throw std::invalid_argument("malformed polynomial term");
        ++i;
        if (i >= term.size() || !std::isdigit(static_cast<unsigned char>(term[i])))
          throw std::invalid_argument("malformed exponent");
        exp = 0;
        while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
          exp = exp * 10 + (term[i] - '0');
          if (exp > 1'000'000) throw std::invalid_argument("exponent too large");
          ++i;
        }
      }
    }
    if (i != term.size()) throw std::invalid_argument("malformed polynomial term");
    if (exp >= coeffs.size()) coeffs.resize(exp + 1, 0);
    coeffs[exp] = static_cast<uint32_t>((coeffs[exp] + coef) % p);
  }
  return PolyModP(p, std::move(coeffs));
}

uint64_t PolyModP::code() const {
  unsigned __int128 acc = 0, pw = 1;
  for (size_t i = 0; i < c_.size(); ++i) {
    acc += pw * c_[i];
    if (acc > UINT64_MAX) throw std::overflow_error("polynomial code overflow");
    if (i + 1 < c_.size()) {
      pw *= p_;
      if (pw > UINT64_MAX) throw std::overflow_error("polynomial code overflow");
    }
  }
  return static_cast<uint64_t>(acc);
}

std::string PolyModP::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    uint32_t c = c_[i];
    if (c == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c;
      os << 'x';
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

PolyModP PolyModP::monic() const {
  if (is_zero()) throw std::invalid_argument("monic: zero polynomial");
  if (c_.back() == 1) return *this;
  uint64_t inv = inv_mod_p(c_.back(), p_);
  std::vector<uint32_t> out(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    out[i] = static_cast<uint32_t>(c_[i] * inv % p_);
  return PolyModP(p_, std::move(out));
}

namespace {
void check_same_p(const PolyModP& a, const PolyModP& b) {
  if (a.p() != b.p()) throw std::invalid_argument("mixed coefficient moduli");
}
}  // namespace

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
  check_same_p(a, b);
  std::vector<uint32_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < out.size(); ++i) out[i] = (a.coeff(i) + b.coeff(i)) % a.p();
  return PolyModP(a.p(), std::move(out));
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
  check_same_p(a, b);
  std::vector<uint32_t> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (size_t i = 0; i < out.size(); ++i)
    out[i] = (a.coeff(i) + a.p() - b.coeff(i)) % a.p();
  return PolyModP(a.p(), std::move(out));
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  check_same_p(a, b);
  if (a.is_zero() || b.is_zero()) return PolyModP(a.p());
  uint64_t p = a.p();
  std::vector<uint64_t> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    uint64_t ai = a.coeff(i);
    if (ai == 0) continue;
    for (size_t j = 0; j < b.coeffs().size(); ++j)
      acc[i + j] = (acc[i + j] + ai * b.coeff(j)) % p;
  }
  std::vector<uint32_t> out(acc.begin(), acc.end());
  return PolyModP(a.p(), std::move(out));
}

std::pair<PolyModP, PolyModP> PolyModP::divmod(const PolyModP& a, const PolyModP& b) {
  check_same_p(a, b);
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  uint64_t p = a.p();
  if (a.degree() < b.degree()) return {PolyModP(a.p()), a};
  std::vector<uint32_t> rem(a.c_);
  std::vector<uint32_t> quot(a.degree() - b.degree() + 1, 0);
  uint64_t lead_inv = inv_mod_p(b.c_.back(), a.p_);
  for (int i = a.degree(); i >= b.degree(); --i) {
    uint64_t v = rem[i];
    if (v == 0) continue;
    uint64_t q = v * lead_inv % p;
    quot[i - b.degree()] = static_cast<uint32_t>(q);
    for (int j = 0; j <= b.degree(); ++j) {
      uint64_t sub = q * b.c_[j] % p;
      rem[i - b.degree() + j] =
          static_cast<uint32_t>((rem[i - b.degree() + j] + p - sub) % p);
    }
  }
  return {PolyModP(a.p(), std::move(quot)), PolyModP(a.p(), std::move(rem))};
}

PolyModP operator%(const PolyModP& a, const PolyModP& b) {
  return PolyModP::divmod(a, b).second;
}

PolyModP PolyModP::gcd(PolyModP a, PolyModP b) {
  check_same_p(a, b);
  while (!b.is_zero()) {
    PolyModP r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

PolyModP PolyModP::powmod(const PolyModP& base, uint64_t e, const PolyModP& mod) {
  check_same_p(base, mod);
  if (mod.degree() < 1) throw std::invalid_argument("powmod: modulus must have degree >= 1");
  PolyModP r = PolyModP::constant(base.p(), 1) % mod;
  PolyModP b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return r;
}

bool PolyModP::operator<(const PolyModP& o) const {
  if (p_ != o.p_) return p_ < o.p_;
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  }
  return false;
}

bool is_irreducible(const PolyModP& f) {
  if (f.is_zero()) throw std::invalid_argument("is_irreducible: zero polynomial");
  int n = f.degree();
  if (n == 0) return false;
  PolyModP g = f.monic();
  if (n == 1) return true;
  uint32_t p = f.p();
  // Rabin's test: x^(p^n) == x mod g, and for every prime q | n the
  // polynomial x^(p^(n/q)) - x is coprime to g.
  std::vector<int> checkpoints;
  for (auto [q, e] : numth::factorize(static_cast<uint64_t>(n))) {
    (void)e;
    checkpoints.push_back(n / static_cast<int>(q));
  }
  std::sort(checkpoints.begin(), checkpoints.end());
  PolyModP t = PolyModP::x(p) % g;
  const PolyModP x = PolyModP::x(p) % g;
  size_t ci = 0;
  for (int k = 1; k <= n; ++k) {
    t = PolyModP::powmod(t, p, g);
    while (ci < checkpoints.size() && checkpoints[ci] == k) {
      if (!(PolyModP::gcd(t - x, g) == PolyModP::constant(p, 1))) return false;
      ++ci;
    }
  }
  return t == x;
}

std::vector<PolyModP> enumerate_irreducible(uint32_t p, uint32_t n) {
  check_prime(p);
  if (n == 0) throw std::invalid_argument("enumerate_irreducible: n must be >= 1");
  uint64_t total;
  try {
    total = numth::checked_pow(p, n);
  } catch (const std::overflow_error&) {
    throw resource_limit_error("field too large to enumerate");
  }
  if (total > (uint64_t{1} << 24)) return enumerate_irreducible_by_orbits(p, n);
  std::vector<PolyModP> out;
  std::vector<uint32_t> coeffs(n + 1, 0);
  coeffs[n] = 1;
  for (uint64_t k = 0; k < total; ++k) {
    uint64_t v = k;
    for (uint32_t i = 0; i < n; ++i) {
      coeffs[i] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    PolyModP f(p, coeffs);
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

std::vector<PolyModP> enumerate_irreducible_by_orbits(uint32_t p, uint32_t n) {
  check_prime(p);
  if (n == 0) throw std::invalid_argument("enumerate_irreducible: n must be >= 1");
  uint64_t total;
  try {
    total = numth::checked_pow(p, n);
  } catch (const std::overflow_error&) {
    throw resource_limit_error("field too large to enumerate");
  }
  if (total > (uint64_t{1} << 32))
    throw resource_limit_error("field too large to enumerate");
  FieldCtxPtr ctx = FieldCtx::make_default(p, n);
  std::vector<PolyModP> out;
  std::vector<uint64_t> orbit;
  for (uint64_t c = 0; c < total; ++c) {
    orbit.clear();
    uint64_t t = c;
    bool minimal = true;
    do {
      orbit.push_back(t);
      t = ctx->frobenius_code(t);
      if (t < c) {
        minimal = false;
        break;
      }
    } while (t != c);
    if (!minimal || orbit.size() != n) continue;
    out.push_back(minimal_polynomial(ctx->from_code(c)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// --- FieldCtx ---------------------------------------------------------------

FieldCtx::FieldCtx(PolyModP modulus)
    : p_(modulus.p()), n_(static_cast<uint32_t>(modulus.degree())), modulus_(std::move(modulus)) {
  mod_c_.assign(modulus_.coeffs().begin(), modulus_.coeffs().end());
  pow_p_.resize(n_ + 1);
  pow_p_[0] = 1;
  code_ok_ = true;
  for (uint32_t i = 1; i <= n_; ++i) {
    unsigned __int128 t = static_cast<unsigned __int128>(pow_p_[i - 1]) * p_;
    if (t > (uint64_t{1} << 62)) {
      code_ok_ = false;
      pow_p_[i] = 0;
    } else {
      pow_p_[i] = static_cast<uint64_t>(t);
    }
    if (!code_ok_) pow_p_[i] = 0;
  }
}

FieldCtxPtr FieldCtx::make(PolyModP modulus) {
  if (modulus.degree() < 1) throw std::invalid_argument("field modulus must have degree >= 1");
  if (!modulus.is_monic()) throw std::invalid_argument("field modulus must be monic");
  if (modulus.degree() > 64) throw std::invalid_argument("field degree above 64 unsupported");
  if (!is_irreducible(modulus)) throw std::invalid_argument("field modulus must be irreducible");
  return FieldCtxPtr(new FieldCtx(std::move(modulus)));
}

FieldCtxPtr FieldCtx::make_default(uint32_t p, uint32_t n) {
  check_prime(p);
  if (n == 0 || n > 64) throw std::invalid_argument("field degree must be in [1, 64]");
  // Walk monic degree-n polynomials in ascending order; the first irreducible
  // one is the default modulus.
  std::vector<uint32_t> coeffs(n + 1, 0);
  coeffs[n] = 1;
  while (true) {
    PolyModP f(p, coeffs);
    if (is_irreducible(f)) return FieldCtxPtr(new FieldCtx(std::move(f)));
    uint32_t i = 0;
    while (i < n && coeffs[i] == p - 1) {
      coeffs[i] = 0;
      ++i;
    }
    if (i == n) throw invariant_error("no irreducible polynomial found");
    ++coeffs[i];
  }
}

uint64_t FieldCtx::order() const {
  if (!code_ok_) throw std::overflow_error("field order exceeds 2^62");
  return pow_p_[n_];
}

FieldElem FieldCtx::zero() const { return FieldElem(this, std::vector<uint32_t>(n_, 0)); }

FieldElem FieldCtx::one() const {
  std::vector<uint32_t> c(n_, 0);
  c[0] = n_ > 0 ? 1 : 0;
  if (n_ == 0) throw invariant_error("degenerate field context");
  return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::alpha() const {
  std::vector<uint32_t> c(n_, 0);
  if (n_ == 1) {
    // x reduces to a constant modulo a linear modulus.
    c[0] = (p_ - mod_c_[0]) % p_;
  } else {
    c[1] = 1;
  }
  return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::from_coords(std::vector<uint32_t> coords) const {
  if (coords.size() != n_) throw std::invalid_argument("coordinate vector has wrong length");
  for (auto& v : coords) v %= p_;
  return FieldElem(this, std::move(coords));
}

FieldElem FieldCtx::from_poly(const PolyModP& f) const {
  if (f.p() != p_) throw std::invalid_argument("mixed coefficient moduli");
  PolyModP r = f % modulus_;
  std::vector<uint32_t> c(n_, 0);
  for (uint32_t i = 0; i < n_ && i < r.coeffs().size(); ++i) c[i] = r.coeff(i);
  return FieldElem(this, std::move(c));
}

void FieldCtx::decode(uint64_t code, uint32_t* out) const {
  for (uint32_t i = 0; i < n_; ++i) {
    out[i] = static_cast<uint32_t>(code % p_);
    code /= p_;
  }
  if (code != 0) throw std::invalid_argument("element code out of range");
}

uint64_t FieldCtx::encode(const uint32_t* c) const {
  uint64_t acc = 0;
  for (uint32_t i = n_; i-- > 0;) acc = acc * p_ + c[i];
  return acc;
}

FieldElem FieldCtx::from_code(uint64_t code) const {
  if (!code_ok_) throw std::overflow_error("field order exceeds 2^62");
  std::vector<uint32_t> c(n_);
  decode(code, c.data());
  return FieldElem(this, std::move(c));
}

void FieldCtx::mul_into(std::span<const uint32_t> a, std::span<const uint32_t> b,
                        std::span<uint32_t> out) const {
  if (a.size() != n_ || b.size() != n_ || out.size() != n_)
    throw std::invalid_argument("mul_into: bad span length");
  uint64_t work[127] = {0};
  const uint64_t p = p_;
  const bool small_p = p < (uint64_t{1} << 15);
  for (uint32_t i = 0; i < n_; ++i) {
    uint64_t ai = a[i];
    if (ai == 0) continue;
    if (small_p) {
      for (uint32_t j = 0; j < n_; ++j) work[i + j] += ai * b[j];
    } else {
      for (uint32_t j = 0; j < n_; ++j) work[i + j] = (work[i + j] + ai * b[j] % p) % p;
    }
  }
  if (small_p)
    for (uint32_t k = 0; k < 2 * n_ - 1; ++k) work[k] %= p;
  // Fold degrees >= n down using the monic modulus.
  for (uint32_t k = 2 * n_ - 1; k-- > n_;) {
    uint64_t v = work[k];
    if (v == 0) continue;
    work[k] = 0;
    for (uint32_t j = 0; j < n_; ++j)
      work[k - n_ + j] = (work[k - n_ + j] + v * (p - mod_c_[j])) % p;
  }
  for (uint32_t j = 0; j < n_; ++j) out[j] = static_cast<uint32_t>(work[j]);
}

uint64_t FieldCtx::add_codes(uint64_t a, uint64_t b) const {
  if (p_ == 2) return a ^ b;
  uint32_t ca[64], cb[64];
  decode(a, ca);
  decode(b, cb);
  for (uint32_t i = 0; i < n_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return encode(ca);
}

uint64_t FieldCtx::mul_codes(uint64_t a, uint64_t b) const {
  uint32_t ca[64], cb[64], co[64];
  decode(a, ca);
  decode(b, cb);
  mul_into(std::span<const uint32_t>(ca, n_), std::span<const uint32_t>(cb, n_),
           std::span<uint32_t>(co, n_));
  return encode(co);
}

uint64_t FieldCtx::pow_code(uint64_t a, uint64_t e) const {
  uint64_t r = 1;  // code of the constant 1
  uint64_t b = a;
  while (e) {
    if (e & 1) r = mul_codes(r, b);
    b = mul_codes(b, b);
    e >>= 1;
  }
  return r;
}

uint64_t FieldCtx::frobenius_code(uint64_t a) const {
  if (p_ == 2) return mul_codes(a, a);
  return pow_code(a, p_);
}

// --- FieldElem --------------------------------------------------------------

uint64_t FieldElem::code() const {
  const FieldCtx& c = *ctx_;
  if (!c.order()) throw std::overflow_error("field order exceeds 2^62");
  uint64_t acc = 0;
  for (size_t i = coords_.size(); i-- > 0;) acc = acc * c.p() + coords_[i];
  return acc;
}

bool FieldElem::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](uint32_t v) { return v == 0; });
}

namespace {
void check_same_ctx(const FieldElem& a, const FieldElem& b) {
  if (&a.ctx() == &b.ctx()) return;
  if (a.ctx().p() != b.ctx().p() || a.ctx().n() != b.ctx().n() ||
      !(a.ctx().modulus() == b.ctx().modulus()))
    throw std::invalid_argument("mixed field contexts");
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same_ctx(*this, o);
  std::vector<uint32_t> c(coords_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = (coords_[i] + o.coords_[i]) % ctx_->p();
  return FieldElem(ctx_, std::move(c));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same_ctx(*this, o);
  std::vector<uint32_t> c(coords_.size());
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = (coords_[i] + ctx_->p() - o.coords_[i]) % ctx_->p();
  return FieldElem(ctx_, std::move(c));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same_ctx(*this, o);
  std::vector<uint32_t> c(coords_.size());
  ctx_->mul_into(coords_, o.coords_, c);
  return FieldElem(ctx_, std::move(c));
}

FieldElem FieldElem::pow(uint64_t e) const {
  FieldElem r = ctx_->one();
  FieldElem b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FieldElem FieldElem::frobenius() const { return pow(ctx_->p()); }

bool FieldElem::operator==(const FieldElem& o) const {
  check_same_ctx(*this, o);
  return coords_ == o.coords_;
}

std::vector<FieldElem> frobenius_orbit(const FieldElem& a) {
  std::vector<FieldElem> orbit{a};
  FieldElem t = a.frobenius();
  while (!(t == a)) {
    orbit.push_back(t);
    if (orbit.size() > a.ctx().n())
      throw invariant_error("frobenius orbit exceeds field degree");
    t = t.frobenius();
  }
  return orbit;
}

namespace {

// Monic product of (x - r) over the given roots, coefficients computed in the
// field; every coefficient must land in the prime subfield.
PolyModP poly_from_roots(const FieldCtx& ctx, const std::vector<std::vector<uint32_t>>& roots) {
  const uint32_t p = ctx.p();
  const uint32_t n = ctx.n();
  size_t deg = roots.size();
  // coefficient k of the running product lives at flat offset k*n
  std::vector<uint32_t> c((deg + 1) * n, 0);
  std::vector<uint32_t> tmp(n);
  c[0] = 1;  // constant polynomial 1
  size_t cur = 0;
  for (const auto& r : roots) {
    // multiply by (x - r), highest coefficient first
    for (size_t k = cur + 1; k-- > 0;) {
      std::span<uint32_t> ck(c.data() + k * n, n);
      ctx.mul_into(ck, std::span<const uint32_t>(r.data(), n), tmp);
      std::span<uint32_t> up(c.data() + (k + 1) * n, n);
      for (uint32_t j = 0; j < n; ++j) {
        up[j] = (up[j] + ck[j]) % p;     // shift: +x * c_k
        ck[j] = (p - tmp[j] % p) % p;    // replace: -r * c_k
      }
      // note: up for k == cur starts as zero, so the shift is exact
    }
    ++cur;
  }
  std::vector<uint32_t> out(deg + 1, 0);
  for (size_t k = 0; k <= deg; ++k) {
    for (uint32_t j = 1; j < n; ++j)
      if (c[k * n + j] != 0)
        throw invariant_error("conjugate product has a coefficient outside the prime field");
    out[k] = c[k * n];
  }
  return PolyModP(p, std::move(out));
}

}  // namespace

PolyModP minimal_polynomial(const FieldElem& a) {
  auto orbit = frobenius_orbit(a);
  std::vector<std::vector<uint32_t>> roots;
  roots.reserve(orbit.size());
  for (const auto& e : orbit)
    roots.emplace_back(e.coords().begin(), e.coords().end());
  PolyModP f = poly_from_roots(a.ctx(), roots);
  if (!f.is_monic()) throw invariant_error("minimal polynomial not monic");
  if (!eval_at(f, a).is_zero()) throw invariant_error("minimal polynomial does not vanish");
  return f;
}

FieldElem eval_at(const PolyModP& f, const FieldElem& a) {
  if (f.p() != a.ctx().p()) throw std::invalid_argument("mixed coefficient moduli");
  const FieldCtx& ctx = a.ctx();
  FieldElem acc = ctx.zero();
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * a;
    std::vector<uint32_t> c(ctx.n(), 0);
    c[0] = f.coeff(i);
    acc = acc + ctx.from_coords(std::move(c));
  }
  return acc;
}

namespace {

// Row rank of an m x n matrix over F_p (rows modified in place).
uint32_t rank_mod_p(std::vector<std::vector<uint32_t>>& rows, uint32_t p) {
  uint32_t rank = 0;
  size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    uint64_t inv = inv_mod_p(rows[rank][col], p);
    for (size_t j = col; j < ncols; ++j)
      rows[rank][j] = static_cast<uint32_t>(rows[rank][j] * inv % p);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      uint64_t f = rows[i][col];
      for (size_t j = col; j < ncols; ++j)
        rows[i][j] = static_cast<uint32_t>((rows[i][j] + (p - rows[rank][j]) * f) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_normal_root(const FieldElem& root) {
  const FieldCtx& ctx = root.ctx();
  uint32_t n = ctx.n();
  std::vector<std::vector<uint32_t>> rows;
  FieldElem t = root;
  for (uint32_t i = 0; i < n; ++i) {
    rows.emplace_back(t.coords().begin(), t.coords().end());
    t = t.frobenius();
  }
  return rank_mod_p(rows, ctx.p()) == n;
}

bool is_normal(const PolyModP& f) {
  if (!f.is_monic()) throw std::invalid_argument("is_normal: polynomial must be monic");
  if (!is_irreducible(f)) throw std::invalid_argument("is_normal: reducible input");
  // Work inside F_p[x]/(f) itself, so the answer cannot depend on any other
  // presentation of the field.
  FieldCtxPtr ctx = FieldCtx::make(f);
  return is_normal_root(ctx->alpha());
}

bool is_primitive(const PolyModP& f) {
  if (!f.is_monic()) throw std::invalid_argument("is_primitive: polynomial must be monic");
  if (!is_irreducible(f)) throw std::invalid_argument("is_primitive: reducible input");
  uint32_t p = f.p();
  uint32_t n = static_cast<uint32_t>(f.degree());
  uint64_t q1;
  try {
    q1 = numth::checked_pow(p, n) - 1;
  } catch (const std::overflow_error&) {
    throw resource_limit_error("field too large for primitivity test");
  }
  const PolyModP x = PolyModP::x(p);
  const PolyModP one = PolyModP::constant(p, 1);
  if (!(PolyModP::powmod(x, q1, f) == one))
    throw invariant_error("root order does not divide group order");
  for (auto [r, e] : numth::factorize(q1)) {
    (void)e;
    if (PolyModP::powmod(x, q1 / r, f) == one) return false;
  }
  return true;
}

uint64_t count_normal(uint32_t p, uint32_t n) {
  uint64_t count = 0;
  for (const auto& f : enumerate_irreducible(p, n))
    if (is_normal(f)) ++count;
  return count;
}

uint64_t count_primitive(uint32_t p, uint32_t n) {
  check_prime(p);
  if (n == 0) throw std::invalid_argument("count_primitive: n must be >= 1");
  uint64_t q1;
  try {
    q1 = numth::checked_pow(p, n) - 1;
  } catch (const std::overflow_error&) {
    throw resource_limit_error("field too large for primitivity count");
  }
  uint64_t by_formula = numth::euler_phi(q1) / n;
  if (q1 + 1 <= (uint64_t{1} << 20)) {
    uint64_t by_enum = 0;
    for (const auto& f : enumerate_irreducible(p, n))
      if (is_primitive(f)) ++by_enum;
    if (by_enum != by_formula)
      throw invariant_error("primitive polynomial count mismatch");
  }
  return by_formula;
}

// --- FieldScan --------------------------------------------------------------

size_t FieldScan::index_of(const PolyModP& f) const {
  auto it = std::lower_bound(minpolys.begin(), minpolys.end(), f);
  if (it == minpolys.end() || !(*it == f))
    throw std::invalid_argument("polynomial not present in field scan");
  return static_cast<size_t>(it - minpolys.begin());
}

FieldScan scan_field(const FieldCtxPtr& ctx, uint64_t max_codes) {
  uint64_t q = ctx->order();
  if (q > max_codes) throw resource_limit_error("field too large to scan");
  FieldScan scan;
  scan.ctx = ctx;
  scan.minpoly_of_code.assign(q, UINT32_MAX);
  std::vector<uint64_t> orbit;
  std::vector<std::vector<uint32_t>> roots;
  const uint32_t n = ctx->n();
  std::vector<std::pair<PolyModP, uint64_t>> found;  // (minpoly, min root code)
  for (uint64_t c = 0; c < q; ++c) {
    if (scan.minpoly_of_code[c] != UINT32_MAX) continue;
    orbit.clear();
    uint64_t t = c;
    do {
      orbit.push_back(t);
      t = ctx->frobenius_code(t);
    } while (t != c);
    roots.clear();
    for (uint64_t r : orbit) {
      std::vector<uint32_t> coords(n);
      uint64_t v = r;
      for (uint32_t i = 0; i < n; ++i) {
        coords[i] = static_cast<uint32_t>(v % ctx->p());
        v /= ctx->p();
      }
      roots.push_back(std::move(coords));
    }
    uint32_t id = static_cast<uint32_t>(found.size());
    found.emplace_back(poly_from_roots(*ctx, roots), c);
    for (uint64_t r : orbit) scan.minpoly_of_code[r] = id;
  }
  // Re-index in sorted polynomial order.
  std::vector<uint32_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](uint32_t a, uint32_t b) { return found[a].first < found[b].first; });
  std::vector<uint32_t> where(found.size());
  for (uint32_t i = 0; i < perm.size(); ++i) where[perm[i]] = i;
  scan.minpolys.reserve(found.size());
  scan.root_rep.resize(found.size());
  for (uint32_t i = 0; i < perm.size(); ++i) {
    scan.minpolys.push_back(std::move(found[perm[i]].first));
    scan.root_rep[i] = found[perm[i]].second;
  }
  for (auto& v : scan.minpoly_of_code) v = where[v];
  return scan;
}

}  // namespace ng
