#include "ng/circulant.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "ng/abgroup.hpp"
#include "ng/gfpoly.hpp"
#include "ng/numth.hpp"

namespace ng {

namespace {

constexpr uint64_t kEnumCap = uint64_t{1} << 24;

PolyModP binomial_modulus(uint32_t p, uint32_t n) {
  std::vector<uint32_t> c(n + 1, 0);
  c[0] = p - 1;  // -1 mod p
  c[n] = 1;
  return PolyModP(p, std::move(c));
}

uint64_t space_size(uint32_t p, uint32_t n) {
  uint64_t total = numth::checked_pow(p, n);
  if (total > kEnumCap) throw resource_limit_error("circulant enumeration too large");
  return total;
}

}  // namespace

CirculantFp::CirculantFp(uint32_t p, uint32_t n, std::vector<uint32_t> first_row)
    : p_(p), n_(n), row_(std::move(first_row)) {
  if (!numth::is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n == 0) throw std::invalid_argument("size must be >= 1");
  if (row_.size() != n) throw std::invalid_argument("first row must have length n");
  for (auto& c : row_) c %= p;
}

CirculantFp CirculantFp::identity(uint32_t p, uint32_t n) {
  std::vector<uint32_t> row(n, 0);
  row[0] = 1;
  return CirculantFp(p, n, std::move(row));
}

CirculantFp CirculantFp::shift(uint32_t p, uint32_t n) {
  std::vector<uint32_t> row(n, 0);
  row[1 % n] = 1;
  return CirculantFp(p, n, std::move(row));
}

CirculantFp CirculantFp::from_code(uint32_t p, uint32_t n, uint64_t code) {
  std::vector<uint32_t> row(n);
  for (uint32_t i = 0; i < n; ++i) {
    row[i] = static_cast<uint32_t>(code % p);
    code /= p;
  }
  if (code != 0) throw std::invalid_argument("code out of range for (p, n)");
  return CirculantFp(p, n, std::move(row));
}

uint64_t CirculantFp::code() const {
  uint64_t c = 0;
  for (uint32_t i = n_; i-- > 0;) {
    if (c > (UINT64_MAX - row_[i]) / p_) throw resource_limit_error("circulant code overflow");
    c = c * p_ + row_[i];
  }
  return c;
}

CirculantFp CirculantFp::rotated() const {
  std::vector<uint32_t> row(n_);
  for (uint32_t i = 0; i < n_; ++i) row[(i + 1) % n_] = row_[i];
  return CirculantFp(p_, n_, std::move(row));
}

uint64_t CirculantFp::min_rotation_code() const {
  uint64_t best = code();
  CirculantFp r = rotated();
  for (uint32_t i = 1; i < n_; ++i) {
    best = std::min(best, r.code());
    r = r.rotated();
  }
  return best;
}

CirculantFp circulant_multiply(const CirculantFp& a, const CirculantFp& b) {
  if (a.p() != b.p() || a.n() != b.n())
    throw std::invalid_argument("circulant size or characteristic mismatch");
  const uint32_t p = a.p(), n = a.n();
  std::vector<uint32_t> row(n, 0);
  for (uint32_t i = 0; i < n; ++i) {
    if (a.first_row()[i] == 0) continue;
    uint64_t ai = a.first_row()[i];
    for (uint32_t j = 0; j < n; ++j) {
      uint32_t k = i + j >= n ? i + j - n : i + j;
      row[k] = static_cast<uint32_t>((row[k] + ai * b.first_row()[j]) % p);
    }
  }
  return CirculantFp(p, n, std::move(row));
}

bool is_unit(const CirculantFp& a) {
  PolyModP f(a.p(), a.first_row());
  if (f.is_zero()) return false;
  return PolyModP::gcd(f, binomial_modulus(a.p(), a.n())).degree() == 0;
}

BigInt unit_group_order(uint32_t p, uint32_t n) {
  if (!numth::is_prime(p)) throw std::invalid_argument("p must be prime");
  if (n == 0) throw std::invalid_argument("size must be >= 1");
  uint64_t pa = 1;  // p-power part of n
  uint32_t m = n;
  while (m % p == 0) {
    m /= p;
    pa *= p;
  }
  // x^n - 1 = (x^m - 1)^{pa}; for each d | m the cyclotomic level d splits into
  // phi(d)/o_d irreducible factors of degree o_d = ord_d(p), and each local
  // ring F_p[x]/(f^pa) has (p^o - 1) * p^{o*(pa - 1)} units.
  BigInt order = 1;
  for (uint64_t d : numth::divisors(m)) {
    uint64_t o = d == 1 ? 1 : numth::mul_order(p % d, d);
    uint64_t reps = numth::euler_phi(d) / o;
    BigInt local = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(o)) - 1;
    local *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(o * (pa - 1)));
    order *= boost::multiprecision::pow(local, static_cast<unsigned>(reps));
  }
  return order;
}

uint64_t count_units_bruteforce(uint32_t p, uint32_t n) {
  uint64_t total = space_size(p, n);
  PolyModP mod = binomial_modulus(p, n);
  uint64_t count = 0;
  for (uint64_t code = 1; code < total; ++code) {
    std::vector<uint32_t> row(n);
    uint64_t c = code;
    for (uint32_t i = 0; i < n; ++i) {
      row[i] = static_cast<uint32_t>(c % p);
      c /= p;
    }
    if (PolyModP::gcd(PolyModP(p, std::move(row)), mod).degree() == 0) ++count;
  }
  return count;
}

AbelianType quotient_group_type(uint32_t p, uint32_t n) {
  uint64_t total = space_size(p, n);
  std::vector<uint64_t> units;
  PolyModP mod = binomial_modulus(p, n);
  for (uint64_t code = 1; code < total; ++code) {
    std::vector<uint32_t> row(n);
    uint64_t c = code;
    for (uint32_t i = 0; i < n; ++i) {
      row[i] = static_cast<uint32_t>(c % p);
      c /= p;
    }
    if (PolyModP::gcd(PolyModP(p, std::move(row)), mod).degree() == 0) units.push_back(code);
  }
  if (unit_group_order(p, n) != BigInt(units.size()))
    throw invariant_error("unit count disagrees with closed-form order");

  std::vector<uint64_t> reps;
  {
    std::unordered_map<uint64_t, char> seen;
    for (uint64_t u : units) {
      uint64_t r = CirculantFp::from_code(p, n, u).min_rotation_code();
      if (seen.emplace(r, 1).second) reps.push_back(r);
    }
  }
  uint64_t shift_order = n == 1 ? 1 : n;
  if (reps.size() * shift_order != units.size())
    throw invariant_error("shift cosets do not partition the unit group evenly");

  std::vector<uint64_t> orders;
  orders.reserve(reps.size());
  for (uint64_t r : reps) {
    CirculantFp u = CirculantFp::from_code(p, n, r);
    CirculantFp w = u;
    uint64_t k = 1;
    while (w.min_rotation_code() != 1) {
      w = w * u;
      if (++k > reps.size()) throw invariant_error("coset order exceeds quotient size");
    }
    orders.push_back(k);
  }
  return type_from_order_statistics(orders);
}

}  // namespace ng
