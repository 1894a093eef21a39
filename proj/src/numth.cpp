#include "ng/numth.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ng::numth {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  if (m == 1) return 0;
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

namespace {

bool miller_rabin(uint64_t n, uint64_t a) {
  if (a % n == 0) return true;
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

uint64_t pollard_rho(uint64_t n) {
  // Brent's variant; n must be odd composite, not a prime power of 2.
  if (n % 2 == 0) return 2;
  uint64_t c = 1;
  while (true) {
    uint64_t x = 2, y = 2, d = 1;
    uint64_t saved_x = x;
    int power = 1, lam = 0;
    auto f = [&](uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      if (lam == power) {
        saved_x = y;
        power *= 2;
        lam = 0;
      }
      y = f(y);
      ++lam;
      uint64_t diff = saved_x > y ? saved_x - y : y - saved_x;
      d = std::gcd(diff, n);
    }
    if (d != n) return d;
    ++c;
  }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  uint64_t d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin(n, a)) return false;
  }
  return true;
}

std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  std::vector<uint64_t> primes;
  // Strip small primes first; Pollard rho handles what remains.
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull,
                     41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull, 73ull, 79ull, 83ull,
                     89ull, 97ull}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<uint64_t, unsigned>> out;
  for (uint64_t p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1u);
  }
  return out;
}

std::vector<uint64_t> divisors(uint64_t n) {
  auto f = factorize(n);
  std::vector<uint64_t> out{1};
  for (auto [p, e] : f) {
    size_t old = out.size();
    uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < old; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

uint64_t euler_phi(uint64_t n) {
  uint64_t r = n;
  for (auto [p, e] : factorize(n)) {
    (void)e;
    r -= r / p;
  }
  return r;
}

int mobius(uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius: n must be >= 1");
  auto f = factorize(n);
  for (auto [p, e] : f) {
    (void)p;
    if (e > 1) return 0;
  }
  return (f.size() % 2 == 0) ? 1 : -1;
}

uint64_t mul_order(uint64_t a, uint64_t m) {
  if (m == 0) throw std::invalid_argument("mul_order: modulus must be >= 1");
  a %= m;
  if (std::gcd(a, m) != 1) throw std::invalid_argument("mul_order: arguments not coprime");
  if (m == 1) return 1;
  // Order divides phi(m); scan divisors of phi in ascending order.
  uint64_t phi = euler_phi(m);
  for (uint64_t d : divisors(phi)) {
    if (powmod(a, d, m) == 1) return d;
  }
  throw std::logic_error("mul_order: no order found");
}

uint64_t checked_pow(uint64_t base, uint32_t exp) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    unsigned __int128 t = static_cast<unsigned __int128>(r) * base;
    if (t > UINT64_MAX) throw std::overflow_error("checked_pow: overflow");
    r = static_cast<uint64_t>(t);
  }
  return r;
}

}  // namespace ng::numth
