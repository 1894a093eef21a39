#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "ng/numth.hpp"

using namespace ng::numth;

TEST_CASE("mulmod and powmod near the 64-bit edge") {
  CHECK(mulmod(3, 4, 5) == 2);
  uint64_t big = 0xFFFFFFFFFFFFFFC5ull;  // largest 64-bit prime
  CHECK(mulmod(big - 1, big - 1, big) == 1);
  CHECK(powmod(2, 10, 1000) == 24);
  CHECK(powmod(big - 1, 2, big) == 1);
  CHECK(powmod(7, 0, 13) == 1);
  CHECK(powmod(0, 5, 13) == 0);
}

TEST_CASE("primality") {
  CHECK(!is_prime(0));
  CHECK(!is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(!is_prime(4));
  CHECK(!is_prime(561));   // Carmichael
  CHECK(!is_prime(6601));  // Carmichael
  CHECK(is_prime(2147483647ull));
  CHECK(is_prime(0xFFFFFFFFFFFFFFC5ull));
  CHECK(!is_prime(0xFFFFFFFFFFFFFFC5ull - 2));
}

TEST_CASE("factorization") {
  auto f = factorize(360);
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<uint64_t, uint32_t>{2, 3});
  CHECK(f[1] == std::pair<uint64_t, uint32_t>{3, 2});
  CHECK(f[2] == std::pair<uint64_t, uint32_t>{5, 1});
  CHECK(factorize(1).empty());

  // semiprime of two 31-bit primes exercises the rho path
  uint64_t a = 2147483647ull, b = 2147483629ull;
  auto g = factorize(a * b);
  REQUIRE(g.size() == 2);
  CHECK(g[0].first == b);
  CHECK(g[1].first == a);

  // roundtrip on a spread of values
  for (uint64_t v : {2ull, 97ull, 1024ull, 360360ull, 87381ull, 9256395ull}) {
    uint64_t prod = 1;
    for (auto [q, e] : factorize(v))
      for (uint32_t i = 0; i < e; ++i) prod *= q;
    CHECK(prod == v);
  }
}

TEST_CASE("divisors sorted and complete") {
  CHECK(divisors(1) == std::vector<uint64_t>{1});
  CHECK(divisors(12) == std::vector<uint64_t>{1, 2, 3, 4, 6, 12});
  auto d = divisors(2047);  // 23 * 89
  CHECK(d == std::vector<uint64_t>{1, 23, 89, 2047});
}

TEST_CASE("euler phi and mobius") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(10) == 4);
  CHECK(euler_phi(15) == 8);
  CHECK(euler_phi(31) == 30);
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  // sum over divisors of mu is zero beyond 1
  for (uint64_t n = 2; n <= 60; ++n) {
    int64_t s = 0;
    for (uint64_t d : divisors(n)) s += mobius(d);
    CHECK(s == 0);
  }
}

TEST_CASE("multiplicative order") {
  CHECK(mul_order(2, 7) == 3);
  CHECK(mul_order(3, 7) == 6);
  CHECK(mul_order(2, 9) == 6);
  CHECK(mul_order(2, 21) == 6);
  CHECK(mul_order(1, 5) == 1);
  CHECK_THROWS_AS(mul_order(2, 4), std::invalid_argument);  // not coprime
  // ord divides phi
  for (uint64_t m : {9ull, 11ull, 25ull, 49ull})
    CHECK(euler_phi(m) % mul_order(2, m) == 0);
}

TEST_CASE("checked_pow overflow") {
  CHECK(checked_pow(2, 20) == 1u << 20);
  CHECK(checked_pow(10, 19) == 10000000000000000000ull);
  CHECK_THROWS_AS(checked_pow(10, 20), std::overflow_error);
  CHECK_THROWS_AS(checked_pow(2, 64), std::overflow_error);
}
