#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ng::numth {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t m);

// Deterministic for all 64-bit inputs.
bool is_prime(uint64_t n);

// Prime factorization of n >= 1, sorted by prime.
std::vector<std::pair<uint64_t, unsigned>> factorize(uint64_t n);

std::vector<uint64_t> divisors(uint64_t n);  // sorted ascending
uint64_t euler_phi(uint64_t n);
int mobius(uint64_t n);

// Multiplicative order of a modulo m; requires gcd(a, m) == 1.
uint64_t mul_order(uint64_t a, uint64_t m);

// ipow with overflow check (throws std::overflow_error).
uint64_t checked_pow(uint64_t base, uint32_t exp);

}  // namespace ng::numth
