#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace polysum {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// ---- fixed-width helpers ----

int bit_length(u64 v);    // index of highest set bit + 1; 0 for v = 0
int bit_length(u128 v);
u64 isqrt(u128 n);        // exact floor square root, integer Newton
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
u128 checked_mul(u128 a, u128 b);  // throws std::overflow_error
u128 checked_add(u128 a, u128 b);
u64 checked_pow_u64(u64 base, u32 exp);
u64 narrow_u64(u128 v);            // throws std::overflow_error
std::string dec_string(u128 v);

bool is_prime(u64 n);  // deterministic Miller-Rabin, valid below 2^64

std::vector<u64> sieve_primes(u64 limit);  // all primes <= limit
std::vector<u64> first_primes(u32 count);  // p_1 = 2, ..., p_count

// ---- factorization ----

struct Factorization {
  u64 value = 1;
  std::vector<std::pair<u64, u32>> factors;  // (prime, exponent), primes ascending
};

// Trial division below 2^21, then Miller-Rabin + Brent's rho for the rest.
// Accepts 1 <= n <= 2^63.
Factorization factorize(u64 n);

u64 sigma(const Factorization& f);  // sum of divisors; throws on u64 overflow
u128 sigma_u128(const Factorization& f);

// ---- modular machinery ----

struct Congruence {
  u64 residue = 0;
  u64 modulus = 1;
};

// Inverse of a modulo m; throws std::domain_error when gcd(a, m) > 1.
u64 mod_inverse(i64 a, u64 m);

// Combines congruences with pairwise coprime moduli into one congruence
// modulo the product. Throws on non-coprime moduli or modulus overflow.
Congruence crt_combine(const std::vector<Congruence>& cs);

struct TwoAdicRoot {
  u64 x;  // odd, 1 <= x <= 2^m - 1, x^2 = 8n+1 (mod 2^{m+2})
  u32 m;  // bit_length(isqrt(8n+1)) - 1
};

// Bit-by-bit 2-adic square root of 8n+1. The returned x is the smallest
// root in [1, 2^m - 1]; x^2 < 8n+1 always holds.
TwoAdicRoot two_adic_sqrt_8n1(u64 n);

struct TwoSquares {
  u64 x;
  u64 y;  // p does not divide y
};

// Solves x^2 + y^2 = n (mod p^k) for p = 1 (mod 4). Base solution mod p by
// value-set scan (for p | n: the canonical (a, 1) with a^2 + 1 = 0 mod p),
// then lifted one power at a time via l = ((n - x^2 - y^2)/p^s)(2y)^{-1}.
TwoSquares two_squares_mod_pk(u64 n, u64 p, u32 k);

}  // namespace polysum
