#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polysum/arith.hpp"
#include "polysum/polygonal.hpp"

namespace polysum {

// ---- practical + triangular (total, deterministic) ----

struct TriDecomposition {
  u64 n = 0;
  u64 x = 0;         // odd root with x^2 = 8n+1 (mod 2^{m+2})
  u32 m = 0;
  u64 cofactor = 0;  // s in 8n+1 - x^2 = 2^{m+2} s; s <= 2^m
  u64 practical_part = 0;  // 2^{m-1} s
  u64 tri_index = 0;       // (x-1)/2
};

// n = 2^{m-1} s + (x^2-1)/8 with the practical part certified by the
// closure rule s <= 2^m = sigma(2^{m-1}) + 1.
TriDecomposition decompose_practical_triangular(u64 n);

// Full from-scratch re-check of every invariant, practicality included.
bool verify(const TriDecomposition& d);

// ---- pair congruences for practical + two s-gonals ----

struct PairCongruence {
  u32 s_gon = 0;
  u64 n_target = 0;
  u64 x_res = 0;
  u64 y_res = 0;
  u64 modulus = 0;  // P_s(x_res) + P_s(y_res) = n_target (mod modulus)
};

// Solves P_s(x) + P_s(y) = n (mod p) for odd prime p. When p | (s-2) the
// pair is (n mod p, 0); otherwise the lexicographically smallest pair.
PairCongruence pair_mod_p(u32 s, u64 n, u64 p);

// Modulus-4 representative pair (0,0) / (0,1); any x1 = x, y1 = y (mod 4)
// keeps P_s(x1) + P_s(y1) = n (mod 2).
PairCongruence pair_mod_2(u32 s, u64 n);

// Smallest prime p with p = 1 (mod 4) and p not dividing s-2.
u64 special_prime(u32 s);

// Solves P_s(x) + P_s(y) = n (mod p^k) through the square-completion
// identity 8(s-2)P_s(x) = (2(s-2)x - (s-4))^2 - (s-4)^2 and a lifted
// two-squares solution of x0^2 + y0^2 = 8(s-2)n + 2(s-4)^2.
PairCongruence pair_mod_pk(u32 s, u64 n, u64 p, u32 k);

// Minimal integer constant with 2 P_s(2 p x) <= A(s) x^2 for all x >= 1,
// namely 4(s-2)p^2 for p = special_prime(s).
u64 constant_A(u32 s);

// ---- proof-parameter analysis ----

struct Theorem2Params {
  u32 s_gon = 0;
  u64 special_prime = 0;
  u32 special_prime_index = 0;  // i(s): 1-based index in the prime sequence
  u64 A = 0;
  std::optional<u32> r_exact;   // smallest r >= i(s) with sigma/n ratio >= A
  std::optional<u64> N_of_s;    // 2 P_s(2 p_1 ... p_r) when r_exact exists
  double r_estimate_ln_pr = 0;  // Mertens estimate ln p_r ~ A zeta(2) / e^gamma
  u64 prime_cap = 0;
  double product_at_cap = 0;    // prod (1 + 1/p) over primes <= cap
};

Theorem2Params theorem2_params(u32 s, u64 prime_cap);

// ---- search-mode practical + two s-gonal decomposition ----

struct PolyDecomposition {
  u64 n = 0;
  u32 s_gon = 0;
  u64 practical_part = 0;
  u64 x = 0;
  u64 y = 0;
};

bool verify(const PolyDecomposition& d);

struct Theorem2Witness {
  PolyDecomposition dec;
  u32 r = 0;
  u32 k = 0;
  u64 n_k = 0;  // 2 p_1 ... p_r with the special prime raised to k
  std::vector<PairCongruence> residues;  // chosen solution per modulus
};

// CRT pipeline from the theorem proof: largest k <= max_k with
// 2 P_s(n_k) < n, congruences mod 4 / each odd p_i / p_{i(s)}^k combined to
// (x, y) mod n_k, then q = n - P_s(x) - P_s(y) accepted when the quotient
// bound q/(n_k/2) <= sigma(n_k/2) + 1 certifies it practical or a direct
// practicality check passes. Alternative residue solutions are walked in
// mixed-radix order, k decreasing. Empty result = search exhausted, a
// legitimate outcome since feasible r is far below the proof's bound.
std::optional<Theorem2Witness> theorem2_decompose(u32 s, u64 n, u32 r,
                                                  u32 max_k);

// ---- witness serialization (stable field names) ----

std::string witness_json(const TriDecomposition& d);
std::string witness_json(const Theorem2Witness& w);

}  // namespace polysum
