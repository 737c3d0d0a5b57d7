#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polysum/arith.hpp"
#include "polysum/bitmap.hpp"

namespace polysum {

// Largest n accepted by the subset-sum oracle.
inline constexpr u64 kDefinitionOracleBound = 100'000;

// Largest sieve bound (the reference surveys run at 10^8).
inline constexpr u64 kSieveBoundCap = 1'000'000'000;

struct PracticalityReport {
  u64 n = 0;
  bool practical = false;
  std::optional<u64> failing_prime;  // first prime violating the criterion
  std::vector<u64> sigma_prefixes;   // running sigma, one per accepted prime
};

// Stewart-Sierpinski test: n = 2^{a_1} p_2^{a_2} ... is practical iff every
// p_j <= sigma(previous prefix) + 1. 1 and 2 are practical.
PracticalityReport is_practical(u64 n);

// Definitional oracle: subset-sum DP over the divisors of n, true iff every
// m in [1, n] is a sum of distinct divisors. Rejects n > kDefinitionOracleBound.
bool is_practical_by_definition(u64 n);

struct PracticalSieve {
  u64 bound = 0;
  Bitmap bits;  // bits 0..bound, bit i set iff i is practical

  bool test(u64 i) const { return bits.test(i); }
  u64 count() const { return bits.count(); }

  // Raw bit-array file: "PSIEVE01" magic, u64 LE bound, then
  // ceil((bound+1)/8) bytes, LSB-first bit order within bytes.
  void save(const std::string& path) const;
  static PracticalSieve load(const std::string& path);
};

// Enumerates every practical number <= bound by depth-first extension of
// admissible factorizations: from (value, sigma) append primes p > all used
// with p <= sigma + 1, any exponent that keeps value <= bound. The root step
// sigma(1) + 1 = 2 forces the factor 2. Branches run across workers.
PracticalSieve generate_practicals(u64 bound);

}  // namespace polysum
