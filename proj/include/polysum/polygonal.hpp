#pragma once

#include <optional>
#include <vector>

#include "polysum/arith.hpp"

namespace polysum {

// P_s(k) = (s-2) k(k-1)/2 + k. P_s(0) = 0 and P_s(1) = 1 for every s >= 3.
u128 polygonal_u128(u32 s, u64 k);
u64 polygonal(u32 s, u64 k);  // throws std::overflow_error beyond 64 bits

// Inverse: the unique k with P_s(k) = v, if any. Integer square root of the
// discriminant plus an exact re-check; no floating point.
std::optional<u64> gonal_index(u32 s, u64 v);

// All s-gonal values <= bound, ascending, starting at P_s(0) = 0.
std::vector<u64> gonal_values_upto(u32 s, u64 bound);

struct TriangularValue {
  u64 t;  // (x^2 - 1) / 8
  u64 k;  // (x - 1) / 2, with t = k(k+1)/2
};

// Odd x => (x^2 - 1)/8 is the triangular number T_{(x-1)/2}.
TriangularValue triangular_from_odd(u64 x);

}  // namespace polysum
