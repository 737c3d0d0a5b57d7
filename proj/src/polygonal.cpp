#include "polysum/polygonal.hpp"

#include <stdexcept>

namespace polysum {

u128 polygonal_u128(u32 s, u64 k) {
  if (s < 3) throw std::invalid_argument("polygonal: s must be >= 3");
  if (k == 0) return 0;
  u128 tri = u128{k} * (k - 1) / 2;
  return checked_add(checked_mul(tri, s - 2), k);
}

u64 polygonal(u32 s, u64 k) { return narrow_u64(polygonal_u128(s, k)); }

std::optional<u64> gonal_index(u32 s, u64 v) {
  if (s < 3) throw std::invalid_argument("gonal_index: s must be >= 3");
  if (v == 0) return 0;
  // (s-2) k^2 - (s-4) k - 2v = 0
  i64 s4 = static_cast<i64>(s) - 4;
  u64 abs_s4 = static_cast<u64>(s4 < 0 ? -s4 : s4);
  u128 disc = u128{abs_s4} * abs_s4 + u128{8} * (s - 2) * v;
  u64 rt = isqrt(disc);
  if (u128{rt} * rt != disc) return std::nullopt;
  i128 num = static_cast<i128>(rt) + s4;
  u64 den = 2 * (u64{s} - 2);
  if (num <= 0 || num % den != 0) return std::nullopt;
  u64 k = static_cast<u64>(num / den);
  if (polygonal_u128(s, k) != v) return std::nullopt;
  return k;
}

std::vector<u64> gonal_values_upto(u32 s, u64 bound) {
  if (s < 3) throw std::invalid_argument("gonal_values_upto: s must be >= 3");
  std::vector<u64> values;
  for (u64 k = 0;; ++k) {
    u128 v = polygonal_u128(s, k);
    if (v > bound) break;
    values.push_back(static_cast<u64>(v));
  }
  return values;
}

TriangularValue triangular_from_odd(u64 x) {
  if (x % 2 == 0)
    throw std::invalid_argument("triangular_from_odd: x must be odd");
  u64 k = (x - 1) / 2;
  u64 t = narrow_u64((u128{x} * x - 1) / 8);
  return {t, k};
}

}  // namespace polysum
