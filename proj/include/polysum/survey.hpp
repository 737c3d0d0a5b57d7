#pragma once

#include <optional>
#include <string>

#include "polysum/arith.hpp"
#include "polysum/bitmap.hpp"
#include "polysum/practical.hpp"

namespace polysum {

struct RepBitmap {
  u32 s_gon = 0;
  u64 bound = 0;
  bool allow_zero = true;
  bool two_gonals = false;
  Bitmap bits;  // index n in [1, bound); bit set iff n is representable

  bool test(u64 n) const { return bits.test(n); }
};

// bit n set iff n = q + P_s(j) for some practical q >= 1 and j >= 0
// (j >= 1 when allow_zero is false). Word-level shift-OR of the practical
// bitmap by every gonal offset; destination ranges fan out across workers.
// A caller-provided sieve (bound >= bound-1) avoids regeneration.
RepBitmap rep_one_gonal(u32 s, u64 bound, bool allow_zero,
                        const PracticalSieve* sieve = nullptr);

// bit n set iff n = q + P_s(x) + P_s(y). Derived from rep_one_gonal with a
// per-n early-exit scan over the second gonal offset.
RepBitmap rep_two_gonal(u32 s, u64 bound, bool allow_zero,
                        const PracticalSieve* sieve = nullptr);

struct SurveyRow {
  u32 s_gon = 0;
  u64 bound = 0;
  bool allow_zero = true;
  u64 count_non_representable = 0;
  std::optional<u64> largest_non_representable;
};

SurveyRow survey_row(u32 s, u64 bound, bool allow_zero,
                     const PracticalSieve* sieve = nullptr);
SurveyRow row_from_bitmap(const RepBitmap& rep);

std::string survey_csv_header();          // "s,bound,allow_zero,count,largest"
std::string to_csv(const SurveyRow& row); // e.g. "5,1000000,true,13,2671"
std::string to_json(const SurveyRow& row);

// Residue class mod 12 whose members admit only practical part 1 or 2 in a
// practical + s-gonal representation; defined for s = 0 or 4 (mod 12).
// With a = (s-2)/2 and b = (s-4)/2: r = a^{-1} (2 - b^2/4) (mod 12).
u32 obstruction_residue(u32 s);

struct ObstructionCensus {
  u32 residue = 0;
  u64 class_size = 0;                 // members of the class in [1, bound)
  u64 non_representable_in_class = 0; // of those, not practical + s-gonal
};

ObstructionCensus obstruction_census(u32 s, u64 bound,
                                     const PracticalSieve* sieve = nullptr);

// Count of n < s with no representation as practical + two s-gonals. Below
// s the only gonal values are 0 and 1, so representable n lie in
// {q, q+1, q+2 : q practical}.
u64 e_lower_bound(u32 s, const PracticalSieve* sieve = nullptr);

}  // namespace polysum
