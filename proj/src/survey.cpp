#include "polysum/survey.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "polysum/polygonal.hpp"
#include "threads.hpp"

namespace polysum {

namespace {

constexpr u64 kSurveyBoundCap = 100'000'000;

// Practical flags for indices [0, bound) as a Bitmap, from a caller sieve
// or generated on the spot.
Bitmap practical_bits(u64 bound, const PracticalSieve* sieve,
                      PracticalSieve& local) {
  if (sieve == nullptr) {
    local = generate_practicals(bound - 1);
    sieve = &local;
  }
  if (sieve->bound < bound - 1)
    throw std::invalid_argument("survey: supplied sieve bound too small");
  Bitmap bits(bound);
  u64 nw = bits.word_count();
  const auto& src = sieve->bits.words();
  for (u64 i = 0; i < nw; ++i) bits.words()[i] = src[i];
  bits.clear_tail();
  return bits;
}

}  // namespace

RepBitmap rep_one_gonal(u32 s, u64 bound, bool allow_zero,
                        const PracticalSieve* sieve) {
  if (s < 4) throw std::invalid_argument("rep_one_gonal: s must be >= 4");
  if (bound < 2 || bound > kSurveyBoundCap)
    throw std::invalid_argument("rep_one_gonal: bound must be in [2, 10^8]");
  PracticalSieve local;
  Bitmap prac = practical_bits(bound, sieve, local);
  std::vector<u64> gonals = gonal_values_upto(s, bound - 1);
  if (!allow_zero) gonals.erase(gonals.begin());  // drop P_s(0) = 0

  RepBitmap rep;
  rep.s_gon = s;
  rep.bound = bound;
  rep.allow_zero = allow_zero;
  rep.bits = Bitmap(bound);

  u64 nw = rep.bits.word_count();
  unsigned workers = worker_count();
  u64 chunk = std::max<u64>((nw + workers - 1) / workers, 4096);
  u64 n_chunks = (nw + chunk - 1) / chunk;
  run_tasks(n_chunks, [&](std::size_t c) {
    u64 lo = c * chunk, hi = std::min(nw, lo + chunk);
    for (u64 g : gonals) rep.bits.or_shifted_words(prac, g, lo, hi);
  });
  return rep;
}

RepBitmap rep_two_gonal(u32 s, u64 bound, bool allow_zero,
                        const PracticalSieve* sieve) {
  if (bound > 10'000'000)
    throw std::invalid_argument("rep_two_gonal: bound must be <= 10^7");
  RepBitmap one = rep_one_gonal(s, bound, allow_zero, sieve);
  std::vector<u64> gonals = gonal_values_upto(s, bound - 1);
  if (!allow_zero) gonals.erase(gonals.begin());

  RepBitmap rep;
  rep.s_gon = s;
  rep.bound = bound;
  rep.allow_zero = allow_zero;
  rep.two_gonals = true;
  rep.bits = Bitmap(bound);

  u64 nw = rep.bits.word_count();
  unsigned workers = worker_count();
  u64 chunk = std::max<u64>((nw + workers - 1) / workers, 1024);
  u64 n_chunks = (nw + chunk - 1) / chunk;
  // Each task owns destination words [lo, hi): writes never collide.
  run_tasks(n_chunks, [&](std::size_t c) {
    u64 lo = c * chunk * 64, hi = std::min(bound, (c * chunk + chunk) * 64);
    for (u64 n = std::max<u64>(lo, 1); n < hi; ++n) {
      for (u64 g : gonals) {
        if (g > n) break;
        if (one.bits.test(n - g)) {
          rep.bits.set(n);
          break;
        }
      }
    }
  });
  return rep;
}

SurveyRow row_from_bitmap(const RepBitmap& rep) {
  SurveyRow row;
  row.s_gon = rep.s_gon;
  row.bound = rep.bound;
  row.allow_zero = rep.allow_zero;
  for (u64 n = 1; n < rep.bound; ++n) {
    if (!rep.bits.test(n)) {
      ++row.count_non_representable;
      row.largest_non_representable = n;
    }
  }
  return row;
}

SurveyRow survey_row(u32 s, u64 bound, bool allow_zero,
                     const PracticalSieve* sieve) {
  return row_from_bitmap(rep_one_gonal(s, bound, allow_zero, sieve));
}

std::string survey_csv_header() { return "s,bound,allow_zero,count,largest"; }

std::string to_csv(const SurveyRow& row) {
  std::ostringstream os;
  os << row.s_gon << ',' << row.bound << ','
     << (row.allow_zero ? "true" : "false") << ','
     << row.count_non_representable << ',';
  if (row.largest_non_representable) os << *row.largest_non_representable;
  return os.str();
}

std::string to_json(const SurveyRow& row) {
  std::ostringstream os;
  os << "{\"s\":" << row.s_gon << ",\"bound\":" << row.bound
     << ",\"allow_zero\":" << (row.allow_zero ? "true" : "false")
     << ",\"count\":" << row.count_non_representable << ",\"largest\":";
  if (row.largest_non_representable)
    os << *row.largest_non_representable;
  else
    os << "null";
  os << "}";
  return os.str();
}

u32 obstruction_residue(u32 s) {
  if (s % 12 != 0 && s % 12 != 4)
    throw std::invalid_argument("obstruction_residue: s must be 0 or 4 (mod 12)");
  u64 a = (u64{s} - 2) / 2;  // odd, coprime to 3
  u64 b = (u64{s} - 4) / 2;  // even
  u64 quarter_b2 = (b / 2) * (b / 2);
  u64 inv = mod_inverse(static_cast<i64>(a % 12), 12);
  u64 term = (2 + 12 * ((quarter_b2 + 11) / 12) - quarter_b2) % 12;  // 2 - b^2/4 mod 12
  return static_cast<u32>(inv * term % 12);
}

ObstructionCensus obstruction_census(u32 s, u64 bound,
                                     const PracticalSieve* sieve) {
  ObstructionCensus census;
  census.residue = obstruction_residue(s);
  RepBitmap rep = rep_one_gonal(s, bound, true, sieve);
  u64 start = census.residue == 0 ? 12 : census.residue;
  for (u64 n = start; n < bound; n += 12) {
    ++census.class_size;
    if (!rep.bits.test(n)) ++census.non_representable_in_class;
  }
  return census;
}

u64 e_lower_bound(u32 s, const PracticalSieve* sieve) {
  if (s < 4) throw std::invalid_argument("e_lower_bound: s must be >= 4");
  PracticalSieve local;
  if (sieve == nullptr || sieve->bound < s - 1) {
    local = generate_practicals(s - 1);
    sieve = &local;
  }
  u64 count = 0;
  for (u64 n = 1; n < s; ++n) {
    bool rep = sieve->test(n) || (n >= 2 && sieve->test(n - 1)) ||
               (n >= 3 && sieve->test(n - 2));
    if (!rep) ++count;
  }
  return count;
}

}  // namespace polysum
