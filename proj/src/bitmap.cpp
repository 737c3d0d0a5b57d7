#include "polysum/bitmap.hpp"

#include <atomic>
#include <bit>
#include <stdexcept>

namespace polysum {

void Bitmap::set(u64 i) {
  if (i >= nbits_) throw std::out_of_range("Bitmap::set: index out of range");
  words_[i >> 6] |= u64{1} << (i & 63);
}

void Bitmap::set_atomic(u64 i) {
  if (i >= nbits_) throw std::out_of_range("Bitmap::set_atomic: index out of range");
  std::atomic_ref<u64> ref(words_[i >> 6]);
  ref.fetch_or(u64{1} << (i & 63), std::memory_order_relaxed);
}

u64 Bitmap::count() const {
  u64 total = 0;
  for (u64 w : words_) total += static_cast<u64>(std::popcount(w));
  return total;
}

void Bitmap::or_shifted_words(const Bitmap& src, u64 shift, u64 word_begin,
                              u64 word_end) {
  if (shift >= nbits_) return;
  const u64 ws = shift >> 6;
  const unsigned bs = static_cast<unsigned>(shift & 63);
  const u64 src_words = src.words_.size();
  u64 hi = std::min(word_end, words_.size());
  u64 lo = std::max(word_begin, ws);
  if (lo >= hi) return;
  const u64* s = src.words_.data();
  u64* d = words_.data();
  // High-to-low so a self-shift never reads an already-updated word.
  if (bs == 0) {
    for (u64 j = hi; j-- > lo;) {
      u64 i = j - ws;
      if (i < src_words) d[j] |= s[i];
    }
  } else {
    for (u64 j = hi; j-- > lo;) {
      u64 i = j - ws;
      u64 v = 0;
      if (i < src_words) v = s[i] << bs;
      if (i >= 1 && i - 1 < src_words) v |= s[i - 1] >> (64 - bs);
      d[j] |= v;
    }
  }
  if (hi == words_.size()) {
    unsigned tail = static_cast<unsigned>(nbits_ & 63);
    if (tail) words_.back() &= (u64{1} << tail) - 1;
  }
}

void Bitmap::clear_tail() {
  if (words_.empty()) return;
  unsigned tail = static_cast<unsigned>(nbits_ & 63);
  if (tail) words_.back() &= (u64{1} << tail) - 1;
}

}  // namespace polysum
