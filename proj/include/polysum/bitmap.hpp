#pragma once

#include <cstdint>
#include <vector>

#include "polysum/arith.hpp"

namespace polysum {

// Fixed-size bit array with the word-level shift-OR kernel used by the
// subset-sum oracle and the representability surveys. Bit order is
// little-endian within each 64-bit word; bits beyond size() stay zero.
class Bitmap {
 public:
  Bitmap() = default;
  explicit Bitmap(u64 nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  u64 size() const { return nbits_; }
  u64 word_count() const { return words_.size(); }

  bool test(u64 i) const {
    return i < nbits_ && (words_[i >> 6] >> (i & 63)) & 1;
  }
  void set(u64 i);
  void set_atomic(u64 i);  // relaxed fetch_or, for concurrent writers

  u64 count() const;

  // this |= src << shift, clipped to size(). Safe when &src == this and
  // shift > 0 (words are processed from high to low).
  void or_shifted(const Bitmap& src, u64 shift) {
    or_shifted_words(src, shift, 0, words_.size());
  }
  // Same, but only destination words [word_begin, word_end) are written.
  // Disjoint ranges may be filled concurrently.
  void or_shifted_words(const Bitmap& src, u64 shift, u64 word_begin,
                        u64 word_end);

  const std::vector<u64>& words() const { return words_; }
  std::vector<u64>& words() { return words_; }

  void clear_tail();  // re-mask bits beyond size() after bulk word edits

  bool operator==(const Bitmap&) const = default;

 private:
  u64 nbits_ = 0;
  std::vector<u64> words_;
};

}  // namespace polysum
