// Copyright 2026 The pcube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pcube {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) noexcept {
  return (bits + kWordBits - 1) / kWordBits;
}

class BitLengthMismatch : public std::invalid_argument {
 public:
  BitLengthMismatch(std::size_t a, std::size_t b)
      : std::invalid_argument("bit length mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct BitClass {
  enum class Kind : std::uint8_t { kAllZero, kExactlyOne, kMany };
  Kind kind = Kind::kAllZero;
  std::size_t index = 0;  // meaningful only for kExactlyOne

  static BitClass all_zero() { return {Kind::kAllZero, 0}; }
  static BitClass exactly_one(std::size_t i) { return {Kind::kExactlyOne, i}; }
  static BitClass many() { return {Kind::kMany, 0}; }

  friend bool operator==(const BitClass&, const BitClass&) = default;
};

namespace detail {

// Zero / one / many classification over packed words. One pass to find the
// nonzero words, then a lowest-set-bit lookup on the single survivor.
inline BitClass classify_words(std::span<const Word> words) {
  std::size_t hit = words.size();
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i] == 0) continue;
    if (hit != words.size()) return BitClass::many();
    hit = i;
  }
  if (hit == words.size()) return BitClass::all_zero();
  Word w = words[hit];
  if ((w & (w - 1)) != 0) return BitClass::many();
  return BitClass::exactly_one(hit * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
}

// ORs the low `bits` bits of src into dst starting at bit `offset`.
inline void deposit_bits(std::span<Word> dst, std::size_t offset, std::span<const Word> src, std::size_t bits) {
  const std::size_t shift = offset % kWordBits;
  const std::size_t base = offset / kWordBits;
  const std::size_t count = words_for(bits);
  for (std::size_t j = 0; j < count; ++j) {
    Word w = src[j];
    if (j + 1 == count && bits % kWordBits != 0) w &= (Word{1} << (bits % kWordBits)) - 1;
    if (w == 0) continue;
    dst[base + j] |= w << shift;
    if (shift != 0 && base + j + 1 < dst.size()) dst[base + j + 1] |= w >> (kWordBits - shift);
  }
}

}  // namespace detail

// Fixed-length bit vector packed into 64-bit words. Bits past size() are
// always zero. Coordinate 0 is the least significant bit of word 0 and the
// rightmost character of to_string().
class BitVector {
 public:
  BitVector() = default;

  static BitVector zero(std::size_t k) {
    BitVector v;
    v.size_ = k;
    v.words_.assign(words_for(k), 0);
    return v;
  }

  static BitVector from_words(std::size_t k, std::span<const Word> words) {
    BitVector v = zero(k);
    detail::deposit_bits(v.words_, 0, words, k);
    return v;
  }

  // Parses a 0/1 string with coordinate 0 rightmost.
  static BitVector from_string(std::string_view text) {
    BitVector v = zero(text.size());
    for (std::size_t pos = 0; pos < text.size(); ++pos) {
      char c = text[text.size() - 1 - pos];
      if (c == '1') {
        v.set_bit(pos);
      } else if (c != '0') {
        throw std::invalid_argument("bit string contains '" + std::string(1, c) + "'");
      }
    }
    return v;
  }

  std::size_t size() const noexcept { return size_; }
  std::size_t word_count() const noexcept { return words_.size(); }
  std::span<const Word> words() const noexcept { return words_; }

  bool test(std::size_t i) const {
    check_index(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }

  BitVector& set_bit(std::size_t i) {
    check_index(i);
    words_[i / kWordBits] |= Word{1} << (i % kWordBits);
    return *this;
  }

  BitVector& or_assign(const BitVector& src) {
    if (src.size_ != size_) throw BitLengthMismatch(size_, src.size_);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= src.words_[w];
    return *this;
  }
  BitVector& operator|=(const BitVector& src) { return or_assign(src); }

  friend BitVector symmetric_difference(const BitVector& a, const BitVector& b) {
    if (a.size_ != b.size_) throw BitLengthMismatch(a.size_, b.size_);
    BitVector out = a;
    for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] ^= b.words_[w];
    return out;
  }
  friend BitVector operator^(const BitVector& a, const BitVector& b) { return symmetric_difference(a, b); }

  BitClass classify() const { return detail::classify_words(words_); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // hi occupies the upper coordinates, lo keeps coordinates 0..lo.size()-1.
  friend BitVector concat(const BitVector& hi, const BitVector& lo) {
    BitVector out = zero(hi.size_ + lo.size_);
    std::copy(lo.words_.begin(), lo.words_.end(), out.words_.begin());
    detail::deposit_bits(out.words_, lo.size_, hi.words_, hi.size_);
    return out;
  }

  std::string to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) s[size_ - 1 - i] = '1';
    }
    return s;
  }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(size_);
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void check_index(std::size_t i) const {
    if (i >= size_) {
      throw std::out_of_range("bit index " + std::to_string(i) + " out of range for length " + std::to_string(size_));
    }
  }

  std::size_t size_ = 0;
  std::vector<Word> words_;
};

inline std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw BitLengthMismatch(a.size(), b.size());
  std::size_t d = 0;
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t w = 0; w < wa.size(); ++w) d += static_cast<std::size_t>(std::popcount(wa[w] ^ wb[w]));
  return d;
}

// Dense rows of equal-width bit vectors in one allocation. Used for the
// per-round vertex bit sets, where one BitVector per vertex would allocate
// n times per round.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t bits)
      : rows_(rows), bits_(bits), stride_(words_for(bits)), data_(rows * stride_, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t bits() const noexcept { return bits_; }
  std::size_t stride() const noexcept { return stride_; }

  std::span<Word> row(std::size_t r) noexcept { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const noexcept { return {data_.data() + r * stride_, stride_}; }

  void set(std::size_t r, std::size_t bit) { row(r)[bit / kWordBits] |= Word{1} << (bit % kWordBits); }
  bool test(std::size_t r, std::size_t bit) const { return (row(r)[bit / kWordBits] >> (bit % kWordBits)) & 1U; }

  void or_row(std::size_t dst, std::size_t src) noexcept {
    Word* d = data_.data() + dst * stride_;
    const Word* s = data_.data() + src * stride_;
    for (std::size_t w = 0; w < stride_; ++w) d[w] |= s[w];
  }

  // classify(row(a) xor row(b)) without materializing the difference.
  BitClass classify_difference(std::size_t a, std::size_t b) const noexcept {
    const Word* x = data_.data() + a * stride_;
    const Word* y = data_.data() + b * stride_;
    std::size_t hit = stride_;
    Word diff = 0;
    for (std::size_t w = 0; w < stride_; ++w) {
      Word d = x[w] ^ y[w];
      if (d == 0) continue;
      if (hit != stride_) return BitClass::many();
      hit = w;
      diff = d;
    }
    if (hit == stride_) return BitClass::all_zero();
    if ((diff & (diff - 1)) != 0) return BitClass::many();
    return BitClass::exactly_one(hit * kWordBits + static_cast<std::size_t>(std::countr_zero(diff)));
  }

  BitVector row_vector(std::size_t r) const { return BitVector::from_words(bits_, row(r)); }

 private:
  std::size_t rows_ = 0;
  std::size_t bits_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

}  // namespace pcube

template <>
struct std::hash<pcube::BitVector> {
  std::size_t operator()(const pcube::BitVector& v) const noexcept { return v.hash(); }
};
