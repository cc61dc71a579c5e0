// Copyright 2026 The Qontic Authors
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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qontic {

// Bit vector packed into 64-bit words. Bits past size() stay zero, so
// whole-word operations never need end masking.
class BitVec {
 public:
  static constexpr std::size_t npos = ~std::size_t{0};

  BitVec() = default;
  explicit BitVec(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  std::size_t word_count() const { return words_.size(); }
  const std::uint64_t* words() const { return words_.data(); }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool any() const {
    for (auto w : words_) {
      if (w) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  std::size_t popcount() const {
    std::size_t total = 0;
    for (auto w : words_) total += std::size_t(std::popcount(w));
    return total;
  }

  // Caller guarantees matching sizes.
  BitVec& operator^=(const BitVec& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }

  std::size_t find_first() const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i]) return i * 64 + std::size_t(std::countr_zero(words_[i]));
    }
    return npos;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;

  // Number of positions set in both vectors.
  friend std::size_t popcount_and(const BitVec& a, const BitVec& b) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      total += std::size_t(std::popcount(a.words_[i] & b.words_[i]));
    }
    return total;
  }

  // Lowest position set in both vectors, or npos.
  friend std::size_t find_first_common(const BitVec& a, const BitVec& b) {
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const std::uint64_t w = a.words_[i] & b.words_[i];
      if (w) return i * 64 + std::size_t(std::countr_zero(w));
    }
    return npos;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace qontic
