// Copyright 2026 The Subcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AltSet: a subset of a universe of alternatives, stored as a fixed-width
// bit-vector. Bit i is set iff alternative i is a member.
//
// The width is fixed at compile time (kMaxAlternatives). An AltSet does not
// know which universe it belongs to; PreferenceList enforces that no bit at or
// above the universe size is ever set.

#ifndef SUBCHECK_ALTSET_H_
#define SUBCHECK_ALTSET_H_

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace subcheck {

inline constexpr std::size_t kMaxAlternatives = 256;

class AltSet {
 public:
  static constexpr std::size_t kWordBits = 64;
  static constexpr std::size_t kWords = kMaxAlternatives / kWordBits;

  constexpr AltSet() = default;

  constexpr AltSet(std::initializer_list<std::size_t> indices) {
    for (std::size_t i : indices) insert(i);
  }

  // Low 64 alternatives from a mask; bit i of `mask` is alternative i.
  static constexpr AltSet from_mask(std::uint64_t mask) {
    AltSet s;
    s.words_[0] = mask;
    return s;
  }

  // All alternatives 0..n-1.
  static constexpr AltSet first_n(std::size_t n) {
    AltSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = n < kWordBits ? n : kWordBits;
      s.words_[w] = take == kWordBits ? ~std::uint64_t{0}
                                      : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  constexpr bool contains(std::size_t i) const {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
  }
  constexpr void insert(std::size_t i) {
    words_[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
  }
  constexpr void erase(std::size_t i) {
    words_[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
  }
  constexpr AltSet with(std::size_t i) const {
    AltSet s = *this;
    s.insert(i);
    return s;
  }

  constexpr bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  constexpr std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  constexpr bool is_subset_of(const AltSet& other) const {
    std::uint64_t stray = 0;
    for (std::size_t w = 0; w < kWords; ++w) stray |= words_[w] & ~other.words_[w];
    return stray == 0;
  }

  // One past the highest member, or 0 for the empty set.
  constexpr std::size_t span_width() const {
    for (std::size_t w = kWords; w-- > 0;) {
      if (words_[w] != 0)
        return w * kWordBits + (kWordBits - std::countl_zero(words_[w]));
    }
    return 0;
  }

  constexpr std::uint64_t word(std::size_t w) const { return words_[w]; }

  constexpr AltSet& operator|=(const AltSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  constexpr AltSet& operator&=(const AltSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  constexpr AltSet& operator-=(const AltSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend constexpr AltSet operator|(AltSet a, const AltSet& b) { return a |= b; }
  friend constexpr AltSet operator&(AltSet a, const AltSet& b) { return a &= b; }
  friend constexpr AltSet operator-(AltSet a, const AltSet& b) { return a -= b; }

  friend constexpr bool operator==(const AltSet&, const AltSet&) = default;

  // Canonical order: ascending integer value of the bit-vector, alternative 0
  // in the least significant position.
  friend constexpr std::strong_ordering operator<=>(const AltSet& a,
                                                    const AltSet& b) {
    for (std::size_t w = kWords; w-- > 0;) {
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    }
    return std::strong_ordering::equal;
  }

  // Calls f(i) for every member in ascending index order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto tz = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * kWordBits + tz);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    // splitmix64 finalizer folded over the words.
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      std::uint64_t z = w + h;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      h = z ^ (z >> 31);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct AltSetHash {
  std::size_t operator()(const AltSet& s) const { return s.hash(); }
};

}  // namespace subcheck

template <>
struct std::hash<subcheck::AltSet> {
  std::size_t operator()(const subcheck::AltSet& s) const { return s.hash(); }
};

#endif  // SUBCHECK_ALTSET_H_
