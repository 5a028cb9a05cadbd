#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace perfembed {

/// A fixed-length binary word with GF(2) (mod-2) arithmetic.
///
/// Coordinates are 1-based. The rendered form is a string of '0'/'1'
/// characters whose leftmost character is coordinate 1. Comparison
/// (`operator<`) orders words by that rendered string, so sorting a
/// container of words gives the same order as sorting their dumps.
class Word {
 public:
  Word() = default;
  explicit Word(std::uint32_t len) : len_(len), blocks_((len + 63) / 64, 0) {}

  /// Parses a '0'/'1' string; the length is the string length.
  static Word parse(std::string_view bits);

  /// Builds a word of length `len` (<= 64) from a packed value where bit
  /// i-1 of `value` is coordinate i.
  static Word from_value(std::uint32_t len, std::uint64_t value);

  std::uint32_t size() const { return len_; }

  bool get(std::uint32_t pos) const {
    return (blocks_[(pos - 1) >> 6] >> ((pos - 1) & 63)) & 1;
  }
  void set(std::uint32_t pos, bool v = true);
  void flip(std::uint32_t pos) {
    blocks_[(pos - 1) >> 6] ^= std::uint64_t{1} << ((pos - 1) & 63);
  }

  /// Packed value, bit i-1 = coordinate i. Requires size() <= 64.
  std::uint64_t value() const;

  /// Coordinatewise mod-2 addition. Throws InvalidInput on length mismatch.
  Word& operator^=(const Word& rhs);
  friend Word operator^(Word a, const Word& b) {
    a ^= b;
    return a;
  }

  std::uint32_t weight() const;
  bool zero() const;

  std::string str() const;

  bool operator==(const Word& rhs) const = default;
  bool operator<(const Word& rhs) const;  // rendered-string order

  /// Calls fn(pos) for every set coordinate, in ascending position order.
  template <class F>
  void for_each_set(F fn) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      std::uint64_t v = blocks_[b];
      while (v) {
        fn(static_cast<std::uint32_t>(b * 64 + std::countr_zero(v) + 1));
        v &= v - 1;
      }
    }
  }

  /// Raw 64-coordinate blocks (coordinate i lives in bit (i-1)%64 of block
  /// (i-1)/64); unused top bits are always zero.
  std::size_t block_count() const { return blocks_.size(); }
  std::uint64_t block(std::size_t i) const { return blocks_[i]; }

  /// Uniformly random word of the given length.
  template <class Rng>
  static Word random(std::uint32_t len, Rng& rng) {
    Word w(len);
    for (auto& b : w.blocks_) b = rng();
    if (len & 63) w.blocks_.back() &= (std::uint64_t{1} << (len & 63)) - 1;
    return w;
  }

 private:
  std::uint32_t len_ = 0;
  std::vector<std::uint64_t> blocks_;
};

/// Hamming distance. Throws InvalidInput on length mismatch.
std::uint32_t distance(const Word& a, const Word& b);

inline constexpr std::uint32_t kMinM = 2;
inline constexpr std::uint32_t kMaxM = 16;

/// The coordinate-indexing convention for words of length n = 2^m - 1.
///
/// Every position 1..n is labeled by a distinct nonzero m-word, stored here
/// as its packed value (bit i-1 = coordinate i). Positions 1..m carry the
/// natural basis words in order; positions m+1..n carry the remaining
/// nonzero m-words in ascending packed value. The syndrome of a length-n
/// word is the mod-2 sum of the labels of its set positions, and the
/// Hamming code of length n is exactly the set of words with zero syndrome.
class CoordMap {
 public:
  explicit CoordMap(std::uint32_t m);

  std::uint32_t m() const { return m_; }
  std::uint32_t n() const { return n_; }

  std::uint32_t index_of_pos(std::uint32_t pos) const;   // 1..n -> label
  std::uint32_t pos_of_index(std::uint32_t index) const; // label -> 1..n

  std::uint32_t syndrome(const Word& x) const;
  Word syndrome_word(const Word& x) const { return m_word(syndrome(x)); }
  bool in_hamming(const Word& x) const { return syndrome(x) == 0; }

  /// Packed-word variants for n <= 63 (bit p-1 = coordinate p).
  std::uint32_t syndrome_packed(std::uint64_t x) const;

  /// The length-n word with a single 1 at the position labeled `index`.
  /// Throws InvalidInput for index 0 (the zero label names no position).
  Word unit_word(std::uint32_t index) const;

  /// The length-n word carrying the m-word `index` on positions 1..m and
  /// zeroes elsewhere.
  Word zero_extend(std::uint32_t index) const;

  Word m_word(std::uint32_t value) const { return Word::from_value(m_, value); }

  /// Packed value of an m-word; throws InvalidInput if mw.size() != m.
  std::uint32_t value_of(const Word& mw) const;

 private:
  std::uint32_t m_ = 0;
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> pos_to_index_;  // [1..n]; slot 0 unused
  std::vector<std::uint32_t> index_to_pos_;  // [0..2^m-1]; slot 0 unused
};

}  // namespace perfembed
