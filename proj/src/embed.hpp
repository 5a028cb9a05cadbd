#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "component.hpp"
#include "gf2.hpp"

namespace perfembed {

/// Rendered-string order on packed words (bit i-1 = coordinate i): the
/// lowest differing bit decides, 0 before 1. Matches Word::operator<.
inline bool packed_rendering_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (!diff) return false;
  return ((a >> std::countr_zero(diff)) & 1) == 0;
}

/// A validated seed code: a set of m-words with pairwise distance >= 3,
/// normalized by translation so the zero word is a codeword. `offset` is
/// the translation that was applied; original = normalized ^ offset.
struct SeedCode {
  std::uint32_t m = 0;
  std::vector<std::uint32_t> words;   // normalized, contains 0, rendering order
  std::uint32_t offset = 0;

  std::vector<std::uint32_t> original() const;
  std::size_t size() const { return words.size(); }
};

/// Validates a candidate seed: 2 <= m <= 16, no duplicates, pairwise
/// distance >= 3. A seed without the zero word is accepted and translated
/// by its rendering-order minimum, which is recorded as `offset`.
/// Throws InvalidInput naming the offending pair otherwise.
SeedCode validate_seed(std::uint32_t m, const std::vector<Word>& words);
SeedCode validate_seed_values(std::uint32_t m, std::vector<std::uint32_t> values);

/// Same validation path; the name exists for callers that care about the
/// translation step specifically.
inline SeedCode normalize_seed(std::uint32_t m, const std::vector<Word>& words) {
  return validate_seed(m, words);
}

inline constexpr std::uint32_t kDefaultEnumLimit = 4;
inline constexpr std::uint32_t kMaxEnumLimit = 5;

/// The embedding of a seed code C of length m into a perfect code of
/// length n = 2^m - 1.
///
/// The code is built from the Hamming code by switching one linear
/// component per nonzero seed word d: the coset (component + d-extension +
/// d-unit) is removed from the Hamming code and the coset (component +
/// d-extension) is added outside it. Fixing the last n - m coordinates of
/// the result to zero recovers exactly the original seed words.
///
/// Immutable and safe for concurrent use after construction.
class Oracle {
 public:
  explicit Oracle(SeedCode seed);

  Oracle(const Oracle&) = delete;
  Oracle& operator=(const Oracle&) = delete;

  const SeedCode& seed() const { return seed_; }
  const CoordMap& map() const { return *map_; }
  std::uint32_t m() const { return seed_.m; }
  std::uint32_t n() const { return map_->n(); }
  const std::vector<Component>& components() const { return comps_; }

  bool is_member(const Word& x) const;

  /// The unique codeword at distance <= 1 from y.
  Word decode(const Word& y) const;

  struct DecodeResult {
    Word codeword;
    std::uint32_t flipped_pos;  // 0 when y itself is the codeword
  };
  DecodeResult decode_flip(const Word& y) const;

  /// The original seed words (packed values, rendering order), recovered by
  /// membership-testing every zero-extended m-word.
  std::vector<std::uint32_t> project() const;

  /// Streams every codeword in ascending rendered order. Refuses m above
  /// min(enum_limit, 5); larger codes are reachable only through the
  /// membership/decode interface.
  void enumerate(std::uint32_t enum_limit,
                 const std::function<void(const Word&)>& fn) const;

  /// Packed variant of enumerate (n <= 31 given the limit).
  void enumerate_packed(std::uint32_t enum_limit,
                        const std::function<void(std::uint64_t)>& fn) const;

 private:
  friend class OracleTestPeer;

  // All queries are answered in the normalized (offset-translated) space.
  bool member_normalized(const Word& x) const;
  Word decode_normalized(const Word& y) const;
  // Index of the switched component whose removed coset contains h (h must
  // be a Hamming word in normalized space), or -1.
  int removed_index(const Word& h) const;

  SeedCode seed_;
  std::unique_ptr<CoordMap> map_;
  std::vector<Component> comps_;
  std::vector<Word> add_shift_;      // per component: d-extension
  std::vector<Word> removed_shift_;  // per component: d-extension + d-unit
  std::vector<std::int32_t> comp_by_delta_;
  Word offset_ext_;                  // zero-extension of the seed offset
  bool translated_ = false;
};

}  // namespace perfembed
