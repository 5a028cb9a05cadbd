#pragma once

#include <cstdint>
#include <vector>

#include "embed.hpp"

namespace perfembed {

/// An explicitly materialized code: packed length-n words (bit p-1 =
/// coordinate p), sorted ascending by packed value, duplicate-free.
/// Packing caps n at 63; the operations below enforce their own limits.
struct ExplicitCode {
  std::uint32_t n = 0;
  std::vector<std::uint64_t> words;

  bool contains(std::uint64_t w) const;
  Word word_at(std::size_t i) const { return Word::from_value(n, words[i]); }
};

std::uint64_t pack_word(const Word& w);
Word unpack_word(std::uint32_t n, std::uint64_t w);

inline constexpr std::uint32_t kDefaultConstructionLimit = 4;

/// Materializes the embedded code of `seed` literally as sets: enumerate
/// the Hamming code, remove the switched-out coset of every nonzero seed
/// word, then add the switched-in cosets (spanned from the component
/// generators, independently of the membership branch logic). The seed's
/// translation offset is applied to the result. Asserts along the way that
/// every removed word was present in the Hamming code and that the removed
/// cosets are mutually disjoint.
ExplicitCode explicit_construction(const SeedCode& seed,
                                   std::uint32_t m_limit = kDefaultConstructionLimit);

/// All words at Hamming distance <= 1 from the code, as an ExplicitCode.
ExplicitCode neighborhood(const ExplicitCode& code);

struct CoverageSample {
  std::uint64_t word = 0;
  std::uint64_t count = 0;  // 0 = uncovered; on the bitmap path 2 means ">= 2"
};

struct PerfectReport {
  bool perfect = false;
  std::uint32_t n = 0;
  std::uint64_t space_size = 0;
  std::uint64_t codewords = 0;
  std::uint64_t uncovered = 0;
  std::uint64_t overcovered = 0;
  bool counts_exact = true;  // false on the bitmap path (counts clip at 2)
  std::vector<CoverageSample> samples;  // first kMaxPerfectSamples violations
};

inline constexpr std::size_t kMaxPerfectSamples = 20;

/// Counts, for every word of the n-cube, the codewords at distance <= 1.
/// Perfect iff every count is exactly 1. Dense exact counters up to
/// n = counts_limit; beyond that (n <= 31) a pair of bitmaps tracks
/// covered/covered-twice, parallelized over `threads` workers.
PerfectReport brute_force_perfect(const ExplicitCode& code, int threads = 1,
                                  std::uint32_t counts_limit = 20);

/// True iff a component coset and its unit-shifted twin have identical
/// radius-1 neighborhoods: Omega(R + z) == Omega(R + z + unit(delta)).
/// This equality is what makes coset switching preserve perfectness.
/// Exhaustive over the spanned coset; limited to m <= 4.
bool switch_neighborhood_check(const CoordMap& map, std::uint32_t delta,
                               const Word& z);

/// True iff the switched-out cosets of two offsets (each of weight >= 3,
/// at distance >= 3 from each other) are disjoint and avoid the zero word.
/// Enumerates one coset and membership-tests against the other; when the
/// span is too large to enumerate, tests `samples` random span elements
/// instead (fixed `rng_seed`). Throws InvalidInput if the weight/distance
/// hypotheses fail.
bool component_disjointness_check(const CoordMap& map, std::uint32_t d1,
                                  std::uint32_t d2, std::uint64_t samples = 0,
                                  std::uint64_t rng_seed = 0);

}  // namespace perfembed
