#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "embed.hpp"

namespace perfembed {

/// A set of 3-subsets (triples) of points 1..v. `triples` holds each triple
/// in ascending point order and the list sorted lexicographically; users
/// building one by hand can call normalize() to restore that form.
struct TripleSystem {
  std::uint32_t v = 0;
  std::vector<std::array<std::uint32_t, 3>> triples;

  void normalize();
};

struct PairViolation {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint64_t count = 0;
};

/// Outcome of a pair-coverage check. In complete mode every point pair must
/// occur in exactly one triple; in partial mode at most one. `samples`
/// holds the first few violating pairs (kMaxReportSamples cap).
struct StsReport {
  bool valid = false;
  bool complete_mode = false;
  std::uint64_t pairs_total = 0;
  std::uint64_t covered_once = 0;
  std::uint64_t uncovered = 0;    // counted in complete mode only
  std::uint64_t overcovered = 0;
  std::vector<PairViolation> samples;
};

inline constexpr std::size_t kMaxReportSamples = 20;

StsReport verify_sts(const TripleSystem& ts, bool complete);

/// The seed code of a partial triple system: the zero word plus the
/// characteristic v-word of every triple. Two triples sharing one point
/// give characteristic words at distance 4, so a valid partial system
/// always yields a valid seed. Throws InvalidInput (naming the two
/// triples) if some pair of points is covered twice.
SeedCode triples_to_code(const TripleSystem& ts);

/// The complete triple system on n points formed by the weight-3 codewords
/// of the embedded code, computed by pair completion: for every point pair
/// {a,b}, decoding the weight-2 word with ones at a and b lands on the
/// weight-3 codeword covering the pair. Requires a seed that contained the
/// zero word (offset 0).
TripleSystem extract_sts(const Oracle& oracle);

struct EmbedStsResult {
  TripleSystem sts;
  std::string note;
};

/// triples_to_code -> Oracle -> extract_sts. The result is a complete
/// system on 2^v - 1 points containing every input triple verbatim
/// (input points keep their labels 1..v).
EmbedStsResult embed_partial_sts(const TripleSystem& ts);

}  // namespace perfembed
