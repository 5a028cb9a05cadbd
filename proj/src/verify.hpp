#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bruteforce.hpp"
#include "embed.hpp"

namespace perfembed {

enum class VerifyLevel {
  Fast,        // any m: projection round-trip + sampled decode checks
  Exhaustive,  // m <= 4: full-space agreement, perfectness, decode totality
  M5Sweep,     // m == 5: 2^31-word coverage sweep + 10^6 sampled decodes
};

struct VerifyReport {
  bool pass = true;
  std::vector<std::string> lines;

  void add(bool ok, const std::string& what) {
    pass = pass && ok;
    lines.push_back((ok ? "[PASS] " : "[FAIL] ") + what);
  }
  void info(const std::string& what) { lines.push_back("       " + what); }
};

VerifyReport run_verify(const Oracle& oracle, VerifyLevel level,
                        std::uint64_t rng_seed, int threads);

/// Checks an explicit codeword dump: full radius-1 coverage of the n-cube
/// and, when an oracle is supplied, word-for-word membership plus the
/// expected cardinality.
VerifyReport verify_dump_words(const std::vector<Word>& dump,
                               const Oracle* oracle, int threads);

}  // namespace perfembed
