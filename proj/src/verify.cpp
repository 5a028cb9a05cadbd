#include "verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace perfembed {

namespace {

std::string plural(std::uint64_t k, const char* what) {
  std::ostringstream os;
  os << k << " " << what << (k == 1 ? "" : "s");
  return os.str();
}

void projection_check(const Oracle& o, VerifyReport& rep) {
  const auto projected = o.project();
  const auto expected = o.seed().original();
  std::ostringstream os;
  os << "projection round-trip: fixing the last n-m coordinates to zero"
     << " recovers the " << plural(expected.size(), "seed word");
  rep.add(projected == expected, os.str());
}

void seed_fixed_point_check(const Oracle& o, VerifyReport& rep) {
  std::uint64_t bad = 0;
  for (std::uint32_t v : o.seed().original()) {
    const Word w = o.map().zero_extend(v);
    if (!o.is_member(w) || o.decode(w) != w) ++bad;
  }
  std::ostringstream os;
  os << "seed-word extensions are codewords and decode fixed points ("
     << plural(o.seed().size(), "word") << ")";
  rep.add(bad == 0, os.str());
}

void random_decode_check(const Oracle& o, std::uint64_t count,
                         std::uint64_t rng_seed, VerifyReport& rep) {
  std::mt19937_64 rng(rng_seed);
  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const Word y = Word::random(o.n(), rng);
    const Word p = o.decode(y);
    if (!o.is_member(p) || distance(y, p) > 1 || o.decode(p) != p) ++bad;
  }
  std::ostringstream os;
  os << "sampled decode: " << plural(count, "random word")
     << " decoded to a codeword within distance 1, idempotently";
  if (bad) os << " (" << bad << " violations)";
  rep.add(bad == 0, os.str());
}

void component_law_checks(const Oracle& o, std::uint64_t rng_seed,
                          VerifyReport& rep) {
  const auto& comps = o.components();
  if (comps.empty()) {
    rep.info("no switched components (seed is the zero word alone)");
    return;
  }

  if (o.m() <= 4) {
    std::mt19937_64 rng(rng_seed);
    bool ok = true;
    for (const Component& c : comps) {
      ok = ok && switch_neighborhood_check(o.map(), c.delta(), Word(o.n()));
      for (int i = 0; i < 3 && ok; ++i)
        ok = ok && switch_neighborhood_check(o.map(), c.delta(),
                                             Word::random(o.n(), rng));
    }
    std::ostringstream os;
    os << "switch-neighborhood equality for " << plural(comps.size(), "component")
       << " (zero and 3 random translations each)";
    rep.add(ok, os.str());
  }

  if (comps.size() >= 2) {
    bool ok = true;
    std::uint64_t pairs = 0;
    for (std::size_t i = 0; i < comps.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < comps.size() && ok; ++j) {
        ++pairs;
        if (o.m() <= 5)
          ok = component_disjointness_check(o.map(), comps[i].delta(),
                                            comps[j].delta());
        else
          ok = component_disjointness_check(o.map(), comps[i].delta(),
                                            comps[j].delta(), 10000, rng_seed);
      }
    }
    std::ostringstream os;
    os << "switched-out cosets pairwise disjoint and free of the zero word ("
       << plural(pairs, "pair") << (o.m() <= 5 ? ", exhaustive)" : ", sampled)");
    rep.add(ok, os.str());
  }
}

void exhaustive_checks(const Oracle& o, std::uint64_t rng_seed, int threads,
                       VerifyReport& rep) {
  const ExplicitCode exp = explicit_construction(o.seed());
  {
    std::ostringstream os;
    os << "explicit construction materialized: " << exp.words.size()
       << " codewords = 2^" << (o.n() - o.m());
    rep.add(exp.words.size() == (std::uint64_t{1} << (o.n() - o.m())), os.str());
  }

  const std::uint64_t space = std::uint64_t{1} << o.n();
  std::uint64_t disagreements = 0;
  for (std::uint64_t w = 0; w < space; ++w) {
    if (o.is_member(unpack_word(o.n(), w)) != exp.contains(w)) ++disagreements;
  }
  {
    std::ostringstream os;
    os << "membership agreement with the explicit construction on all " << space
       << " words";
    if (disagreements) os << " (" << disagreements << " disagreements)";
    rep.add(disagreements == 0, os.str());
  }

  const PerfectReport perf = brute_force_perfect(exp, threads);
  {
    std::ostringstream os;
    os << "perfectness: " << perf.space_size
       << " coverage counts, every word covered exactly once";
    if (!perf.perfect)
      os << " (" << perf.uncovered << " uncovered, " << perf.overcovered
         << " over-covered)";
    rep.add(perf.perfect, os.str());
  }

  std::uint64_t bad_decode = 0;
  for (std::uint64_t w = 0; w < space; ++w) {
    const Word y = unpack_word(o.n(), w);
    const Word p = o.decode(y);
    if (!o.is_member(p) || distance(y, p) > 1) ++bad_decode;
    if (o.is_member(y) && p != y) ++bad_decode;
  }
  {
    std::ostringstream os;
    os << "decode totality: all " << space
       << " words decode to a codeword within distance 1; codewords are fixed";
    if (bad_decode) os << " (" << bad_decode << " violations)";
    rep.add(bad_decode == 0, os.str());
  }

  projection_check(o, rep);
  component_law_checks(o, rng_seed, rep);
}

void m5_sweep_checks(const Oracle& o, std::uint64_t rng_seed, int threads,
                     VerifyReport& rep) {
  random_decode_check(o, 1000000, rng_seed, rep);

  const ExplicitCode exp = explicit_construction(o.seed(), kMaxEnumLimit);
  {
    std::ostringstream os;
    os << "explicit construction materialized: " << exp.words.size()
       << " codewords = 2^" << (o.n() - o.m());
    rep.add(exp.words.size() == (std::uint64_t{1} << (o.n() - o.m())), os.str());
  }

  const PerfectReport perf = brute_force_perfect(exp, threads);
  {
    std::ostringstream os;
    os << "full coverage sweep: " << perf.space_size
       << " words each covered exactly once";
    if (!perf.perfect)
      os << " (" << perf.uncovered << " uncovered, " << perf.overcovered
         << " over-covered)";
    rep.add(perf.perfect, os.str());
  }

  projection_check(o, rep);
  component_law_checks(o, rng_seed, rep);
}

}  // namespace

VerifyReport run_verify(const Oracle& oracle, VerifyLevel level,
                        std::uint64_t rng_seed, int threads) {
  VerifyReport rep;
  {
    std::ostringstream os;
    os << "code: m=" << oracle.m() << " n=" << oracle.n() << " |C|="
       << oracle.seed().size() << " offset="
       << Word::from_value(oracle.m(), oracle.seed().offset).str();
    rep.info(os.str());
  }
  switch (level) {
    case VerifyLevel::Fast: {
      projection_check(oracle, rep);
      seed_fixed_point_check(oracle, rep);
      random_decode_check(oracle, 10000, rng_seed, rep);
      break;
    }
    case VerifyLevel::Exhaustive: {
      if (oracle.m() > 4)
        throw InvalidInput("exhaustive verification requires m <= 4");
      exhaustive_checks(oracle, rng_seed, threads, rep);
      break;
    }
    case VerifyLevel::M5Sweep: {
      if (oracle.m() != 5)
        throw InvalidInput("the m5 sweep requires m = 5");
      m5_sweep_checks(oracle, rng_seed, threads, rep);
      break;
    }
  }
  return rep;
}

VerifyReport verify_dump_words(const std::vector<Word>& dump,
                               const Oracle* oracle, int threads) {
  VerifyReport rep;
  if (dump.empty()) throw InvalidInput("dump contains no words");
  const std::uint32_t n = dump.front().size();
  for (const Word& w : dump) {
    if (w.size() != n) {
      std::ostringstream os;
      os << "dump words have mixed lengths (" << n << " and " << w.size() << ")";
      throw InvalidInput(os.str());
    }
  }
  if (n > 31)
    throw LimitExceeded("dump verification is limited to n <= 31");
  if (oracle && oracle->n() != n) {
    std::ostringstream os;
    os << "dump word length " << n << " does not match the code's n="
       << oracle->n();
    throw InvalidInput(os.str());
  }

  std::vector<std::uint64_t> packed;
  packed.reserve(dump.size());
  for (const Word& w : dump) packed.push_back(pack_word(w));
  std::sort(packed.begin(), packed.end());
  std::uint64_t dups = 0;
  for (std::size_t i = 1; i < packed.size(); ++i) {
    if (packed[i] == packed[i - 1]) {
      ++dups;
      if (dups <= kMaxPerfectSamples)
        rep.info("duplicate word: " + unpack_word(n, packed[i]).str());
    }
  }
  rep.add(dups == 0, "no duplicate words (" + plural(dump.size(), "word") + ")");
  packed.erase(std::unique(packed.begin(), packed.end()), packed.end());

  const ExplicitCode code{n, std::move(packed)};
  const PerfectReport perf = brute_force_perfect(code, threads);
  {
    std::ostringstream os;
    os << "coverage: " << perf.space_size << " words, " << perf.uncovered
       << " under-covered, " << perf.overcovered << " over-covered";
    rep.add(perf.perfect, os.str());
    for (const CoverageSample& s : perf.samples) {
      std::ostringstream line;
      line << (s.count == 0 ? "under-covered: " : "over-covered: ")
           << unpack_word(n, s.word).str();
      rep.info(line.str());
    }
  }

  if (oracle) {
    std::uint64_t foreign = 0;
    for (std::uint64_t w : code.words) {
      if (!oracle->is_member(unpack_word(n, w))) {
        ++foreign;
        if (foreign <= kMaxPerfectSamples)
          rep.info("not a codeword: " + unpack_word(n, w).str());
      }
    }
    rep.add(foreign == 0, "every dump word is a codeword of the given code");
    const std::uint64_t expected = std::uint64_t{1} << (n - oracle->m());
    std::ostringstream os;
    os << "dump cardinality " << code.words.size() << " matches 2^(n-m) = "
       << expected;
    rep.add(code.words.size() == expected, os.str());
  }
  return rep;
}

}  // namespace perfembed
