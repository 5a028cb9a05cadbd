#include <doctest.h>

#include <algorithm>
#include <random>

#include "bruteforce.hpp"

using namespace perfembed;

namespace {

ExplicitCode hamming_code(std::uint32_t m) {
  const CoordMap map(m);
  std::vector<std::uint64_t> words;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << map.n()); ++w)
    if (map.syndrome_packed(w) == 0) words.push_back(w);
  return ExplicitCode{map.n(), std::move(words)};
}

}  // namespace

TEST_CASE("explicit construction for the degenerate seed is the Hamming code") {
  const ExplicitCode code = explicit_construction(validate_seed_values(3, {0}));
  CHECK(code.words == hamming_code(3).words);
}

TEST_CASE("explicit construction at m=3, seed {000,111}") {
  const ExplicitCode code =
      explicit_construction(validate_seed_values(3, {0, 7}));
  CHECK(code.words.size() == 16);
  CHECK(code.contains(Word::parse("1110000").value()));
  CHECK(!code.contains(Word::parse("1110001").value()));
  CHECK(!code.contains(Word::parse("1101000").value()));

  // exactly 8 words fell out of the Hamming code and 8 came in
  const ExplicitCode h = hamming_code(3);
  std::uint64_t kept = 0;
  for (std::uint64_t w : code.words)
    if (h.contains(w)) ++kept;
  CHECK(kept == 8);
}

TEST_CASE("explicit construction agrees with membership on the whole space") {
  for (auto& [m, values] :
       std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>>{
           {3, {0, 7}}, {4, {0, 0b0111}}, {4, {0, 0b1111}}}) {
    const SeedCode seed = validate_seed_values(m, values);
    const ExplicitCode code = explicit_construction(seed);
    const Oracle o(seed);
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << o.n()); ++w)
      CHECK(o.is_member(Word::from_value(o.n(), w)) == code.contains(w));
  }
}

TEST_CASE("explicit construction of a translated seed") {
  const SeedCode moved = validate_seed_values(3, {5, 2});  // {101, 010}
  const ExplicitCode code = explicit_construction(moved);
  const Oracle o(moved);
  for (std::uint64_t w = 0; w < 128; ++w)
    CHECK(o.is_member(Word::from_value(7, w)) == code.contains(w));
  // and it is the zero-seed construction shifted by the offset extension
  const ExplicitCode base = explicit_construction(validate_seed_values(3, {0, 7}));
  const std::uint64_t shift = CoordMap(3).zero_extend(moved.offset).value();
  std::vector<std::uint64_t> shifted;
  for (std::uint64_t w : base.words) shifted.push_back(w ^ shift);
  std::sort(shifted.begin(), shifted.end());
  CHECK(code.words == shifted);
}

TEST_CASE("explicit construction honors the m limit") {
  const SeedCode seed = validate_seed_values(5, {0, 0b00111});
  CHECK_THROWS_AS(explicit_construction(seed), LimitExceeded);
}

TEST_CASE("neighborhood") {
  CHECK(neighborhood(ExplicitCode{7, {0}}).words.size() == 8);
  CHECK(neighborhood(ExplicitCode{7, {}}).words.empty());
  CHECK(neighborhood(hamming_code(3)).words.size() == 128);  // perfect cover
}

TEST_CASE("brute-force perfectness") {
  SUBCASE("constructed codes are perfect") {
    for (auto& [m, values] :
         std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>>{
             {3, {0, 7}}, {4, {0, 0b1111}}, {3, {5, 2}}}) {
      const PerfectReport rep =
          brute_force_perfect(explicit_construction(validate_seed_values(m, values)));
      CHECK(rep.perfect);
      CHECK(rep.uncovered == 0);
      CHECK(rep.overcovered == 0);
      CHECK(rep.space_size == (std::uint64_t{1} << rep.n));
    }
  }

  SUBCASE("the Hamming code is perfect at m=4") {
    CHECK(brute_force_perfect(hamming_code(4)).perfect);
  }

  SUBCASE("dropping the zero word under-covers its ball") {
    ExplicitCode h = hamming_code(3);
    h.words.erase(h.words.begin());  // removes 0
    const PerfectReport rep = brute_force_perfect(h);
    CHECK(!rep.perfect);
    CHECK(rep.uncovered == 8);
    CHECK(rep.overcovered == 0);
    REQUIRE(rep.samples.size() == 8);
    CHECK(rep.samples[0].word == 0);
    CHECK(rep.samples[0].count == 0);
  }

  SUBCASE("violation samples cap at 20 with full totals") {
    const PerfectReport rep = brute_force_perfect(ExplicitCode{7, {0}});
    CHECK(!rep.perfect);
    CHECK(rep.uncovered == 120);
    CHECK(rep.samples.size() == kMaxPerfectSamples);
  }

  SUBCASE("bitmap path agrees with the exact-count path") {
    ExplicitCode h = hamming_code(4);
    const PerfectReport exact = brute_force_perfect(h, 1);
    const PerfectReport bitmap = brute_force_perfect(h, 2, /*counts_limit=*/3);
    CHECK(bitmap.perfect == exact.perfect);
    CHECK(bitmap.uncovered == exact.uncovered);
    CHECK(bitmap.overcovered == exact.overcovered);
    CHECK(!bitmap.counts_exact);

    h.words.erase(h.words.begin() + 5, h.words.begin() + 8);
    const PerfectReport exact2 = brute_force_perfect(h, 1);
    const PerfectReport bitmap2 = brute_force_perfect(h, 2, 3);
    CHECK(bitmap2.uncovered == exact2.uncovered);
    CHECK(bitmap2.overcovered == exact2.overcovered);
    for (std::size_t i = 0; i < exact2.samples.size(); ++i)
      CHECK(bitmap2.samples[i].word == exact2.samples[i].word);
  }
}

TEST_CASE("random valid seeds at m<=4: size, perfectness, agreement") {
  std::mt19937_64 rng(12);
  auto greedy = [&](std::uint32_t m) {
    std::vector<std::uint32_t> all(std::size_t{1} << m);
    for (std::uint32_t v = 0; v < all.size(); ++v) all[v] = v;
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<std::uint32_t> chosen;
    for (std::uint32_t v : all) {
      if (std::all_of(chosen.begin(), chosen.end(), [&](std::uint32_t c) {
            return std::popcount(c ^ v) >= 3;
          }))
        chosen.push_back(v);
    }
    return chosen;
  };
  for (std::uint32_t m : {3u, 4u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const SeedCode seed = validate_seed_values(m, greedy(m));
      const ExplicitCode code = explicit_construction(seed);
      CHECK(code.words.size() == (std::uint64_t{1} << (code.n - m)));
      CHECK(brute_force_perfect(code).perfect);
      const Oracle o(seed);
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << code.n); ++w)
        CHECK(o.is_member(Word::from_value(code.n, w)) == code.contains(w));
    }
  }
}

TEST_CASE("switch-neighborhood equality") {
  {
    const CoordMap map(3);
    CHECK(switch_neighborhood_check(map, 0b111, Word(7)));
    std::mt19937_64 rng(0);
    for (int i = 0; i < 10; ++i)
      CHECK(switch_neighborhood_check(map, 0b111, Word::random(7, rng)));
  }
  {
    const CoordMap map(4);
    CHECK(switch_neighborhood_check(map, 0b1111, Word(15)));
    // holds for every component offset, not only the all-ones one
    for (std::uint32_t d = 1; d <= 15; ++d)
      CHECK(switch_neighborhood_check(map, d, Word(15)));
  }
}

TEST_CASE("component disjointness at m=5 (exhaustive)") {
  const CoordMap map(5);
  const std::uint32_t d1 = 0b00111, d2 = 0b11100;  // rendered 11100, 00111
  CHECK(component_disjointness_check(map, d1, d2));
}

TEST_CASE("component disjointness rejects unmet hypotheses") {
  const CoordMap map(3);
  CHECK_THROWS_AS(component_disjointness_check(map, 0b111, 0b111), InvalidInput);
  const CoordMap map5(5);
  CHECK_THROWS_AS(component_disjointness_check(map5, 0b00011, 0b11100),
                  InvalidInput);
}

TEST_CASE("component disjointness at m=7 (sampled)") {
  const CoordMap map(7);
  const std::uint32_t d1 = 0b0000111, d2 = 0b0111000;  // disjoint supports
  CHECK(component_disjointness_check(map, d1, d2, 100000, 0));
  // exhaustive would need 2^63 coset elements
  CHECK_THROWS_AS(component_disjointness_check(map, d1, d2), LimitExceeded);
}

TEST_CASE("packed word round-trip") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t n = 1 + rng() % 63;
    const Word w = Word::random(n, rng);
    CHECK(unpack_word(n, pack_word(w)) == w);
  }
}
