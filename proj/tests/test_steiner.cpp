#include <doctest.h>

#include <algorithm>
#include <set>

#include "steiner.hpp"

using namespace perfembed;

namespace {

const std::vector<std::array<std::uint32_t, 3>> kFano{
    {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6},
    {2, 5, 7}, {3, 4, 7}, {3, 5, 6}};

TripleSystem fano() {
  TripleSystem ts;
  ts.v = 7;
  ts.triples = kFano;
  return ts;
}

// Independent extraction oracle: enumerate the code and read off the
// supports of its weight-3 words.
std::set<std::array<std::uint32_t, 3>> weight3_scan(const Oracle& o) {
  std::set<std::array<std::uint32_t, 3>> out;
  o.enumerate(kDefaultEnumLimit, [&](const Word& w) {
    if (w.weight() != 3) return;
    std::array<std::uint32_t, 3> t{};
    std::size_t i = 0;
    w.for_each_set([&](std::uint32_t pos) { t[i++] = pos; });
    out.insert(t);
  });
  return out;
}

}  // namespace

TEST_CASE("triples_to_code builds characteristic words plus zero") {
  TripleSystem one;
  one.v = 7;
  one.triples = {{1, 2, 3}};
  const SeedCode seed = triples_to_code(one);
  CHECK(seed.m == 7);
  CHECK(seed.offset == 0);
  CHECK(seed.words == std::vector<std::uint32_t>{0, 0b0000111});

  const SeedCode fano_seed = triples_to_code(fano());
  CHECK(fano_seed.words.size() == 8);  // a valid 1-code: validation passed
}

TEST_CASE("triples_to_code rejects a doubly covered pair") {
  TripleSystem bad;
  bad.v = 7;
  bad.triples = {{1, 2, 3}, {1, 2, 4}};
  CHECK_THROWS_WITH_AS(
      triples_to_code(bad),
      "triples {1,2,3} and {1,2,4} both cover the point pair {1,2}",
      InvalidInput);

  TripleSystem dup;
  dup.v = 7;
  dup.triples = {{1, 2, 3}, {1, 2, 3}};
  CHECK_THROWS_AS(triples_to_code(dup), InvalidInput);
}

TEST_CASE("triples_to_code range checks") {
  TripleSystem ts;
  ts.v = 17;
  CHECK_THROWS_AS(triples_to_code(ts), InvalidInput);
  ts.v = 7;
  ts.triples = {{1, 2, 8}};
  CHECK_THROWS_AS(triples_to_code(ts), InvalidInput);
}

TEST_CASE("verify_sts on the Fano plane") {
  const StsReport ok = verify_sts(fano(), true);
  CHECK(ok.valid);
  CHECK(ok.pairs_total == 21);
  CHECK(ok.covered_once == 21);

  TripleSystem dropped = fano();
  dropped.triples.pop_back();  // removes {3,5,6}
  const StsReport incomplete = verify_sts(dropped, true);
  CHECK(!incomplete.valid);
  CHECK(incomplete.uncovered == 3);
  REQUIRE(incomplete.samples.size() == 3);
  CHECK(incomplete.samples[0].a == 3);
  CHECK(incomplete.samples[0].b == 5);
  CHECK(verify_sts(dropped, false).valid);  // still a fine partial system

  TripleSystem doubled = fano();
  doubled.triples.push_back({1, 2, 4});
  const StsReport over = verify_sts(doubled, false);
  CHECK(!over.valid);
  CHECK(over.overcovered == 3);  // {1,2}, {1,4} and {2,4} now appear twice
  REQUIRE(!over.samples.empty());
  CHECK(over.samples[0].a == 1);
  CHECK(over.samples[0].b == 2);
  CHECK(over.samples[0].count == 2);
}

TEST_CASE("extract_sts at m=3 gives the Fano plane on position labels") {
  const Oracle o(validate_seed_values(3, {0, 7}));
  const TripleSystem sts = extract_sts(o);
  CHECK(sts.v == 7);
  REQUIRE(sts.triples.size() == 7);
  CHECK(sts.triples == kFano);
  CHECK(verify_sts(sts, true).valid);

  // pair completion agrees with the weight-3 scan
  const auto scanned = weight3_scan(o);
  CHECK(std::set<std::array<std::uint32_t, 3>>(sts.triples.begin(),
                                               sts.triples.end()) == scanned);
}

TEST_CASE("extract_sts matches the weight-3 scan at m=4") {
  for (const std::vector<std::uint32_t>& seed :
       {std::vector<std::uint32_t>{0}, std::vector<std::uint32_t>{0, 0b0111},
        std::vector<std::uint32_t>{0, 0b1111}}) {
    const Oracle o(validate_seed_values(4, seed));
    const TripleSystem sts = extract_sts(o);
    CHECK(verify_sts(sts, true).valid);
    const auto scanned = weight3_scan(o);
    CHECK(std::set<std::array<std::uint32_t, 3>>(sts.triples.begin(),
                                                 sts.triples.end()) == scanned);
  }
}

TEST_CASE("extract_sts refuses a translated seed") {
  const Oracle o(validate_seed_values(3, {2, 5}));  // no zero word
  CHECK_THROWS_AS(extract_sts(o), InvalidInput);
}

TEST_CASE("embedding a single triple gives the 7-point system") {
  TripleSystem ts;
  ts.v = 3;
  ts.triples = {{1, 2, 3}};
  const EmbedStsResult res = embed_partial_sts(ts);
  CHECK(res.sts.v == 7);
  CHECK(res.sts.triples.size() == 7);
  CHECK(verify_sts(res.sts, true).valid);
  CHECK(std::count(res.sts.triples.begin(), res.sts.triples.end(),
                   std::array<std::uint32_t, 3>{1, 2, 3}) == 1);
}

TEST_CASE("embedding the empty system on 4 points gives the 35 Hamming triples") {
  TripleSystem ts;
  ts.v = 4;
  const EmbedStsResult res = embed_partial_sts(ts);
  CHECK(res.sts.v == 15);
  CHECK(res.sts.triples.size() == 35);
  CHECK(verify_sts(res.sts, true).valid);
  // with no switched components the code is the Hamming code itself
  const Oracle hamming(validate_seed_values(4, {0}));
  const auto scanned = weight3_scan(hamming);
  CHECK(std::set<std::array<std::uint32_t, 3>>(res.sts.triples.begin(),
                                               res.sts.triples.end()) == scanned);
}

TEST_CASE("every input triple survives embedding") {
  for (const TripleSystem& ts : {fano(), [] {
         TripleSystem t;
         t.v = 9;
         t.triples = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {1, 4, 7}};
         return t;
       }()}) {
    const EmbedStsResult res = embed_partial_sts(ts);
    CHECK(verify_sts(res.sts, true).valid);
    for (const auto& t : ts.triples) {
      CHECK(std::count(res.sts.triples.begin(), res.sts.triples.end(), t) == 1);
    }
  }
}

TEST_CASE("triples come out sorted") {
  const EmbedStsResult res = embed_partial_sts(fano());
  CHECK(res.sts.v == 127);
  CHECK(std::is_sorted(res.sts.triples.begin(), res.sts.triples.end()));
}
