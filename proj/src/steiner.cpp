#include "steiner.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>

namespace perfembed {

namespace {

std::string triple_str(const std::array<std::uint32_t, 3>& t) {
  std::ostringstream os;
  os << "{" << t[0] << "," << t[1] << "," << t[2] << "}";
  return os.str();
}

void check_triple(const TripleSystem& ts, const std::array<std::uint32_t, 3>& t) {
  if (!(t[0] >= 1 && t[0] < t[1] && t[1] < t[2] && t[2] <= ts.v)) {
    throw InvalidInput("triple " + triple_str(t) +
                       " is not ascending within points 1..v");
  }
}

// Dense pair index for a < b, both 1-based.
inline std::size_t pair_slot(std::uint32_t a, std::uint32_t b) {
  return std::size_t{b - 2} * (b - 1) / 2 + (a - 1);
}

constexpr std::uint32_t kDensePairLimit = 8192;

}  // namespace

void TripleSystem::normalize() {
  for (auto& t : triples) std::sort(t.begin(), t.end());
  std::sort(triples.begin(), triples.end());
}

StsReport verify_sts(const TripleSystem& ts, bool complete) {
  if (ts.v < 3 && !ts.triples.empty())
    throw InvalidInput("triples need at least 3 points");
  StsReport rep;
  rep.complete_mode = complete;
  rep.pairs_total = std::uint64_t{ts.v} * (ts.v - 1) / 2;

  auto add_sample = [&](std::uint32_t a, std::uint32_t b, std::uint64_t count) {
    if (rep.samples.size() < kMaxReportSamples) rep.samples.push_back({a, b, count});
  };

  if (ts.v <= kDensePairLimit) {
    std::vector<std::uint32_t> cover(ts.v >= 2 ? pair_slot(ts.v - 1, ts.v) + 1 : 0, 0);
    for (const auto& t : ts.triples) {
      check_triple(ts, t);
      ++cover[pair_slot(t[0], t[1])];
      ++cover[pair_slot(t[0], t[2])];
      ++cover[pair_slot(t[1], t[2])];
    }
    for (std::uint32_t b = 2; b <= ts.v; ++b) {
      for (std::uint32_t a = 1; a < b; ++a) {
        const std::uint32_t c = cover[pair_slot(a, b)];
        if (c == 1) {
          ++rep.covered_once;
        } else if (c > 1) {
          ++rep.overcovered;
          add_sample(a, b, c);
        } else if (complete) {
          ++rep.uncovered;
          add_sample(a, b, 0);
        }
      }
    }
  } else {
    // Sparse path for very large point counts: over-coverage is still
    // reported pair by pair; completeness reduces to the covered-once count.
    std::unordered_map<std::uint64_t, std::uint64_t> cover;
    cover.reserve(ts.triples.size() * 3);
    for (const auto& t : ts.triples) {
      check_triple(ts, t);
      ++cover[(std::uint64_t{t[0]} << 32) | t[1]];
      ++cover[(std::uint64_t{t[0]} << 32) | t[2]];
      ++cover[(std::uint64_t{t[1]} << 32) | t[2]];
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries(cover.begin(),
                                                                 cover.end());
    std::sort(entries.begin(), entries.end());
    for (const auto& [key, c] : entries) {
      if (c == 1) {
        ++rep.covered_once;
      } else {
        ++rep.overcovered;
        add_sample(static_cast<std::uint32_t>(key >> 32),
                   static_cast<std::uint32_t>(key), c);
      }
    }
    if (complete) rep.uncovered = rep.pairs_total - rep.covered_once - rep.overcovered;
  }

  rep.valid = complete ? (rep.uncovered == 0 && rep.overcovered == 0)
                       : (rep.overcovered == 0);
  return rep;
}

SeedCode triples_to_code(const TripleSystem& ts) {
  if (ts.v < kMinM || ts.v > kMaxM) {
    std::ostringstream os;
    os << "triple system on v=" << ts.v << " points cannot seed an embedding"
       << " (supported range " << kMinM << " <= v <= " << kMaxM << ")";
    throw InvalidInput(os.str());
  }
  std::unordered_map<std::uint64_t, std::size_t> first_cover;
  first_cover.reserve(ts.triples.size() * 3);
  for (std::size_t i = 0; i < ts.triples.size(); ++i) {
    const auto& t = ts.triples[i];
    check_triple(ts, t);
    for (const auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[0], t[2]},
                              std::pair{t[1], t[2]}}) {
      const std::uint64_t key = (std::uint64_t{a} << 32) | b;
      auto [it, inserted] = first_cover.emplace(key, i);
      if (!inserted) {
        std::ostringstream os;
        os << "triples " << triple_str(ts.triples[it->second]) << " and "
           << triple_str(t) << " both cover the point pair {" << a << "," << b
           << "}";
        throw InvalidInput(os.str());
      }
    }
  }
  std::vector<std::uint32_t> values{0};
  values.reserve(ts.triples.size() + 1);
  for (const auto& t : ts.triples) {
    values.push_back((1u << (t[0] - 1)) | (1u << (t[1] - 1)) | (1u << (t[2] - 1)));
  }
  return validate_seed_values(ts.v, std::move(values));
}

TripleSystem extract_sts(const Oracle& oracle) {
  if (oracle.seed().offset != 0) {
    throw InvalidInput(
        "seed was translated (offset " +
        Word::from_value(oracle.m(), oracle.seed().offset).str() +
        "); the embedded code misses the zero word, so its weight-3 words"
        " need not form a triple system");
  }
  const std::uint32_t n = oracle.n();
  TripleSystem out;
  out.v = n;
  for (std::uint32_t a = 1; a <= n; ++a) {
    for (std::uint32_t b = a + 1; b <= n; ++b) {
      Word y(n);
      y.set(a);
      y.set(b);
      const Word p = oracle.decode(y);
      if (p.weight() != 3 || !p.get(a) || !p.get(b)) {
        throw std::logic_error(
            "pair completion produced a non-triple codeword for pair {" +
            std::to_string(a) + "," + std::to_string(b) + "}");
      }
      std::uint32_t third = 0;
      p.for_each_set([&](std::uint32_t pos) {
        if (pos != a && pos != b) third = pos;
      });
      // Each triple {a,b,c} is met from three pairs; keep it only when
      // completed from its two smallest points.
      if (third > b) out.triples.push_back({a, b, third});
    }
  }
  return out;
}

EmbedStsResult embed_partial_sts(const TripleSystem& ts) {
  Oracle oracle(triples_to_code(ts));
  EmbedStsResult res;
  res.sts = extract_sts(oracle);
  std::ostringstream os;
  os << "embedded " << ts.triples.size() << " triple(s) on " << ts.v
     << " points into a complete system on " << res.sts.v << " points with "
     << res.sts.triples.size() << " triples; input points keep labels 1.."
     << ts.v;
  res.note = os.str();
  return res;
}

}  // namespace perfembed
