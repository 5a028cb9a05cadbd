#include "bruteforce.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <sstream>
#include <thread>

namespace perfembed {

namespace {

void require_sorted_unique(const std::vector<std::uint64_t>& words) {
  assert(std::is_sorted(words.begin(), words.end()));
  assert(std::adjacent_find(words.begin(), words.end()) == words.end());
  (void)words;
}

}  // namespace

bool ExplicitCode::contains(std::uint64_t w) const {
  return std::binary_search(words.begin(), words.end(), w);
}

std::uint64_t pack_word(const Word& w) {
  if (w.size() > 63) throw LimitExceeded("packed words are limited to n <= 63");
  return w.value();
}

Word unpack_word(std::uint32_t n, std::uint64_t w) {
  return Word::from_value(n, w);
}

ExplicitCode explicit_construction(const SeedCode& seed, std::uint32_t m_limit) {
  const std::uint32_t limit = std::min(m_limit, kMaxEnumLimit);
  if (seed.m > limit) {
    std::ostringstream os;
    os << "explicit construction is limited to m <= " << limit << " (hard cap "
       << kMaxEnumLimit << "), got m=" << seed.m;
    throw LimitExceeded(os.str());
  }
  const CoordMap map(seed.m);
  const std::uint32_t mm = map.m();
  const std::uint32_t k = map.n() - mm;

  // The Hamming code in systematic form; ascending by construction since
  // the free part occupies the high bits.
  std::vector<std::uint64_t> code;
  code.reserve(std::uint64_t{1} << k);
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << k); ++f) {
    const std::uint64_t free_part = f << mm;
    code.push_back(free_part | map.syndrome_packed(free_part));
  }

  std::vector<Component> comps;
  std::vector<std::uint64_t> removed_all;
  for (std::uint32_t d : seed.words) {
    if (d == 0) continue;
    comps.emplace_back(map, d);
    const std::uint64_t shift = pack_word(map.zero_extend(d) ^ map.unit_word(d));
    for_each_in_span_packed(comps.back().basis_packed(),
                            [&](std::uint64_t r) { removed_all.push_back(r ^ shift); });
  }
  std::sort(removed_all.begin(), removed_all.end());
  if (std::adjacent_find(removed_all.begin(), removed_all.end()) !=
      removed_all.end()) {
    throw std::logic_error("switched-out cosets are not mutually disjoint");
  }
  // Every switched-out word must already be a Hamming codeword.
  if (!std::includes(code.begin(), code.end(), removed_all.begin(),
                     removed_all.end())) {
    throw std::logic_error("a switched-out coset left the Hamming code");
  }

  std::vector<std::uint64_t> result;
  result.reserve(code.size());
  std::set_difference(code.begin(), code.end(), removed_all.begin(),
                      removed_all.end(), std::back_inserter(result));
  for (const Component& comp : comps) {
    const std::uint64_t shift = pack_word(map.zero_extend(comp.delta()));
    for_each_in_span_packed(comp.basis_packed(),
                            [&](std::uint64_t r) { result.push_back(r ^ shift); });
  }
  if (seed.offset != 0) {
    const std::uint64_t off = pack_word(map.zero_extend(seed.offset));
    for (auto& w : result) w ^= off;
  }
  std::sort(result.begin(), result.end());
  if (std::adjacent_find(result.begin(), result.end()) != result.end())
    throw std::logic_error("explicit construction produced a duplicate word");
  if (result.size() != (std::uint64_t{1} << k))
    throw std::logic_error("explicit construction size is not 2^(n-m)");
  return ExplicitCode{map.n(), std::move(result)};
}

ExplicitCode neighborhood(const ExplicitCode& code) {
  if (code.n > 63) throw LimitExceeded("neighborhood needs n <= 63");
  require_sorted_unique(code.words);
  const std::uint64_t out_bound =
      static_cast<std::uint64_t>(code.words.size()) * (code.n + 1);
  if (out_bound > (std::uint64_t{1} << 26))
    throw LimitExceeded("neighborhood would exceed the enumeration budget");
  std::vector<std::uint64_t> out;
  out.reserve(out_bound);
  for (std::uint64_t w : code.words) {
    out.push_back(w);
    for (std::uint32_t i = 0; i < code.n; ++i) out.push_back(w ^ (std::uint64_t{1} << i));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return ExplicitCode{code.n, std::move(out)};
}

namespace {

PerfectReport perfect_by_counts(const ExplicitCode& code) {
  PerfectReport rep;
  rep.n = code.n;
  rep.space_size = std::uint64_t{1} << code.n;
  rep.codewords = code.words.size();
  std::vector<std::uint8_t> counts(rep.space_size, 0);
  auto bump = [&](std::uint64_t w) {
    if (counts[w] != 255) ++counts[w];
  };
  for (std::uint64_t w : code.words) {
    bump(w);
    for (std::uint32_t i = 0; i < code.n; ++i) bump(w ^ (std::uint64_t{1} << i));
  }
  for (std::uint64_t w = 0; w < rep.space_size; ++w) {
    if (counts[w] == 1) continue;
    if (counts[w] == 0)
      ++rep.uncovered;
    else
      ++rep.overcovered;
    if (rep.samples.size() < kMaxPerfectSamples)
      rep.samples.push_back({w, counts[w]});
  }
  rep.perfect = rep.uncovered == 0 && rep.overcovered == 0;
  return rep;
}

PerfectReport perfect_by_bitmaps(const ExplicitCode& code, int threads) {
  PerfectReport rep;
  rep.n = code.n;
  rep.space_size = std::uint64_t{1} << code.n;
  rep.codewords = code.words.size();
  rep.counts_exact = false;

  const std::size_t blocks = static_cast<std::size_t>((rep.space_size + 63) / 64);
  const int t_count = std::clamp(threads, 1, 4);

  std::vector<std::vector<std::uint64_t>> seen(t_count), dup(t_count);
  auto worker = [&](int t) {
    seen[t].assign(blocks, 0);
    dup[t].assign(blocks, 0);
    const std::size_t lo = code.words.size() * t / t_count;
    const std::size_t hi = code.words.size() * (t + 1) / t_count;
    auto mark = [&](std::uint64_t w) {
      const std::uint64_t bit = std::uint64_t{1} << (w & 63);
      std::uint64_t& s = seen[t][w >> 6];
      if (s & bit)
        dup[t][w >> 6] |= bit;
      else
        s |= bit;
    };
    for (std::size_t i = lo; i < hi; ++i) {
      const std::uint64_t w = code.words[i];
      mark(w);
      for (std::uint32_t b = 0; b < code.n; ++b) mark(w ^ (std::uint64_t{1} << b));
    }
  };
  {
    std::vector<std::thread> pool;
    for (int t = 1; t < t_count; ++t) pool.emplace_back(worker, t);
    worker(0);
    for (auto& th : pool) th.join();
  }

  // Fold the per-worker bitmaps; cross-worker double coverage shows up as
  // an AND of seen bits.
  const std::uint64_t tail_mask =
      (rep.space_size & 63) ? ((std::uint64_t{1} << (rep.space_size & 63)) - 1)
                            : ~std::uint64_t{0};
  for (std::size_t b = 0; b < blocks; ++b) {
    std::uint64_t s_acc = 0, d_acc = 0;
    for (int t = 0; t < t_count; ++t) {
      d_acc |= dup[t][b] | (s_acc & seen[t][b]);
      s_acc |= seen[t][b];
    }
    const std::uint64_t valid = (b + 1 == blocks) ? tail_mask : ~std::uint64_t{0};
    const std::uint64_t un = ~s_acc & valid;
    const std::uint64_t ov = d_acc & valid;
    rep.uncovered += std::popcount(un);
    rep.overcovered += std::popcount(ov);
    if (rep.samples.size() < kMaxPerfectSamples && (un | ov)) {
      for (std::uint32_t k = 0; k < 64 && rep.samples.size() < kMaxPerfectSamples;
           ++k) {
        const std::uint64_t bit = std::uint64_t{1} << k;
        if (un & bit) rep.samples.push_back({b * 64 + k, 0});
        else if (ov & bit) rep.samples.push_back({b * 64 + k, 2});
      }
    }
  }
  rep.perfect = rep.uncovered == 0 && rep.overcovered == 0;
  return rep;
}

}  // namespace

PerfectReport brute_force_perfect(const ExplicitCode& code, int threads,
                                  std::uint32_t counts_limit) {
  if (code.n > 31)
    throw LimitExceeded("perfectness sweep is limited to n <= 31");
  require_sorted_unique(code.words);
  if (code.n <= counts_limit) return perfect_by_counts(code);
  return perfect_by_bitmaps(code, threads);
}

bool switch_neighborhood_check(const CoordMap& map, std::uint32_t delta,
                               const Word& z) {
  if (map.m() > 4)
    throw LimitExceeded("neighborhood comparison is limited to m <= 4");
  const Component comp(map, delta);
  const std::uint64_t zp = pack_word(z);
  const std::uint64_t unit = pack_word(map.unit_word(delta));

  std::vector<std::uint64_t> a, b;
  for_each_in_span_packed(comp.basis_packed(), [&](std::uint64_t r) {
    a.push_back(r ^ zp);
    b.push_back(r ^ zp ^ unit);
  });
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const ExplicitCode na = neighborhood(ExplicitCode{map.n(), std::move(a)});
  const ExplicitCode nb = neighborhood(ExplicitCode{map.n(), std::move(b)});
  return na.words == nb.words;
}

bool component_disjointness_check(const CoordMap& map, std::uint32_t d1,
                                  std::uint32_t d2, std::uint64_t samples,
                                  std::uint64_t rng_seed) {
  const auto weight = [](std::uint32_t v) { return std::popcount(v); };
  if (weight(d1) < 3 || weight(d2) < 3 || weight(d1 ^ d2) < 3) {
    std::ostringstream os;
    os << "disjointness hypotheses unmet: need weight(d1) >= 3, weight(d2) >= 3"
       << " and distance(d1,d2) >= 3; got " << weight(d1) << ", " << weight(d2)
       << ", " << weight(d1 ^ d2);
    throw InvalidInput(os.str());
  }
  const Component c1(map, d1), c2(map, d2);
  const Word s1 = map.zero_extend(d1) ^ map.unit_word(d1);
  const Word s2 = map.zero_extend(d2) ^ map.unit_word(d2);

  // Neither coset may contain the zero word.
  const Word zero(map.n());
  if (c1.in_coset(zero, s1) || c2.in_coset(zero, s2)) return false;

  const std::vector<Word> basis = c1.basis();
  if (samples == 0) {
    if (basis.size() > 20)
      throw LimitExceeded(
          "coset too large for exhaustive disjointness; pass a sample count");
    bool disjoint = true;
    for_each_in_span(map.n(), basis, [&](const Word& r) {
      if (!disjoint) return;
      if (c2.in_coset(r ^ s1, s2)) disjoint = false;
    });
    return disjoint;
  }

  std::mt19937_64 rng(rng_seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    Word r(map.n());
    std::uint64_t draw = 0;
    for (std::size_t g = 0; g < basis.size(); ++g) {
      if (g % 64 == 0) draw = rng();
      if ((draw >> (g % 64)) & 1) r ^= basis[g];
    }
    if (c2.in_coset(r ^ s1, s2)) return false;
  }
  return true;
}

}  // namespace perfembed
