#include "embed.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace perfembed {

namespace {

std::string render_value(std::uint32_t m, std::uint32_t v) {
  return Word::from_value(m, v).str();
}

std::uint32_t reverse_low_bits(std::uint32_t v, std::uint32_t n) {
  v = ((v >> 1) & 0x55555555u) | ((v & 0x55555555u) << 1);
  v = ((v >> 2) & 0x33333333u) | ((v & 0x33333333u) << 2);
  v = ((v >> 4) & 0x0F0F0F0Fu) | ((v & 0x0F0F0F0Fu) << 4);
  v = ((v >> 8) & 0x00FF00FFu) | ((v & 0x00FF00FFu) << 8);
  v = (v >> 16) | (v << 16);
  return v >> (32u - n);
}

}  // namespace

std::vector<std::uint32_t> SeedCode::original() const {
  std::vector<std::uint32_t> out = words;
  for (auto& w : out) w ^= offset;
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    return packed_rendering_less(a, b);
  });
  return out;
}

SeedCode validate_seed_values(std::uint32_t m, std::vector<std::uint32_t> values) {
  if (m < kMinM || m > kMaxM) {
    std::ostringstream os;
    os << "m=" << m << " out of supported range [" << kMinM << ", " << kMaxM << "]";
    throw InvalidInput(os.str());
  }
  if (values.empty()) throw InvalidInput("seed code has no words");

  std::sort(values.begin(), values.end(), [](std::uint32_t a, std::uint32_t b) {
    return packed_rendering_less(a, b);
  });
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] == values[i - 1])
      throw InvalidInput("duplicate seed word: " + render_value(m, values[i]));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      const int d = std::popcount(values[i] ^ values[j]);
      if (d < 3) {
        std::ostringstream os;
        os << "seed words " << render_value(m, values[i]) << " and "
           << render_value(m, values[j]) << " are at distance " << d
           << " (need >= 3)";
        throw InvalidInput(os.str());
      }
    }
  }

  SeedCode seed;
  seed.m = m;
  // Without the zero word, translate by the rendering-order minimum (the
  // sorted front) so the construction applies; queries undo the translation.
  const bool has_zero =
      std::find(values.begin(), values.end(), 0u) != values.end();
  seed.offset = has_zero ? 0u : values.front();
  if (seed.offset != 0) {
    for (auto& v : values) v ^= seed.offset;
    std::sort(values.begin(), values.end(), [](std::uint32_t a, std::uint32_t b) {
      return packed_rendering_less(a, b);
    });
  }
  seed.words = std::move(values);
  assert(seed.words.front() == 0);
  return seed;
}

SeedCode validate_seed(std::uint32_t m, const std::vector<Word>& words) {
  std::vector<std::uint32_t> values;
  values.reserve(words.size());
  for (const Word& w : words) {
    if (w.size() != m) {
      std::ostringstream os;
      os << "seed word \"" << w.str() << "\" has length " << w.size()
         << ", expected m=" << m;
      throw InvalidInput(os.str());
    }
    values.push_back(static_cast<std::uint32_t>(w.value()));
  }
  return validate_seed_values(m, std::move(values));
}

Oracle::Oracle(SeedCode seed)
    : seed_(std::move(seed)), map_(std::make_unique<CoordMap>(seed_.m)) {
  comp_by_delta_.assign(std::size_t{1} << seed_.m, -1);
  for (std::uint32_t d : seed_.words) {
    if (d == 0) continue;
    comp_by_delta_[d] = static_cast<std::int32_t>(comps_.size());
    comps_.emplace_back(*map_, d);
    add_shift_.push_back(map_->zero_extend(d));
    removed_shift_.push_back(add_shift_.back() ^ map_->unit_word(d));
  }
  offset_ext_ = map_->zero_extend(seed_.offset);
  translated_ = seed_.offset != 0;
}

int Oracle::removed_index(const Word& h) const {
  int found = -1;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (comps_[i].in_coset_unchecked(h, removed_shift_[i])) {
#ifdef NDEBUG
      return static_cast<int>(i);
#else
      assert(found < 0 && "switched-out cosets must be mutually disjoint");
      found = static_cast<int>(i);
#endif
    }
  }
  return found;
}

bool Oracle::member_normalized(const Word& x) const {
  const std::uint32_t s = map_->syndrome(x);
  if (s == 0) return removed_index(x) < 0;
  const std::int32_t ci = comp_by_delta_[s];
  if (ci < 0) return false;
  // Syndrome of x + add_shift is s + s = 0; only pair-constancy is open.
  return comps_[ci].in_coset_unchecked(x, add_shift_[ci]);
}

bool Oracle::is_member(const Word& x) const {
  if (x.size() != n()) {
    std::ostringstream os;
    os << "length mismatch: expected n=" << n() << ", got " << x.size();
    throw InvalidInput(os.str());
  }
  return member_normalized(translated_ ? x ^ offset_ext_ : x);
}

Word Oracle::decode_normalized(const Word& y) const {
  const std::uint32_t s = map_->syndrome(y);
  if (s == 0) {
    const int ri = removed_index(y);
    if (ri < 0) return y;  // already a kept Hamming codeword
    return y ^ map_->unit_word(comps_[ri].delta());
  }
  const std::int32_t ci = comp_by_delta_[s];
  if (ci >= 0 && comps_[ci].in_coset_unchecked(y, add_shift_[ci]))
    return y;  // already in a switched-in coset
  const Word h = y ^ map_->unit_word(s);
  const int ri = removed_index(h);
  if (ri < 0) return h;
  // h sits in the removed coset of some other component d; the word one
  // flip away from y inside the switched-in d-coset is y + unit(s ^ d).
  const std::uint32_t d = comps_[ri].delta();
  assert(d != s && "y would have matched the switched-in coset branch");
  return y ^ map_->unit_word(s ^ d);
}

Word Oracle::decode(const Word& y) const {
  if (y.size() != n()) {
    std::ostringstream os;
    os << "length mismatch: expected n=" << n() << ", got " << y.size();
    throw InvalidInput(os.str());
  }
  if (!translated_) return decode_normalized(y);
  return decode_normalized(y ^ offset_ext_) ^ offset_ext_;
}

Oracle::DecodeResult Oracle::decode_flip(const Word& y) const {
  DecodeResult res{decode(y), 0};
  if (res.codeword != y) {
    const Word d = res.codeword ^ y;
    assert(d.weight() == 1);
    d.for_each_set([&](std::uint32_t pos) { res.flipped_pos = pos; });
  }
  return res;
}

std::vector<std::uint32_t> Oracle::project() const {
  std::vector<std::uint32_t> out;
  const std::uint32_t total = (std::uint32_t{1} << m()) - 1;
  for (std::uint32_t v = 0; v <= total; ++v) {
    if (is_member(map_->zero_extend(v))) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    return packed_rendering_less(a, b);
  });
  return out;
}

void Oracle::enumerate_packed(std::uint32_t enum_limit,
                              const std::function<void(std::uint64_t)>& fn) const {
  const std::uint32_t limit = std::min(enum_limit, kMaxEnumLimit);
  if (m() > limit) {
    std::ostringstream os;
    os << "enumeration is limited to m <= " << limit << " (hard cap "
       << kMaxEnumLimit << "); use the membership/decode/verify interface for m="
       << m();
    throw LimitExceeded(os.str());
  }

  const std::uint32_t mm = m();
  const std::uint32_t k = n() - mm;
  std::vector<std::uint64_t> keys;  // bit-reversed for rendering-order sort
  keys.reserve(std::size_t{1} << k);

  const std::uint32_t offset_packed =
      translated_ ? static_cast<std::uint32_t>(offset_ext_.value()) : 0u;
  std::vector<std::uint64_t> removed_shift_packed, add_shift_packed;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    removed_shift_packed.push_back(removed_shift_[i].value());
    add_shift_packed.push_back(add_shift_[i].value());
  }

  auto emit = [&](std::uint64_t w) {
    keys.push_back(reverse_low_bits(
        static_cast<std::uint32_t>(w ^ offset_packed), n()));
  };

  // Hamming words in systematic form: free bits on positions m+1..n, the
  // first m positions carry the syndrome of the free part.
  std::uint32_t gray = 0, tau = 0;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t step = 0;; ++step) {
    const std::uint64_t h = (std::uint64_t{gray} << mm) | tau;
    bool removed = false;
    for (std::size_t i = 0; i < comps_.size() && !removed; ++i)
      removed = comps_[i].support_paired_packed(h ^ removed_shift_packed[i]);
    if (!removed) emit(h);
    if (step + 1 == total) break;
    const std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(step + 1));
    gray ^= 1u << b;
    tau ^= map_->index_of_pos(mm + 1 + b);
  }

  for (std::size_t i = 0; i < comps_.size(); ++i) {
    for_each_in_span_packed(comps_[i].basis_packed(),
                            [&](std::uint64_t r) { emit(r ^ add_shift_packed[i]); });
  }

  assert(keys.size() == (std::uint64_t{1} << k));
  std::sort(keys.begin(), keys.end());
  for (std::uint64_t key : keys)
    fn(reverse_low_bits(static_cast<std::uint32_t>(key), n()));
}

void Oracle::enumerate(std::uint32_t enum_limit,
                       const std::function<void(const Word&)>& fn) const {
  enumerate_packed(enum_limit,
                   [&](std::uint64_t w) { fn(Word::from_value(n(), w)); });
}

}  // namespace perfembed
