#include "gf2.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace perfembed {

Word Word::parse(std::string_view bits) {
  if (bits.empty()) throw InvalidInput("empty bitstring");
  if (bits.size() > 0xFFFF)
    throw InvalidInput("bitstring longer than 65535 coordinates");
  Word w(static_cast<std::uint32_t>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      w.set(static_cast<std::uint32_t>(i + 1));
    else if (bits[i] != '0')
      throw InvalidInput("bitstring contains a character other than 0/1: \"" +
                         std::string(bits) + "\"");
  }
  return w;
}

Word Word::from_value(std::uint32_t len, std::uint64_t value) {
  if (len == 0 || len > 64) throw InvalidInput("from_value needs 1 <= len <= 64");
  assert(len == 64 || (value >> len) == 0);
  Word w(len);
  w.blocks_[0] = value;
  return w;
}

void Word::set(std::uint32_t pos, bool v) {
  assert(pos >= 1 && pos <= len_);
  const std::uint64_t mask = std::uint64_t{1} << ((pos - 1) & 63);
  if (v)
    blocks_[(pos - 1) >> 6] |= mask;
  else
    blocks_[(pos - 1) >> 6] &= ~mask;
}

std::uint64_t Word::value() const {
  if (len_ > 64) throw LimitExceeded("packed value needs length <= 64");
  return blocks_.empty() ? 0 : blocks_[0];
}

Word& Word::operator^=(const Word& rhs) {
  if (len_ != rhs.len_) {
    std::ostringstream os;
    os << "length mismatch: " << len_ << " vs " << rhs.len_;
    throw InvalidInput(os.str());
  }
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] ^= rhs.blocks_[i];
  return *this;
}

std::uint32_t Word::weight() const {
  std::uint32_t w = 0;
  for (std::uint64_t b : blocks_) w += static_cast<std::uint32_t>(std::popcount(b));
  return w;
}

bool Word::zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](std::uint64_t b) { return b == 0; });
}

std::string Word::str() const {
  std::string s(len_, '0');
  for_each_set([&](std::uint32_t pos) { s[pos - 1] = '1'; });
  return s;
}

bool Word::operator<(const Word& rhs) const {
  // Rendered-string order: the first differing coordinate decides, and the
  // word with a 0 there is smaller. Within a block the first differing
  // coordinate is the lowest differing bit.
  const std::size_t common = std::min(blocks_.size(), rhs.blocks_.size());
  for (std::size_t i = 0; i < common; ++i) {
    const std::uint64_t diff = blocks_[i] ^ rhs.blocks_[i];
    if (diff) {
      const int k = std::countr_zero(diff);
      return ((blocks_[i] >> k) & 1) == 0;
    }
  }
  return len_ < rhs.len_;
}

std::uint32_t distance(const Word& a, const Word& b) {
  Word d = a;
  d ^= b;  // length-checked
  return d.weight();
}

CoordMap::CoordMap(std::uint32_t m) : m_(m) {
  if (m < kMinM || m > kMaxM) {
    std::ostringstream os;
    os << "m=" << m << " out of supported range [" << kMinM << ", " << kMaxM
       << "]";
    throw InvalidInput(os.str());
  }
  n_ = (std::uint32_t{1} << m) - 1;
  pos_to_index_.assign(n_ + 1, 0);
  index_to_pos_.assign(std::size_t{1} << m, 0);
  // Basis labels first, then the remaining nonzero m-words ascending.
  std::uint32_t pos = 1;
  for (std::uint32_t i = 0; i < m; ++i, ++pos) pos_to_index_[pos] = 1u << i;
  for (std::uint32_t v = 1; v <= n_; ++v) {
    if (std::has_single_bit(v)) continue;
    pos_to_index_[pos++] = v;
  }
  assert(pos == n_ + 1);
  for (std::uint32_t p = 1; p <= n_; ++p) index_to_pos_[pos_to_index_[p]] = p;
}

std::uint32_t CoordMap::index_of_pos(std::uint32_t pos) const {
  if (pos < 1 || pos > n_) throw InvalidInput("position out of range");
  return pos_to_index_[pos];
}

std::uint32_t CoordMap::pos_of_index(std::uint32_t index) const {
  if (index == 0 || index > n_) throw InvalidInput("coordinate label out of range");
  return index_to_pos_[index];
}

std::uint32_t CoordMap::syndrome(const Word& x) const {
  if (x.size() != n_) {
    std::ostringstream os;
    os << "length mismatch: expected n=" << n_ << ", got " << x.size();
    throw InvalidInput(os.str());
  }
  std::uint32_t s = 0;
  x.for_each_set([&](std::uint32_t pos) { s ^= pos_to_index_[pos]; });
  return s;
}

std::uint32_t CoordMap::syndrome_packed(std::uint64_t x) const {
  std::uint32_t s = 0;
  while (x) {
    s ^= pos_to_index_[std::countr_zero(x) + 1];
    x &= x - 1;
  }
  return s;
}

Word CoordMap::unit_word(std::uint32_t index) const {
  if (index == 0)
    throw InvalidInput("the zero m-word labels no position; no unit word exists");
  Word w(n_);
  w.set(pos_of_index(index));
  return w;
}

Word CoordMap::zero_extend(std::uint32_t index) const {
  assert(index <= n_);
  Word w(n_);
  for (std::uint32_t i = 0; i < m_; ++i)
    if ((index >> i) & 1) w.set(i + 1);
  return w;
}

std::uint32_t CoordMap::value_of(const Word& mw) const {
  if (mw.size() != m_) {
    std::ostringstream os;
    os << "length mismatch: expected m=" << m_ << ", got " << mw.size();
    throw InvalidInput(os.str());
  }
  return static_cast<std::uint32_t>(mw.value());
}

}  // namespace perfembed
