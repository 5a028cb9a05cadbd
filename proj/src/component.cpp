#include "component.hpp"

#include <algorithm>
#include <cassert>

namespace perfembed {

Component::Component(const CoordMap& map, std::uint32_t delta)
    : map_(&map), delta_(delta) {
  if (delta == 0 || delta > map.n())
    throw InvalidInput("component offset must be a nonzero m-word");
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Component::pairs() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve((std::size_t{1} << (map_->m() - 1)) - 1);
  for (std::uint32_t a = 1; a <= map_->n(); ++a) {
    const std::uint32_t b = a ^ delta_;
    if (a == delta_ || a > b) continue;  // b != 0 here; keep the smaller key
    out.emplace_back(a, b);
  }
  assert(out.size() == (std::size_t{1} << (map_->m() - 1)) - 1);
  return out;
}

bool Component::support_paired(const Word& c) const {
  for (std::size_t i = 0; i < c.block_count(); ++i) {
    std::uint64_t v = c.block(i);
    while (v) {
      const std::uint32_t pos =
          static_cast<std::uint32_t>(i * 64 + std::countr_zero(v) + 1);
      v &= v - 1;
      const std::uint32_t a = map_->index_of_pos(pos);
      if (a == delta_) continue;
      if (!c.get(map_->pos_of_index(a ^ delta_))) return false;
    }
  }
  return true;
}

bool Component::in_coset(const Word& x, const Word& shift) const {
  Word c = x;
  c ^= shift;  // length-checked
  if (map_->syndrome(c) != 0) return false;
  return support_paired(c);
}

bool Component::in_coset_unchecked(const Word& x, const Word& shift) const {
  assert(x.size() == shift.size());
  const std::size_t nb = x.block_count();
  for (std::size_t i = 0; i < nb; ++i) {
    std::uint64_t v = x.block(i) ^ shift.block(i);
    while (v) {
      const std::uint32_t pos =
          static_cast<std::uint32_t>(i * 64 + std::countr_zero(v) + 1);
      v &= v - 1;
      const std::uint32_t a = map_->index_of_pos(pos);
      if (a == delta_) continue;
      const std::uint32_t q = map_->pos_of_index(a ^ delta_) - 1;
      if (!(((x.block(q >> 6) ^ shift.block(q >> 6)) >> (q & 63)) & 1))
        return false;
    }
  }
  return true;
}

bool Component::support_paired_packed(std::uint64_t c) const {
  std::uint64_t rest = c;
  while (rest) {
    const std::uint32_t pos = static_cast<std::uint32_t>(std::countr_zero(rest)) + 1;
    rest &= rest - 1;
    const std::uint32_t a = map_->index_of_pos(pos);
    if (a == delta_) continue;
    if (!((c >> (map_->pos_of_index(a ^ delta_) - 1)) & 1)) return false;
  }
  return true;
}

bool Component::in_coset_packed(std::uint64_t x, std::uint64_t shift) const {
  const std::uint64_t c = x ^ shift;
  if (map_->syndrome_packed(c) != 0) return false;
  return support_paired_packed(c);
}

std::vector<Word> Component::basis() const {
  std::vector<Word> gens;
  const std::uint32_t dpos = map_->pos_of_index(delta_);
  for (const auto& [a, b] : pairs()) {
    Word g(map_->n());
    g.set(map_->pos_of_index(a));
    g.set(map_->pos_of_index(b));
    g.set(dpos);
    gens.push_back(std::move(g));
  }
  return gens;
}

std::vector<std::uint64_t> Component::basis_packed() const {
  if (map_->n() > 63) throw LimitExceeded("packed basis needs n <= 63");
  std::vector<std::uint64_t> gens;
  const std::uint32_t dpos = map_->pos_of_index(delta_);
  for (const auto& [a, b] : pairs()) {
    gens.push_back((std::uint64_t{1} << (map_->pos_of_index(a) - 1)) |
                   (std::uint64_t{1} << (map_->pos_of_index(b) - 1)) |
                   (std::uint64_t{1} << (dpos - 1)));
  }
  return gens;
}

bool quad_condition(const CoordMap& map, const Word& c, std::uint32_t d1,
                    std::uint32_t d2) {
  if (d1 == 0 || d2 == 0 || d1 == d2)
    throw InvalidInput("quad condition needs two distinct nonzero offsets");
  if (c.size() != map.n()) throw InvalidInput("quad condition: word length != n");
  const std::uint32_t d3 = d1 ^ d2;
  for (std::uint32_t a = 1; a <= map.n(); ++a) {
    if (a == d1 || a == d2 || a == d3) continue;
    // One check per 4-orbit: skip a unless it is the orbit's smallest member.
    if ((a ^ d1) < a || (a ^ d2) < a || (a ^ d3) < a) continue;
    const bool sum = c.get(map.pos_of_index(a)) ^ c.get(map.pos_of_index(a ^ d1)) ^
                     c.get(map.pos_of_index(a ^ d2)) ^ c.get(map.pos_of_index(a ^ d3));
    if (sum) return false;
  }
  return true;
}

}  // namespace perfembed
