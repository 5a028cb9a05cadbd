#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gf2.hpp"

namespace perfembed {

/// A linear component of the Hamming code, determined by a nonzero m-word
/// `delta`: the subcode of Hamming words that take equal values on every
/// coordinate pair {a, a+delta}. The pairs partition the nonzero m-words
/// other than delta itself into 2^(m-1) - 1 pairs; the coordinate labeled
/// delta is unconstrained by the pairing.
///
/// Holds a pointer to the CoordMap it was built from; the map must outlive
/// the component.
class Component {
 public:
  Component(const CoordMap& map, std::uint32_t delta);

  std::uint32_t delta() const { return delta_; }
  const CoordMap& map() const { return *map_; }

  /// Pairs {a, a^delta} keyed by the smaller packed value, ascending.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs() const;

  /// True iff x lies in the coset (component + shift).
  bool in_coset(const Word& x, const Word& shift) const;

  /// Pair-constancy of x + shift only, probed without materializing the
  /// sum; caller guarantees x + shift has zero syndrome.
  bool in_coset_unchecked(const Word& x, const Word& shift) const;

  /// Packed variants for n <= 63.
  bool in_coset_packed(std::uint64_t x, std::uint64_t shift) const;
  bool support_paired_packed(std::uint64_t c) const;

  /// One generator per pair: the weight-3 word with ones at the two paired
  /// positions and at the position labeled delta. The generators are
  /// linearly independent and span the whole component.
  std::vector<Word> basis() const;
  std::vector<std::uint64_t> basis_packed() const;

 private:
  bool support_paired(const Word& c) const;

  const CoordMap* map_;
  std::uint32_t delta_;
};

/// True iff the coordinates of c sum to zero over every 4-orbit
/// {a, a+d1, a+d2, a+d1+d2} with a outside the span {0, d1, d2, d1+d2}.
/// Every word in the span of two components with offsets d1 and d2
/// satisfies this. Requires d1, d2 nonzero and distinct.
bool quad_condition(const CoordMap& map, const Word& c, std::uint32_t d1,
                    std::uint32_t d2);

/// Visits every word of the linear span of `basis` exactly once, starting
/// from the zero word (Gray-code order: one generator toggled per step).
template <class F>
void for_each_in_span(std::uint32_t len, const std::vector<Word>& basis, F fn) {
  if (basis.size() >= 48)
    throw LimitExceeded("span enumeration limited to 48 generators");
  Word cur(len);
  fn(cur);
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t k = 1; k < total; ++k) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(k))];
    fn(cur);
  }
}

template <class F>
void for_each_in_span_packed(const std::vector<std::uint64_t>& basis, F fn) {
  if (basis.size() >= 48)
    throw LimitExceeded("span enumeration limited to 48 generators");
  std::uint64_t cur = 0;
  fn(cur);
  const std::uint64_t total = std::uint64_t{1} << basis.size();
  for (std::uint64_t k = 1; k < total; ++k) {
    cur ^= basis[static_cast<std::size_t>(std::countr_zero(k))];
    fn(cur);
  }
}

}  // namespace perfembed
