#pragma once

#include <cstdint>
#include <vector>

#include "starsurgery/braid.hpp"

namespace starsurgery {

/// A permutation braid: positive braid where each pair of strands crosses at
/// most once, recorded by its permutation (image[i] = end slot of the strand
/// starting in slot i, 0-based).
using Perm = std::vector<std::uint8_t>;

/// Left-greedy normal form Delta^k . A_1 ... A_l with each A_j a permutation
/// braid distinct from 1 and Delta and every adjacent pair left-weighted.
/// Two braid words are equal in the braid group iff their normal forms agree,
/// so the flattened form is a complete invariant.
struct BraidNormalForm {
  int strands = 0;
  long delta_power = 0;
  std::vector<Perm> factors;

  bool operator==(const BraidNormalForm&) const = default;

  std::size_t canonical_length() const { return factors.size(); }
  bool is_identity() const { return delta_power == 0 && factors.empty(); }

  /// Complete integer invariant: strand count, delta power, factor count,
  /// then the factor permutations.
  std::vector<long> invariant() const;
};

BraidNormalForm braid_normal_form(const BraidWord& b);

bool braid_equal(const BraidWord& a, const BraidWord& b);

}  // namespace starsurgery
