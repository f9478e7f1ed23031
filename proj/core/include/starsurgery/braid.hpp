#pragma once

#include <string>
#include <vector>

#include "starsurgery/twist.hpp"

namespace starsurgery {

/// Word in the Artin generators of the braid group on `strands` strands.
/// Letter +g is sigma_g, -g its inverse, 1 <= g <= strands-1; leftmost
/// letter acts first.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int s, std::vector<int> l) : strands(s), letters(std::move(l)) {}

  BraidWord inverse() const;
  BraidWord operator*(const BraidWord& rhs) const;

  std::string to_string() const;
};

/// Which side member strands take when gathered past non-members.
enum class GatherSide { Front, Behind };

/// Doubling embedding of the mapping classes of an n-holed disk into the
/// braid group on 2n strands: hole i becomes the adjacent strand pair
/// (2i-1, 2i) and a twist about a convex curve becomes a full twist on the
/// gathered cable of its member pairs.  Members are gathered rightward to
/// the position of the rightmost member, passing on `side` of non-members.
BraidWord compile_to_braid(const TwistWord& w, GatherSide side = GatherSide::Front);

/// Full twist on the contiguous strand block [first, last] (1-based).
BraidWord full_twist(int strands, int first, int last, long power = 1);

}  // namespace starsurgery
