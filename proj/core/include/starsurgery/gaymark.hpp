#pragma once

#include "starsurgery/plumbing.hpp"
#include "starsurgery/twist.hpp"

namespace starsurgery {

/// Placement of the boundary-parallel twist in the emitted word; both orders
/// describe the same mapping class (all letters are about disjoint curves),
/// catalog entries fix the printed form.
enum class OuterTwistPosition { First, Last };

struct OpenBookWord {
  int holes = 0;
  TwistWord monodromy;
};

/// Boundary open book of a star plumbing: the page is a disk with one hole
/// block per arm plus the extra center holes, the monodromy one twist about
/// the outer curve, per arm j a block twist repeated (arm length) times
/// followed by one twist per block hole, and one twist per extra center
/// hole.  Throws Error(UnsupportedShape) outside the supported family.
OpenBookWord gaymark_word(const StarPlumbing& g,
                          OuterTwistPosition outer = OuterTwistPosition::First);

}  // namespace starsurgery
