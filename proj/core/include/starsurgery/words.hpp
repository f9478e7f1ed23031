#pragma once

#include <optional>
#include <vector>

#include "starsurgery/braid_normal_form.hpp"
#include "starsurgery/twist.hpp"

namespace starsurgery {

/// Global compile convention used when none is passed explicitly; flipped by
/// the --mirror-convention flag.  The lantern self-test picks the side.
GatherSide& default_gather_side();

/// Complete integer invariant of the mapping class of a twist word under the
/// doubling embedding.
std::vector<long> twist_invariant(const TwistWord& w, std::optional<GatherSide> side = {});

/// Decides equality of two mapping classes on the same holed disk.
/// Throws Error(HoleCountMismatch) for different hole counts.
bool words_equal(const TwistWord& a, const TwistWord& b,
                 std::optional<GatherSide> side = {});

/// Replaces an occurrence of lhs in w by rhs.  The occurrence may be spread
/// out: letters are brought together by swapping adjacent letters about
/// disjoint curves (disjoint or nested hole subsets).
/// Throws Error(PatternNotFound) when no occurrence exists.
TwistWord substitute(const TwistWord& w, const TwistWord& lhs, const TwistWord& rhs);

/// True when the compile convention satisfies the three-holed lantern
/// identity; used to certify the front/behind choice.
bool lantern_self_test(GatherSide side);

}  // namespace starsurgery
