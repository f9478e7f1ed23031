#pragma once

#include <string>
#include <vector>

#include "starsurgery/twist.hpp"

namespace starsurgery {

/// Ordered blocks of hole labels; blocks must be disjoint.
using HoleBlocks = std::vector<std::vector<int>>;

/// Consecutive singleton-free blocks of the given sizes: {1..s1}, {s1+1..}, ...
HoleBlocks consecutive_blocks(const std::vector<int>& sizes);

struct NamedRelation {
  std::string name;
  int holes = 0;
  TwistWord lhs;
  TwistWord rhs;
};

/// lantern: three blocks.  daisy: m+1 blocks B0..Bm.  park: five blocks
/// A,B,C,D,E.  genlantern: parameter i on i+2 holes.  QR, UV, KL, MN, OP:
/// fixed words.  Throws Error(UnknownRelation) for anything else.
NamedRelation build_relation(const std::string& name, const HoleBlocks& blocks = {},
                             int param = 0);

struct RelationReport {
  NamedRelation relation;
  bool equal = false;
  double milliseconds = 0.0;
};

RelationReport verify_named_relation(const std::string& name,
                                     const HoleBlocks& blocks = {}, int param = 0);

/// Every single-element change of one letter's subset (add or drop one hole,
/// keeping it nonempty) must break the relation; returns the number of
/// perturbations tried, all of which compared unequal, or throws on the
/// first one that stayed equal.
std::size_t verify_relation_perturbations(const NamedRelation& rel);

/// Relation instances exercised by the acceptance suite.
std::vector<NamedRelation> acceptance_relation_instances();

}  // namespace starsurgery
