#pragma once

#include <vector>

#include "starsurgery/sw_basis.hpp"

namespace starsurgery {

struct StageCounts {
  unsigned long adjunctive = 0;       // characteristic adjunctive box
  unsigned long dimension = 0;        // d integral, >= 0, even
  unsigned long triples = 0;          // glued against the extendable orbit set
  unsigned long upstairs_dimension = 0;
  unsigned long integral_characteristic = 0;
  unsigned long wall_crossed = 0;

  bool operator==(const StageCounts&) const = default;
};

struct Survivor {
  IntVec tuple;   // t1..t9
  IntVec glue;    // the orbit representative used for the lift
  RatVec lifted;  // 12 coordinates (h, e1..e11)
  Rat d;          // expected dimension on the surgered manifold

  bool operator<(const Survivor& o) const { return tuple < o.tuple; }
  bool operator==(const Survivor&) const = default;
};

struct PipelineReport {
  StageCounts counts;
  std::vector<Survivor> survivors;  // sorted by tuple
};

/// The six-stage adjunctive basic-class search.  phi is the extendable orbit
/// set (pairing tuples against the plumbing classes), V the chamber vector.
/// Deterministic for any worker count; throws Error(WallAmbiguity) when a
/// candidate pairs to zero against V.
PipelineReport run_pipeline(const SearchBasis& basis, const std::vector<IntVec>& phi,
                            const BlowupClass& V, unsigned workers = 1);

}  // namespace starsurgery
