#pragma once

#include <vector>

#include "starsurgery/plumbing.hpp"

namespace starsurgery {

struct OrbitRepresentative {
  IntVec tuple;  // pairings of the class against the vertex classes
  Rat d;         // (L^2 - 3 sigma - 2 chi)/4
  Rat d_mod2;    // reduced into (-1, 1]
};

struct OrbitReport {
  std::size_t box_size = 0;
  std::vector<OrbitRepresentative> orbits;          // deterministic order
  std::vector<std::pair<IntVec, std::size_t>> box;  // tuple -> orbit index
  std::vector<Rat> reduced_d_values;                // distinct, sorted
  std::vector<IntVec> selected;                     // reps with d_mod2 allowed
};

/// Characteristic-class orbit analysis over a negative-definite form:
/// enumerates the characteristic tuples in the box diag+2 <= t_v <= -diag,
/// partitions them modulo 2 * Gram * Z^k, keeps the maximal-d representative
/// per orbit, reduces d mod 2 into (-1, 1], and selects the representatives
/// whose reduced value lies in allowed_mod2.
/// Throws Error(NotNegativeDefinite) otherwise.
OrbitReport spinc_orbit_analysis_gram(const IntMat& gram, long chi, long sigma,
                                      const std::vector<Rat>& allowed_mod2);

OrbitReport spinc_orbit_analysis(const StarPlumbing& g,
                                 const std::vector<Rat>& allowed_mod2);

}  // namespace starsurgery
