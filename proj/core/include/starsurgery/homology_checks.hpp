#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "starsurgery/blowup.hpp"
#include "starsurgery/plumbing.hpp"

namespace starsurgery {

/// Candidate realisation of a star plumbing by homology classes: one class
/// per vertex, in the plumbing's vertex order (center first, arms outward).
struct SphereConfiguration {
  std::vector<BlowupClass> classes;
  StarPlumbing graph;
  /// When set, each class is also checked against the genus-0 adjunction
  /// identity <K,C> + C^2 = -2 for this canonical class.
  std::optional<BlowupClass> adjunction_class;
};

struct CheckReport {
  bool pass = true;
  std::vector<std::string> violations;

  void fail(std::string what) {
    pass = false;
    violations.push_back(std::move(what));
  }
  const std::string& first_violation() const { return violations.front(); }
};

/// Squares against vertex weights, pairings against adjacency, optional
/// adjunction. Failures are report content, never exceptions.
CheckReport verify_configuration(const SphereConfiguration& cfg);

/// One reducible singular fiber: components with multiplicities.
using FiberComponents = std::vector<std::pair<BlowupClass, Int>>;

/// Components must sum (with multiplicity) to the elliptic fiber class and
/// each component must be a -2 sphere satisfying adjunction.
CheckReport verify_fiber_decomposition(const FiberComponents& components);

struct ChamberVectorReport {
  CheckReport checks;
  Int square;       // W.W
  Int pairing_h;    // W.h
  Int pairing_K;    // W.K
};

/// W must be orthogonal to every configuration class, have positive square,
/// pair positively with h, and pair with K in the given sign.
ChamberVectorReport verify_chamber_vector(const BlowupClass& W,
                                          const std::vector<BlowupClass>& classes,
                                          int sign_of_KW,
                                          const std::optional<BlowupClass>& K_opt = {});

struct ChamberVectorRepair {
  bool repaired = false;
  BlowupClass vector;          // the repaired vector (or the input when repaired=false)
  std::string note;
};

/// Repairs a transcription slip in a printed chamber vector: first tries
/// single-coefficient integral corrections, then a rational solve of the
/// orthogonality system with cleared denominators.  The result satisfies all
/// verify_chamber_vector conditions or repaired=false is returned.
ChamberVectorRepair repair_chamber_vector(const BlowupClass& W,
                                          const std::vector<BlowupClass>& classes,
                                          int sign_of_KW,
                                          const std::optional<BlowupClass>& K_opt = {});

}  // namespace starsurgery
