#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "starsurgery/quadform.hpp"
#include "starsurgery/snf.hpp"

namespace starsurgery {

/// Star-shaped plumbing of spheres: a central vertex and outward arms.
/// Vertex order everywhere: center first, then the arms in order, each arm
/// walked outward.  Intermediate arm vertices must have weight -2, arm ends
/// weight <= -2, and the center must satisfy weight + degree <= -1 so the
/// boundary open book has at least one center hole.
struct StarPlumbing {
  long center_weight = 0;
  std::vector<std::vector<long>> arms;

  // Optional hole labelling for the boundary open book: one block of labels
  // per arm (size |end weight + 1|) plus the extra center holes.  When empty,
  // consecutive blocks in arm order are used, extra center holes last.
  std::vector<std::vector<int>> arm_hole_labels;
  std::vector<int> center_extra_hole_labels;

  std::size_t vertex_count() const;
  std::size_t edge_count() const { return vertex_count() - 1; }
  long euler_characteristic() const { return static_cast<long>(vertex_count()) + 1; }

  long weight(std::size_t v) const;       // vertex order as above
  std::size_t degree(std::size_t v) const;

  /// Weights on the diagonal, 1 on edges.
  IntMat gram() const;

  /// Throws Error(UnsupportedShape) when the shape is outside the supported
  /// family (bad vertex, non -2 intermediate, empty arm, ...).
  void validate() const;
};

struct PlumbingInvariants {
  long chi = 0;
  long sigma = 0;
  IntMat gram;
  AbelianGroup boundary_h1;
  Int boundary_order;  // |det gram|
};

/// chi, signature, Gram matrix and boundary H_1 of the plumbing.
/// Throws Error(NotNegativeDefinite) when the form is not negative definite.
PlumbingInvariants plumbing_invariants(const StarPlumbing& g);

}  // namespace starsurgery
