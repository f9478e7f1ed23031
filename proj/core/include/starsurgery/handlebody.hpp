#pragma once

#include <vector>

#include "starsurgery/quadform.hpp"
#include "starsurgery/snf.hpp"

namespace starsurgery {

/// Dotted-circle handle diagram: n 1-handles (labeled 1..n left to right)
/// and 2-handles whose attaching circles run once over each dotted circle
/// in their subset.
struct Handle {
  std::vector<int> over;  // strictly increasing hole labels
  long framing = -1;
};

struct Handlebody {
  int holes = 0;
  std::vector<Handle> handles;

  void validate() const;
  std::size_t handle_count() const { return handles.size(); }
  long euler_characteristic() const {
    return 1 - holes + static_cast<long>(handles.size());
  }

  /// Boundary matrix C2 -> C1 of the handle chain complex.
  IntMat boundary_matrix() const;
};

struct HomologyReport {
  long chi = 0;
  std::size_t h2_rank = 0;
  std::vector<IntVec> cycles;  // kernel basis, coordinates over the handles
  IntMat gram;                 // intersection form on that basis
  QuadraticFormProfile profile;
  long sigma = 0;
  AbelianGroup h2_cochain;     // cokernel of the dual map (second cohomology)
};

HomologyReport homology_report(const Handlebody& h);

bool is_cycle(const Handlebody& h, const IntVec& combo);

/// Intersection form on an explicit family of 2-cycles: handles are
/// orthogonal of square framing_i, extended bilinearly.
IntMat gram_on_cycles(const Handlebody& h, const std::vector<IntVec>& cycles);

/// Surgery linking matrix [[0, B],[B^T, F]]: dotted circles 0-framed,
/// B the hole/handle incidence, F the framings.
IntMat linking_matrix(const Handlebody& h);

/// First homology of the boundary 3-manifold.
AbelianGroup boundary_h1(const Handlebody& h);

struct RestrictionReport {
  AbelianGroup boundary;
  Int boundary_order;  // 0 when infinite
  Int image_order;
  Int index;
};

/// Index of the image of second cohomology in the boundary's first homology:
/// the dual of each 2-handle maps to the sum of the meridians of the dotted
/// circles it runs over.
RestrictionReport restriction_index(const Handlebody& h);

/// Evaluation of the first Chern class on a 2-cycle: every vanishing-cycle
/// handle has winding number one, so the value is the coefficient sum.
/// Throws Error(NotACycle).
Int c1_evaluate(const Handlebody& h, const IntVec& cycle);

}  // namespace starsurgery
