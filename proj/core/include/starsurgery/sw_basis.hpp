#pragma once

#include <vector>

#include "starsurgery/blowup.hpp"
#include "starsurgery/matrix.hpp"

namespace starsurgery {

/// Basis data for the adjunctive basic-class search on the surgered manifold:
/// seven classes spanning the orthogonal complement of the plumbing in the
/// ambient blow-up, the 2x2 intersection form of the replacement filling
/// (slots 8 and 9), and the five plumbing vertex classes used for gluing.
struct SearchBasis {
  std::vector<BlowupClass> complement;  // A1..A7, N = 11
  IntMat filling_form;                  // 2x2 negative definite
  std::vector<BlowupClass> plumbing;    // u0..u4

  // Derived on finalize():
  IntMat gram9;        // pairing matrix of A1..A9 (block: complement + filling)
  IntMat gram9_adj;    // adjugate of gram9
  Int gram9_det;
  IntMat lift;         // 12x12 system matrix: row i = J-twisted class i
  IntMat lift_adj;
  Int lift_det;
  IntMat gram7_adj;    // adjugate of the complement block
  Int gram7_det;
  RatMat plumbing_gram_inverse;  // inverse Gram of u0..u4

  void finalize();  // computes the derived data and checks the invariants
  static SearchBasis standard();
};

}  // namespace starsurgery
