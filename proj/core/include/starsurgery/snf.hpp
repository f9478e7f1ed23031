#pragma once

#include <string>
#include <vector>

#include "starsurgery/matrix.hpp"

namespace starsurgery {

/// Diagonalisation U * M * V = D with unimodular witnesses.
/// Diagonal entries are nonnegative and form a divisibility chain
/// d1 | d2 | ... ; invariant_factors keeps the nonzero, non-unit entries.
struct SmithResult {
  IntMat D;
  IntMat U;
  IntMat V;
  IntVec invariant_factors;
  std::size_t rank = 0;
};

SmithResult smith_normal_form(const IntMat& M);

/// Finitely generated abelian group Z^free ⊕ (Z/t1 ⊕ Z/t2 ⊕ ...),
/// torsion listed in divisibility order.
struct AbelianGroup {
  std::size_t free_rank = 0;
  IntVec torsion;

  bool operator==(const AbelianGroup& other) const = default;

  bool is_finite() const { return free_rank == 0; }
  Int order() const;  // 0 when infinite
  std::string to_string() const;
};

/// Cokernel Z^rows / im(M).
AbelianGroup cokernel(const IntMat& M);

/// Basis of the integer kernel of M (columns x with M x = 0),
/// returned as one vector per basis element.
std::vector<IntVec> kernel_basis(const IntMat& M);

}  // namespace starsurgery
