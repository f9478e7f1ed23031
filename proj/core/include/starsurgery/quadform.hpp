#pragma once

#include <cstddef>
#include <string>

#include "starsurgery/matrix.hpp"

namespace starsurgery {

enum class Definiteness {
  PositiveDefinite,
  NegativeDefinite,
  Indefinite,
  Degenerate,
};

const char* definiteness_name(Definiteness d);

/// Inertia of a symmetric integer form, computed exactly.
struct QuadraticFormProfile {
  std::size_t b_plus = 0;
  std::size_t b_minus = 0;
  std::size_t b_zero = 0;
  Definiteness definiteness = Definiteness::Degenerate;

  bool operator==(const QuadraticFormProfile&) const = default;

  long signature() const {
    return static_cast<long>(b_plus) - static_cast<long>(b_minus);
  }
};

/// Signature counts of a symmetric matrix via rational symmetric elimination
/// (congruence transformations only, so Sylvester's law applies).
/// Throws Error(NotSymmetric) for non-symmetric input.
QuadraticFormProfile quadratic_form_profile(const IntMat& G);

}  // namespace starsurgery
