#include "starsurgery/quadform.hpp"

namespace starsurgery {

const char* definiteness_name(Definiteness d) {
  switch (d) {
    case Definiteness::PositiveDefinite: return "positive-definite";
    case Definiteness::NegativeDefinite: return "negative-definite";
    case Definiteness::Indefinite: return "indefinite";
    case Definiteness::Degenerate: return "degenerate";
  }
  return "?";
}

QuadraticFormProfile quadratic_form_profile(const IntMat& G) {
  if (!G.is_symmetric())
    throw Error(ErrorCode::NotSymmetric, "quadratic form matrix must be symmetric");
  std::size_t n = G.rows();
  RatMat a(G);
  QuadraticFormProfile p;

  for (std::size_t k = 0; k < n; ++k) {
    if (a.at(k, k) == 0) {
      // Symmetric pivoting: prefer a later nonzero diagonal entry; otherwise
      // symmetrise a nonzero off-diagonal entry onto the diagonal
      // (row/col addition is a congruence, 2*a_kj lands at (k,k)).
      std::size_t d = k;
      while (d < n && a.at(d, d) == 0) ++d;
      if (d < n) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(d, j));
        for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, k), a.at(i, d));
      } else {
        std::size_t j = k + 1;
        while (j < n && a.at(k, j) == 0) ++j;
        if (j == n) continue;  // row k is zero in the remaining block
        for (std::size_t c = 0; c < n; ++c) a.at(k, c) += a.at(j, c);
        for (std::size_t r = 0; r < n; ++r) a.at(r, k) += a.at(r, j);
      }
    }
    if (a.at(k, k) == 0) continue;
    const Rat pivot = a.at(k, k);
    if (pivot > 0)
      ++p.b_plus;
    else
      ++p.b_minus;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k) == 0) continue;
      Rat f = a.at(i, k) / pivot;
      for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      for (std::size_t j = k; j < n; ++j) a.at(j, i) = a.at(i, j);
    }
  }

  p.b_zero = n - p.b_plus - p.b_minus;
  if (p.b_zero > 0)
    p.definiteness = Definiteness::Degenerate;
  else if (p.b_plus == n && n > 0)
    p.definiteness = Definiteness::PositiveDefinite;
  else if (p.b_minus == n && n > 0)
    p.definiteness = Definiteness::NegativeDefinite;
  else
    p.definiteness = n == 0 ? Definiteness::Degenerate : Definiteness::Indefinite;
  return p;
}

}  // namespace starsurgery
