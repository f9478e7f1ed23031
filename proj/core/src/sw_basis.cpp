#include "starsurgery/sw_basis.hpp"

#include "starsurgery/catalog.hpp"
#include "starsurgery/quadform.hpp"

namespace starsurgery {

void SearchBasis::finalize() {
  if (complement.size() != 7 || plumbing.size() != 5 ||
      filling_form.rows() != 2 || filling_form.cols() != 2)
    throw Error(ErrorCode::DimensionMismatch, "search basis has fixed shape 7+2+5");
  std::size_t N = complement.front().N;
  for (const auto& a : complement)
    for (const auto& u : plumbing)
      if (pair_classes(a, u) != 0)
        throw Error(ErrorCode::DimensionMismatch,
                    "complement classes must be orthogonal to the plumbing");

  gram9 = IntMat(9, 9);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      gram9.at(i, j) = pair_classes(complement[i], complement[j]);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      gram9.at(7 + i, 7 + j) = filling_form.at(i, j);
  gram9_det = gram9.determinant();
  if (gram9_det == 0)
    throw Error(ErrorCode::SingularMatrix, "search Gram is singular");
  gram9_adj = gram9.adjugate();

  IntMat g7(7, 7);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) g7.at(i, j) = gram9.at(i, j);
  gram7_det = g7.determinant();
  gram7_adj = g7.adjugate();

  // 12x12 system: <l, w_i> = rhs_i, i.e. (W J) l = rhs in (h, e) coordinates.
  lift = IntMat(12, 12);
  auto fill_row = [&](std::size_t row, const BlowupClass& c) {
    lift.at(row, 0) = c.coeffs[0];
    for (std::size_t j = 1; j <= N; ++j) lift.at(row, j) = -c.coeffs[j];
  };
  for (std::size_t i = 0; i < 7; ++i) fill_row(i, complement[i]);
  for (std::size_t i = 0; i < 5; ++i) fill_row(7 + i, plumbing[i]);
  lift_det = lift.determinant();
  if (lift_det == 0)
    throw Error(ErrorCode::SingularMatrix, "lift system is singular");
  lift_adj = lift.adjugate();

  IntMat pg(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      pg.at(i, j) = pair_classes(plumbing[i], plumbing[j]);
  if (quadratic_form_profile(pg).definiteness != Definiteness::NegativeDefinite)
    throw Error(ErrorCode::NotNegativeDefinite, "plumbing Gram must be negative definite");
  plumbing_gram_inverse = invert_rational(pg);
}

SearchBasis SearchBasis::standard() {
  SearchBasis b;
  const std::size_t N = 11;
  b.complement = {
      BlowupClass::of(N, {1, 0, 0, -1, 0, -1, 0, -1, 0, -1, 0, 1}),
      BlowupClass::of(N, {-3, 2, 0, 1, 0, 1, 0, 1, 0, 1, 2, 2}),
      BlowupClass::of(N, {0, 0, 1, -1, 0, 0, 0, 0, 0, 0, 0, 0}),
      BlowupClass::of(N, {0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 0}),
      BlowupClass::of(N, {0, 0, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0}),
      BlowupClass::of(N, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1}),
      BlowupClass::of(N, {0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0, 0}),
  };
  b.filling_form = catalog::filling_t2_form();
  b.plumbing = catalog::embedding_s2_cp11().classes;
  b.finalize();
  return b;
}

}  // namespace starsurgery
