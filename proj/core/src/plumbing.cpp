#include "starsurgery/plumbing.hpp"

namespace starsurgery {

std::size_t StarPlumbing::vertex_count() const {
  std::size_t n = 1;
  for (const auto& arm : arms) n += arm.size();
  return n;
}

long StarPlumbing::weight(std::size_t v) const {
  if (v == 0) return center_weight;
  std::size_t k = v - 1;
  for (const auto& arm : arms) {
    if (k < arm.size()) return arm[k];
    k -= arm.size();
  }
  throw Error(ErrorCode::DimensionMismatch, "vertex index out of range");
}

std::size_t StarPlumbing::degree(std::size_t v) const {
  if (v == 0) return arms.size();
  std::size_t k = v - 1;
  for (const auto& arm : arms) {
    if (k < arm.size()) return k + 1 == arm.size() ? 1 : 2;
    k -= arm.size();
  }
  throw Error(ErrorCode::DimensionMismatch, "vertex index out of range");
}

IntMat StarPlumbing::gram() const {
  std::size_t n = vertex_count();
  IntMat g(n, n);
  for (std::size_t v = 0; v < n; ++v) g.at(v, v) = weight(v);
  std::size_t idx = 1;
  for (const auto& arm : arms) {
    std::size_t prev = 0;  // center
    for (std::size_t k = 0; k < arm.size(); ++k) {
      g.at(prev, idx) = 1;
      g.at(idx, prev) = 1;
      prev = idx;
      ++idx;
    }
  }
  return g;
}

void StarPlumbing::validate() const {
  if (arms.empty() && center_weight >= 0)
    throw Error(ErrorCode::UnsupportedShape, "center weight must be negative");
  long k0 = -(center_weight + static_cast<long>(arms.size()));
  if (k0 < 1)
    throw Error(ErrorCode::UnsupportedShape,
                "center needs weight + degree <= -1 (bad vertex)");
  for (const auto& arm : arms) {
    if (arm.empty())
      throw Error(ErrorCode::UnsupportedShape, "empty arm");
    for (std::size_t k = 0; k + 1 < arm.size(); ++k)
      if (arm[k] != -2)
        throw Error(ErrorCode::UnsupportedShape,
                    "intermediate arm vertices must have weight -2");
    if (arm.back() > -2)
      throw Error(ErrorCode::UnsupportedShape,
                  "arm end needs weight <= -2 (bad vertex)");
  }
}

PlumbingInvariants plumbing_invariants(const StarPlumbing& g) {
  g.validate();
  PlumbingInvariants inv;
  inv.chi = g.euler_characteristic();
  inv.gram = g.gram();
  QuadraticFormProfile prof = quadratic_form_profile(inv.gram);
  if (prof.definiteness != Definiteness::NegativeDefinite)
    throw Error(ErrorCode::NotNegativeDefinite,
                "plumbing form is not negative definite");
  inv.sigma = prof.signature();
  inv.boundary_h1 = cokernel(inv.gram);
  inv.boundary_order = abs(inv.gram.determinant());
  return inv;
}

}  // namespace starsurgery
