#include "starsurgery/handlebody.hpp"

#include <algorithm>

namespace starsurgery {

void Handlebody::validate() const {
  if (holes < 1)
    throw Error(ErrorCode::UnsupportedShape, "need at least one dotted circle");
  for (const auto& h : handles) {
    if (h.over.empty())
      throw Error(ErrorCode::EmptySubset, "2-handle must run over a dotted circle");
    if (!std::is_sorted(h.over.begin(), h.over.end()) ||
        std::adjacent_find(h.over.begin(), h.over.end()) != h.over.end())
      throw Error(ErrorCode::UnsupportedShape, "handle subset must be strictly increasing");
    if (h.over.front() < 1 || h.over.back() > holes)
      throw Error(ErrorCode::BadHole, "handle runs over a missing dotted circle");
  }
}

IntMat Handlebody::boundary_matrix() const {
  IntMat d(holes, handles.size());
  for (std::size_t j = 0; j < handles.size(); ++j)
    for (int c : handles[j].over) d.at(c - 1, j) = 1;
  return d;
}

bool is_cycle(const Handlebody& h, const IntVec& combo) {
  if (combo.size() != h.handles.size())
    throw Error(ErrorCode::DimensionMismatch, "cycle coordinate count");
  IntVec img = h.boundary_matrix() * combo;
  return std::all_of(img.begin(), img.end(), [](const Int& x) { return x == 0; });
}

IntMat gram_on_cycles(const Handlebody& h, const std::vector<IntVec>& cycles) {
  IntMat g(cycles.size(), cycles.size());
  for (std::size_t a = 0; a < cycles.size(); ++a)
    for (std::size_t b = 0; b < cycles.size(); ++b) {
      Int s(0);
      for (std::size_t i = 0; i < h.handles.size(); ++i)
        s += cycles[a][i] * cycles[b][i] * Int(h.handles[i].framing);
      g.at(a, b) = s;
    }
  return g;
}

HomologyReport homology_report(const Handlebody& h) {
  h.validate();
  HomologyReport rep;
  rep.chi = h.euler_characteristic();
  IntMat d = h.boundary_matrix();
  rep.cycles = kernel_basis(d);
  rep.h2_rank = rep.cycles.size();
  rep.gram = gram_on_cycles(h, rep.cycles);
  rep.profile = quadratic_form_profile(rep.gram);
  rep.sigma = rep.profile.signature();
  rep.h2_cochain = cokernel(d.transpose());
  return rep;
}

IntMat linking_matrix(const Handlebody& h) {
  std::size_t n = h.holes, m = h.handles.size();
  IntMat L(n + m, n + m);
  for (std::size_t j = 0; j < m; ++j) {
    for (int c : h.handles[j].over) {
      L.at(c - 1, n + j) = 1;
      L.at(n + j, c - 1) = 1;
    }
    L.at(n + j, n + j) = h.handles[j].framing;
  }
  return L;
}

AbelianGroup boundary_h1(const Handlebody& h) {
  h.validate();
  return cokernel(linking_matrix(h));
}

RestrictionReport restriction_index(const Handlebody& h) {
  h.validate();
  RestrictionReport rep;
  IntMat L = linking_matrix(h);
  rep.boundary = cokernel(L);
  rep.boundary_order = rep.boundary.order();
  std::size_t n = h.holes, m = h.handles.size();
  // Quotient by the image subgroup: append one column per 2-handle dual,
  // equal to the sum of the lambda generators it runs over.
  IntMat aug(n + m, n + m + m);
  for (std::size_t i = 0; i < n + m; ++i)
    for (std::size_t j = 0; j < n + m; ++j) aug.at(i, j) = L.at(i, j);
  for (std::size_t j = 0; j < m; ++j)
    for (int c : h.handles[j].over) aug.at(c - 1, n + m + j) = 1;
  AbelianGroup quot = cokernel(aug);
  rep.index = quot.order();
  if (rep.index == 0 || rep.boundary_order == 0) {
    rep.image_order = 0;
  } else {
    rep.image_order = rep.boundary_order / rep.index;
  }
  return rep;
}

Int c1_evaluate(const Handlebody& h, const IntVec& cycle) {
  if (!is_cycle(h, cycle))
    throw Error(ErrorCode::NotACycle, "combination has nonzero boundary");
  Int s(0);
  for (const Int& c : cycle) s += c;
  return s;
}

}  // namespace starsurgery
