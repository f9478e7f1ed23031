#include "starsurgery/spinc.hpp"

#include <algorithm>

namespace starsurgery {

OrbitReport spinc_orbit_analysis_gram(const IntMat& gram, long chi, long sigma,
                                      const std::vector<Rat>& allowed_mod2) {
  if (quadratic_form_profile(gram).definiteness != Definiteness::NegativeDefinite)
    throw Error(ErrorCode::NotNegativeDefinite, "orbit analysis needs a definite form");
  std::size_t k = gram.rows();
  IntMat adj = gram.adjugate();
  Int det = gram.determinant();

  // Characteristic box: per coordinate from diag+2 to -diag in steps of 2.
  std::vector<std::vector<Int>> ranges(k);
  for (std::size_t v = 0; v < k; ++v) {
    for (Int t = gram.at(v, v) + 2; t <= -gram.at(v, v); t += 2)
      ranges[v].push_back(t);
  }

  OrbitReport rep;
  // Same orbit iff Gram^{-1}((t - t')/2) is integral.
  auto same_orbit = [&](const IntVec& a, const IntVec& b) {
    IntVec v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = a[i] - b[i];
    for (std::size_t i = 0; i < k; ++i) {
      Int num(0);
      for (std::size_t j = 0; j < k; ++j) num += adj.at(i, j) * v[j];
      if (num % (2 * det) != 0) return false;
    }
    return true;
  };
  auto l_square = [&](const IntVec& t) {
    Int num(0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) num += t[i] * adj.at(i, j) * t[j];
    return make_rat(num, det);
  };
  Rat d_shift = make_rat(-3 * sigma - 2 * chi, 4);

  std::vector<std::vector<IntVec>> members;  // per orbit
  IntVec cursor(k);
  std::vector<std::size_t> pos(k, 0);
  bool done = k == 0;
  while (!done) {
    for (std::size_t i = 0; i < k; ++i) cursor[i] = ranges[i][pos[i]];
    ++rep.box_size;
    std::size_t orbit = members.size();
    for (std::size_t o = 0; o < members.size(); ++o)
      if (same_orbit(cursor, members[o].front())) {
        orbit = o;
        break;
      }
    if (orbit == members.size()) members.emplace_back();
    members[orbit].push_back(cursor);
    rep.box.emplace_back(cursor, orbit);
    // advance the odometer
    std::size_t i = 0;
    while (i < k && ++pos[i] == ranges[i].size()) {
      pos[i] = 0;
      ++i;
    }
    done = i == k;
  }

  for (const auto& orbit : members) {
    OrbitRepresentative best;
    bool have = false;
    Rat best_sq;
    for (const auto& t : orbit) {
      Rat sq = l_square(t);
      if (!have || sq > best_sq || (sq == best_sq && t > best.tuple)) {
        have = true;
        best_sq = sq;
        best.tuple = t;
      }
    }
    best.d = best_sq / 4 + d_shift;
    best.d_mod2 = reduce_mod2_halfopen(best.d);
    rep.orbits.push_back(std::move(best));
  }

  for (const auto& o : rep.orbits) {
    if (std::find(rep.reduced_d_values.begin(), rep.reduced_d_values.end(),
                  o.d_mod2) == rep.reduced_d_values.end())
      rep.reduced_d_values.push_back(o.d_mod2);
    if (std::find(allowed_mod2.begin(), allowed_mod2.end(), o.d_mod2) !=
        allowed_mod2.end())
      rep.selected.push_back(o.tuple);
  }
  std::sort(rep.reduced_d_values.begin(), rep.reduced_d_values.end());
  std::sort(rep.selected.begin(), rep.selected.end());
  return rep;
}

OrbitReport spinc_orbit_analysis(const StarPlumbing& g,
                                 const std::vector<Rat>& allowed_mod2) {
  PlumbingInvariants inv = plumbing_invariants(g);
  return spinc_orbit_analysis_gram(inv.gram, inv.chi, inv.sigma, allowed_mod2);
}

}  // namespace starsurgery
