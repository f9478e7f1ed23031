#include <doctest.h>

#include "starsurgery/catalog.hpp"
#include "starsurgery/gaymark.hpp"
#include "starsurgery/spinc.hpp"

using namespace starsurgery;

TEST_CASE("invariants of the catalog plumbings") {
  PlumbingInvariants s2 = plumbing_invariants(catalog::star_family(2));
  CHECK(s2.chi == 6);
  CHECK(s2.sigma == -5);
  CHECK(s2.boundary_order == 48);
  REQUIRE(s2.boundary_h1.torsion.size() == 3);
  CHECK(s2.boundary_h1.torsion[0] == 2);
  CHECK(s2.boundary_h1.torsion[1] == 2);
  CHECK(s2.boundary_h1.torsion[2] == 12);
  CHECK(s2.boundary_h1.free_rank == 0);

  PlumbingInvariants q = plumbing_invariants(catalog::plumbing_Q().graph);
  CHECK(q.chi == 8);
  CHECK(q.sigma == -7);

  PlumbingInvariants u = plumbing_invariants(catalog::plumbing_U().graph);
  CHECK(u.chi == 10);
  CHECK(u.sigma == -9);

  PlumbingInvariants k = plumbing_invariants(catalog::plumbing_K().graph);
  CHECK(k.chi == 6);
  CHECK(k.sigma == -5);
}

TEST_CASE("a positive-weight vertex is rejected") {
  StarPlumbing bad;
  bad.center_weight = -1;  // degree 4 would make a bad vertex
  bad.arms = {{-2}, {-2}, {-2}, {-2}};
  CHECK_THROWS_AS(plumbing_invariants(bad), Error);
}

TEST_CASE("an indefinite star is flagged") {
  StarPlumbing g;
  g.center_weight = -5;
  g.arms = {{2}, {-2}};
  CHECK_THROWS_AS(g.validate(), Error);
}

TEST_CASE("open book words match the printed catalog letter for letter") {
  for (int i = 1; i <= 4; ++i) {
    catalog::LabeledPlumbing p = catalog::plumbing_S(i);
    OpenBookWord w = gaymark_word(p.graph, p.outer);
    INFO(p.name);
    CHECK(w.holes == i + 2);
    CHECK(w.monodromy.same_letters(p.printed_word));
  }
  for (auto maker : {catalog::plumbing_Q, catalog::plumbing_U, catalog::plumbing_K}) {
    catalog::LabeledPlumbing p = maker();
    OpenBookWord w = gaymark_word(p.graph, p.outer);
    INFO(p.name);
    CHECK(w.monodromy.same_letters(p.printed_word));
  }
}

TEST_CASE("open book letter count is edges plus total hole excess") {
  for (int i = 1; i <= 4; ++i) {
    StarPlumbing g = catalog::star_family(i);
    OpenBookWord w = gaymark_word(g);
    long letters = 0;
    for (const auto& l : w.monodromy.letters) letters += std::abs(l.power);
    long excess = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      excess += std::abs(g.weight(v) + static_cast<long>(g.degree(v)));
    CHECK(letters == static_cast<long>(g.edge_count()) + excess);
  }
}

TEST_CASE("unsupported arm shapes are reported") {
  StarPlumbing g;
  g.center_weight = -5;
  g.arms = {{-3, -2}, {-2}, {-2}, {-2}};  // intermediate must be -2
  CHECK_THROWS_AS(gaymark_word(g), Error);
}

TEST_CASE("orbit analysis over the five-sphere star") {
  OrbitReport rep = spinc_orbit_analysis(catalog::star_family(2),
                                         catalog::reduced_d_values_filling());
  CHECK(rep.box_size == 80);
  CHECK(rep.orbits.size() == 48);

  CHECK(rep.reduced_d_values == catalog::reduced_d_values_star());

  // the 24 extendable orbit representatives, as an unordered set
  std::vector<IntVec> expect = catalog::phi_reference();
  std::sort(expect.begin(), expect.end());
  CHECK(rep.selected == expect);
}

TEST_CASE("orbit analysis over the filling form") {
  OrbitReport rep = spinc_orbit_analysis_gram(catalog::filling_t2_form(), 3, -2,
                                              {});
  CHECK(rep.orbits.size() == 12);
  CHECK(rep.reduced_d_values == catalog::reduced_d_values_filling());
}

TEST_CASE("orbit partition is a partition with constant reduced d") {
  OrbitReport rep = spinc_orbit_analysis(catalog::star_family(2), {});
  // every box element is assigned to exactly one orbit; distinct
  // representatives are pairwise incongruent
  CHECK(rep.box.size() == rep.box_size);
  IntMat gram = catalog::star_family(2).gram();
  IntMat adj = gram.adjugate();
  Int det = gram.determinant();
  auto congruent = [&](const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < 5; ++i) {
      Int num(0);
      for (std::size_t j = 0; j < 5; ++j) num += adj.at(i, j) * (a[j] - b[j]);
      if (num % (2 * det) != 0) return false;
    }
    return true;
  };
  for (std::size_t a = 0; a < rep.orbits.size(); ++a)
    for (std::size_t b = a + 1; b < rep.orbits.size(); ++b)
      CHECK(!congruent(rep.orbits[a].tuple, rep.orbits[b].tuple));
  for (const auto& [tuple, orbit] : rep.box) {
    CHECK(congruent(tuple, rep.orbits[orbit].tuple));
    // reduced d is constant along the orbit
    Int q(0);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) q += tuple[i] * adj.at(i, j) * tuple[j];
    Rat d = make_rat(q, det) / 4 + make_rat(-3 * (-5) - 2 * 6, 4);
    CHECK(reduce_mod2_halfopen(d) == rep.orbits[orbit].d_mod2);
  }
}

TEST_CASE("the filling-side representative of largest dimension") {
  // pairing tuple (3,0,0,0,0) has d = ((9 * -1/3) + 3)/4 = 0, reduced 0,
  // and is kept by the allowed set
  OrbitReport rep = spinc_orbit_analysis(catalog::star_family(2),
                                         catalog::reduced_d_values_filling());
  IntVec t{Int(3), Int(0), Int(0), Int(0), Int(0)};
  bool found = false;
  for (const auto& o : rep.orbits)
    if (o.tuple == t) {
      found = true;
      CHECK(o.d == 0);
      CHECK(o.d_mod2 == 0);
    }
  CHECK(found);
  CHECK(std::find(rep.selected.begin(), rep.selected.end(), t) != rep.selected.end());
}
