#include <doctest.h>

#include <random>

#include "starsurgery/catalog.hpp"
#include "starsurgery/homeo.hpp"
#include "starsurgery/homology_checks.hpp"
#include "starsurgery/kodaira.hpp"

using namespace starsurgery;

namespace {

BlowupClass random_class(std::mt19937_64& rng, std::size_t N) {
  std::uniform_int_distribution<long> d(-6, 6);
  IntVec c(N + 1);
  for (auto& x : c) x = d(rng);
  return BlowupClass(N, std::move(c));
}

}  // namespace

TEST_CASE("pairing basics") {
  CHECK(pair_classes(hyperplane_class(11), hyperplane_class(11)) == 1);
  CHECK(square(exceptional_class(11, 3)) == -1);
  CHECK(pair_classes(hyperplane_class(11), exceptional_class(11, 3)) == 0);

  // center class of the five-sphere star: twice the fiber plus e1-2e10-2e11
  BlowupClass u0 = catalog::embedding_s2_cp11().classes[0];
  BlowupClass expect = fiber_class(11) * Int(2) + exceptional_class(11, 1) -
                       exceptional_class(11, 10) * Int(2) -
                       exceptional_class(11, 11) * Int(2);
  CHECK(u0 == expect);
  CHECK(square(u0) == -5);

  BlowupClass V = catalog::embedding_s2_cp11().chamber_vectors[0].vector;
  CHECK(pair_classes(V, canonical_class(11)) == 18);
  CHECK(square(V) == 228);
}

TEST_CASE("pairing is symmetric, bilinear, and K is characteristic") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    std::size_t N = 3 + t % 9;
    BlowupClass x = random_class(rng, N), y = random_class(rng, N),
                z = random_class(rng, N);
    CHECK(pair_classes(x, y) == pair_classes(y, x));
    CHECK(pair_classes(x + y, z) == pair_classes(x, z) + pair_classes(y, z));
    Int parity = pair_classes(x, x) - pair_classes(x, canonical_class(N));
    CHECK(parity % 2 == 0);
  }
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(pair_classes(hyperplane_class(3), hyperplane_class(4)), Error);
}

TEST_CASE("the catalog embeddings verify") {
  for (auto maker : {catalog::embedding_s2_cp11, catalog::embedding_q_cp12,
                     catalog::embedding_u_cp13, catalog::embedding_k_cp12,
                     catalog::embedding_s2_knot}) {
    catalog::Embedding e = maker();
    CheckReport rep = verify_configuration(catalog::configuration_of(e));
    INFO(e.name);
    for (const auto& v : rep.violations) { INFO(v); }
    CHECK(rep.pass);
  }
}

TEST_CASE("the transposed center class of the seven-vertex embedding fails") {
  catalog::Embedding e = catalog::embedding_q_cp12();
  REQUIRE(e.transcribed_center.has_value());
  SphereConfiguration cfg = catalog::configuration_of(e);
  cfg.classes[0] = *e.transcribed_center;
  CheckReport rep = verify_configuration(cfg);
  CHECK(!rep.pass);
}

TEST_CASE("a perturbed arm class breaks orthogonality with its neighbour") {
  catalog::Embedding e = catalog::embedding_s2_cp11();
  SphereConfiguration cfg = catalog::configuration_of(e);
  // replace u1 = h-e1-e2-e3 by h-e1-e2-e4
  IntVec c(12, Int(0));
  c[0] = 1;
  c[1] = c[2] = c[4] = -1;
  cfg.classes[1] = BlowupClass(11, std::move(c));
  CheckReport rep = verify_configuration(cfg);
  CHECK(!rep.pass);
  bool mentions_u1_u2 = false;
  for (const auto& v : rep.violations)
    if (v.find("u1,u2") != std::string::npos) mentions_u1_u2 = true;
  CHECK(mentions_u1_u2);
}

TEST_CASE("every reducible fiber decomposes into the fiber class") {
  for (const auto& f : catalog::fiber_catalog()) {
    CheckReport rep = verify_fiber_decomposition(f.components);
    INFO(f.name);
    for (const auto& v : rep.violations) { INFO(v); }
    CHECK(rep.pass);
  }
}

TEST_CASE("a broken fiber decomposition fails") {
  auto fibers = catalog::fiber_catalog();
  FiberComponents bad = fibers[0].components;
  bad.back().second = 2;  // wrong multiplicity
  CHECK(!verify_fiber_decomposition(bad).pass);
}

TEST_CASE("chamber vectors verify (with repair where the print slips)") {
  // V over the five-sphere star: verbatim, no slip
  {
    catalog::Embedding e = catalog::embedding_s2_cp11();
    const auto& v = e.chamber_vectors[0];
    CHECK(!v.transcription_slip);
    ChamberVectorReport rep = verify_chamber_vector(v.vector, e.classes, +1);
    CHECK(rep.checks.pass);
    CHECK(rep.square == 228);
    CHECK(rep.pairing_K == 18);
  }
  // R over the seven-vertex embedding: one coefficient repaired
  {
    catalog::Embedding e = catalog::embedding_q_cp12();
    const auto& r = e.chamber_vectors[0];
    CHECK(r.transcription_slip);
    CHECK(!verify_chamber_vector(r.transcribed, e.classes, +1).checks.pass);
    ChamberVectorRepair fix = repair_chamber_vector(r.transcribed, e.classes, +1);
    CHECK(fix.repaired);
    CHECK(fix.vector == r.vector);
    CHECK(verify_chamber_vector(r.vector, e.classes, +1).checks.pass);
  }
  // R over the nine-vertex embedding: verbatim
  {
    catalog::Embedding e = catalog::embedding_u_cp13();
    const auto& r = e.chamber_vectors[0];
    CHECK(verify_chamber_vector(r.vector, e.classes, +1).checks.pass);
  }
  // V reused over the twelve-fold blow-up
  {
    catalog::Embedding e = catalog::embedding_k_cp12();
    CHECK(verify_chamber_vector(e.chamber_vectors[0].vector, e.classes, +1)
              .checks.pass);
  }
  // H over the knot-surgery embedding: expected sign -1, one repair
  {
    catalog::Embedding e = catalog::embedding_s2_knot();
    const auto& h = e.chamber_vectors[0];
    CHECK(h.transcription_slip);
    CHECK(!verify_chamber_vector(h.transcribed, e.classes, -1, e.canonical)
               .checks.pass);
    ChamberVectorRepair fix =
        repair_chamber_vector(h.transcribed, e.classes, -1, e.canonical);
    CHECK(fix.repaired);
    CHECK(fix.vector == h.vector);
  }
}

TEST_CASE("kodaira functional of the five-sphere star surgery") {
  catalog::Embedding e = catalog::embedding_s2_cp11();
  IntMat gram(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      gram.at(i, j) = pair_classes(e.classes[i], e.classes[j]);
  RatMat inv = invert_rational(gram);

  std::mt19937_64 rng(99);
  OmegaParams params = sample_admissible_params(rng, 11);
  KodairaReport rep = kodaira_report(e.classes, inv, params, Int(1));

  ParamFunctional expect;
  expect.a_coeff = 5;
  expect.b_coeffs.assign(11, make_rat(-3, 2));
  expect.b_coeffs[0] = -2;
  expect.b_coeffs[9] = -1;
  expect.b_coeffs[10] = -1;
  CHECK(rep.functional == expect);
  CHECK(rep.value > 0);
  CHECK(rep.dimension == KodairaDimension::Two);

  // positivity over many admissible samples
  bool all_positive = true;
  for (int trial = 0; trial < 10000; ++trial) {
    OmegaParams p = sample_admissible_params(rng, 11);
    if (!(rep.functional.evaluate(p) > 0)) all_positive = false;
  }
  CHECK(all_positive);
}

TEST_CASE("inadmissible parameters are rejected") {
  OmegaParams p;
  p.a = 1;
  p.b = {make_rat(1, 2), make_rat(3, 4)};  // not decreasing
  CHECK_THROWS_AS(p.require_admissible(), Error);
}

TEST_CASE("homeomorphism-type arithmetic from the constructions") {
  HomeoTypeReport a = homeo_type_report(14, -10, 6, -5, 3, -2);
  CHECK(a.chi == 11);
  CHECK(a.sigma == -7);
  CHECK(a.b2_plus == 1);
  CHECK(a.b2_minus == 8);
  CHECK(a.parity == "odd");

  HomeoTypeReport b = homeo_type_report(15, -11, 8, -7, 3, -2);
  CHECK(b.chi == 10);
  CHECK(b.sigma == -6);
  CHECK(b.parity == "odd");

  HomeoTypeReport c = homeo_type_report(16, -12, 10, -9, 3, -2);
  CHECK(c.chi == 9);
  CHECK(c.sigma == -5);
  CHECK(c.parity == "odd");

  HomeoTypeReport d = homeo_type_report(15, -11, 6, -5, 2, -1);
  CHECK(d.chi == 11);
  CHECK(d.sigma == -7);

  // identity surgery returns the ambient invariants
  HomeoTypeReport e = homeo_type_report(14, -10, 6, -5, 6, -5);
  CHECK(e.chi == 14);
  CHECK(e.sigma == -10);
}

TEST_CASE("surgery arithmetic is additive over composition") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int t = 0; t < 40; ++t) {
    long chi_amb = 10 + 2 * (t % 4), sig_amb = -8 + 2 * (t % 3);
    long cp1 = d(rng), sp1 = d(rng), cf1 = d(rng), sf1 = d(rng);
    long cp2 = d(rng), sp2 = d(rng), cf2 = d(rng), sf2 = d(rng);
    // keep chi - 2 + sigma even through both surgeries
    if ((cf1 - cp1 + sf1 - sp1) % 2 != 0) ++sf1;
    if ((cf2 - cp2 + sf2 - sp2) % 2 != 0) ++sf2;
    HomeoTypeReport first = homeo_type_report(chi_amb, sig_amb, cp1, sp1, cf1, sf1);
    HomeoTypeReport two_steps =
        homeo_type_report(first.chi, first.sigma, cp2, sp2, cf2, sf2);
    HomeoTypeReport composite = homeo_type_report(
        chi_amb, sig_amb, cp1 + cp2, sp1 + sp2, cf1 + cf2, sf1 + sf2);
    CHECK(two_steps.chi == composite.chi);
    CHECK(two_steps.sigma == composite.sigma);
  }
}
