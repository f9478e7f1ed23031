#include <doctest.h>

#include <random>

#include "starsurgery/matrix.hpp"
#include "starsurgery/quadform.hpp"
#include "starsurgery/snf.hpp"

using namespace starsurgery;

namespace {

IntMat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
  return m;
}

// Product of random elementary matrices, so det = ±1.
IntMat random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMat u = IntMat::identity(n);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  for (int step = 0; step < 12; ++step) {
    std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    u.add_row(a, b, Int(coef(rng)));
  }
  return u;
}

IntMat congruent(const IntMat& g, const IntMat& u) { return u.transpose() * g * u; }

}  // namespace

TEST_CASE("smith normal form on diagonal presentation") {
  IntMat m{{2, 0, 0}, {0, 2, 0}, {0, 0, 12}};
  SmithResult s = smith_normal_form(m);
  REQUIRE(s.invariant_factors.size() == 3);
  CHECK(s.invariant_factors[0] == 2);
  CHECK(s.invariant_factors[1] == 2);
  CHECK(s.invariant_factors[2] == 12);
  CHECK(s.U * m * s.V == s.D);
}

TEST_CASE("smith normal form of identity has trivial cokernel") {
  SmithResult s = smith_normal_form(IntMat::identity(3));
  CHECK(s.invariant_factors.empty());
  CHECK(cokernel(IntMat::identity(3)) == AbelianGroup{});
}

TEST_CASE("cochain presentation of the four-hole filling has cokernel Z+Z+Z/2") {
  // Duals of the 1-handles mapped into the six 2-handle duals: the column
  // for generator i has a 1 in every pair {i,l}. Pairs ordered
  // 12,13,14,23,24,34.
  IntMat d(6, 4);
  int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 4; ++c)
      d.at(r, c) = (pairs[r][0] == c || pairs[r][1] == c) ? 1 : 0;
  AbelianGroup g = cokernel(d);
  CHECK(g.free_rank == 2);
  REQUIRE(g.torsion.size() == 1);
  CHECK(g.torsion[0] == 2);
  CHECK(g.to_string() == "Z + Z + Z/2");
}

TEST_CASE("snf witnesses and divisibility chain on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial / 2) % 5;
    IntMat m = random_matrix(rng, r, c, -9, 9);
    SmithResult s = smith_normal_form(m);
    CHECK(s.U * m * s.V == s.D);
    CHECK(abs(s.U.determinant()) == 1);
    CHECK(abs(s.V.determinant()) == 1);
    CHECK(s.D.is_diagonal());
    for (std::size_t k = 0; k + 1 < std::min(r, c); ++k) {
      if (s.D.at(k + 1, k + 1) == 0) continue;
      CHECK(s.D.at(k + 1, k + 1) % s.D.at(k, k) == 0);
    }
  }
}

TEST_CASE("solve against the inverse Gram of the five-sphere star") {
  IntMat p{{-5, 1, 1, 1, 1},
           {1, -2, 0, 0, 0},
           {1, 0, -2, 0, 0},
           {1, 0, 0, -2, 0},
           {1, 0, 0, 0, -2}};
  RatVec x = solve_rational(p, IntVec{Int(1), Int(0), Int(0), Int(0), Int(0)});
  CHECK(x[0] == make_rat(-4, 12));
  CHECK(x[1] == make_rat(-2, 12));
  CHECK(x[2] == make_rat(-1, 6));
  CHECK(x[3] == make_rat(-1, 6));
  CHECK(x[4] == make_rat(-1, 6));

  RatMat inv = invert_rational(p);
  long expected[5][5] = {{4, 2, 2, 2, 2},
                         {2, 7, 1, 1, 1},
                         {2, 1, 7, 1, 1},
                         {2, 1, 1, 7, 1},
                         {2, 1, 1, 1, 7}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(inv.at(i, j) == make_rat(-expected[i][j], 12));
}

TEST_CASE("solve identity and a 2x2 system exactly") {
  IntVec t{Int(4), Int(-7), Int(9)};
  RatVec x = solve_rational(IntMat::identity(3), t);
  for (int i = 0; i < 3; ++i) CHECK(x[i] == Rat(t[i]));

  IntMat m{{-4, 2}, {2, -4}};
  RatVec y = solve_rational(m, IntVec{Int(2), Int(0)});
  CHECK(y[0] == make_rat(-2, 3));
  CHECK(y[1] == make_rat(-1, 3));
  // multiply back
  RatMat rm(m);
  RatVec back = rm * y;
  CHECK(back[0] == 2);
  CHECK(back[1] == 0);
}

TEST_CASE("singular systems are rejected") {
  IntMat m{{1, 2}, {2, 4}};
  CHECK_THROWS_AS(solve_rational(m, IntVec{Int(1), Int(1)}), Error);
}

TEST_CASE("solve result re-multiplies exactly on random nonsingular systems") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 6;
    IntMat m = random_matrix(rng, n, n, -6, 6);
    if (m.determinant() == 0) continue;
    IntMat rhs = random_matrix(rng, n, 1, -9, 9);
    IntVec t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = rhs.at(i, 0);
    RatVec x = solve_rational(m, t);
    RatVec back = RatMat(m) * x;
    for (std::size_t i = 0; i < n; ++i) CHECK(back[i] == Rat(t[i]));
  }
}

TEST_CASE("signature profiles of the catalog forms") {
  QuadraticFormProfile p = quadratic_form_profile(IntMat{{-4, 2}, {2, -4}});
  CHECK(p.b_plus == 0);
  CHECK(p.b_minus == 2);
  CHECK(p.definiteness == Definiteness::NegativeDefinite);

  CHECK(quadratic_form_profile(IntMat{{-10, -23}, {-23, -79}}).definiteness ==
        Definiteness::NegativeDefinite);
  CHECK(quadratic_form_profile(IntMat{{-30, 5}, {5, -49}}).definiteness ==
        Definiteness::NegativeDefinite);
  CHECK(quadratic_form_profile(IntMat{{1}}).definiteness ==
        Definiteness::PositiveDefinite);
  CHECK(quadratic_form_profile(IntMat{{0, 1}, {1, 0}}).definiteness ==
        Definiteness::Indefinite);
  CHECK(quadratic_form_profile(IntMat{{1, 1}, {1, 1}}).definiteness ==
        Definiteness::Degenerate);
}

TEST_CASE("profile rejects non-symmetric input") {
  CHECK_THROWS_AS(quadratic_form_profile(IntMat{{0, 1}, {2, 0}}), Error);
}

TEST_CASE("signature is invariant under unimodular congruence") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 4;
    IntMat m = random_matrix(rng, n, n, -4, 4);
    // symmetrise
    IntMat g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g.at(i, j) = m.at(i, j) + m.at(j, i);
    QuadraticFormProfile base = quadratic_form_profile(g);
    IntMat u = random_unimodular(rng, n);
    QuadraticFormProfile conj = quadratic_form_profile(congruent(g, u));
    CHECK(base == conj);
  }
}

TEST_CASE("kernel basis spans the kernel") {
  IntMat d(4, 6);
  int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (int c = 0; c < 6; ++c) {
    d.at(pairs[c][0], c) = 1;
    d.at(pairs[c][1], c) = 1;
  }
  auto basis = kernel_basis(d);
  REQUIRE(basis.size() == 2);
  for (const auto& v : basis) {
    IntVec img = d * v;
    for (const Int& x : img) CHECK(x == 0);
  }
}
