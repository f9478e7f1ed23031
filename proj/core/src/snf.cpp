#include "starsurgery/snf.hpp"

#include <sstream>

namespace starsurgery {

namespace {

// Position of an entry with minimal nonzero absolute value in D[t.., t..],
// or false when the submatrix vanishes.
bool find_pivot(const IntMat& D, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best;
  for (std::size_t i = t; i < D.rows(); ++i)
    for (std::size_t j = t; j < D.cols(); ++j) {
      if (D.at(i, j) == 0) continue;
      Int a = abs(D.at(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SmithResult smith_normal_form(const IntMat& M) {
  SmithResult res;
  res.D = M;
  res.U = IntMat::identity(M.rows());
  res.V = IntMat::identity(M.cols());
  IntMat& D = res.D;
  IntMat& U = res.U;
  IntMat& V = res.V;

  std::size_t t = 0;
  std::size_t limit = std::min(M.rows(), M.cols());
  while (t < limit) {
    std::size_t pi, pj;
    if (!find_pivot(D, t, pi, pj)) break;
    D.swap_rows(t, pi);
    U.swap_rows(t, pi);
    D.swap_cols(t, pj);
    V.swap_cols(t, pj);

    bool dirty = true;
    while (dirty) {
      dirty = false;
      // Clear column t below the pivot.
      for (std::size_t i = t + 1; i < D.rows(); ++i) {
        if (D.at(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), D.at(i, t).get_mpz_t(), D.at(t, t).get_mpz_t());
        D.add_row(i, t, -q);
        U.add_row(i, t, -q);
        if (D.at(i, t) != 0) {
          // Remainder is a smaller pivot candidate.
          D.swap_rows(t, i);
          U.swap_rows(t, i);
          dirty = true;
        }
      }
      // Clear row t right of the pivot.
      for (std::size_t j = t + 1; j < D.cols(); ++j) {
        if (D.at(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), D.at(t, j).get_mpz_t(), D.at(t, t).get_mpz_t());
        D.add_col(j, t, -q);
        V.add_col(j, t, -q);
        if (D.at(t, j) != 0) {
          D.swap_cols(t, j);
          V.swap_cols(t, j);
          dirty = true;
        }
      }
    }

    // Force the divisibility chain: fold any non-divisible entry into row t.
    bool repeat = false;
    for (std::size_t i = t + 1; i < D.rows() && !repeat; ++i)
      for (std::size_t j = t + 1; j < D.cols() && !repeat; ++j)
        if (D.at(i, j) % D.at(t, t) != 0) {
          D.add_row(t, i, Int(1));
          U.add_row(t, i, Int(1));
          repeat = true;
        }
    if (repeat) continue;  // re-run clearing at the same t

    if (D.at(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
    ++t;
  }

  for (std::size_t k = 0; k < limit; ++k) {
    if (D.at(k, k) == 0) continue;
    ++res.rank;
    if (D.at(k, k) != 1) res.invariant_factors.push_back(D.at(k, k));
  }
  return res;
}

Int AbelianGroup::order() const {
  if (free_rank > 0) return Int(0);
  Int o(1);
  for (const Int& t : torsion) o *= t;
  return o;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < free_rank; ++i) {
    if (!first) os << " + ";
    os << "Z";
    first = false;
  }
  for (const Int& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t.get_str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AbelianGroup cokernel(const IntMat& M) {
  SmithResult s = smith_normal_form(M);
  AbelianGroup g;
  g.free_rank = M.rows() - s.rank;
  g.torsion = s.invariant_factors;
  return g;
}

std::vector<IntVec> kernel_basis(const IntMat& M) {
  SmithResult s = smith_normal_form(M);
  // M V = U^{-1} D, so column j of V is in the kernel iff the j-th diagonal
  // entry of D vanishes (or j is past the diagonal).
  std::vector<IntVec> basis;
  for (std::size_t j = 0; j < M.cols(); ++j) {
    bool zero = j >= std::min(M.rows(), M.cols()) || s.D.at(j, j) == 0;
    if (!zero) continue;
    IntVec v(M.cols());
    for (std::size_t i = 0; i < M.cols(); ++i) v[i] = s.V.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace starsurgery
