#include "starsurgery/braid_normal_form.hpp"

#include <algorithm>
#include <numeric>

namespace starsurgery {

namespace {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm delta_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = static_cast<std::uint8_t>(n - 1 - i);
  return p;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != i) return false;
  return true;
}

bool is_delta(const Perm& p) {
  std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    if (p[i] != n - 1 - i) return false;
  return true;
}

Perm inverse_perm(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<std::uint8_t>(i);
  return q;
}

// tau(a) = Delta a Delta^{-1}; on permutations conjugation by the reversal.
Perm tau(const Perm& a) {
  std::size_t n = a.size();
  Perm t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<std::uint8_t>(n - 1 - a[n - 1 - i]);
  return t;
}

// The strands starting in slots g, g+1 cross in b.
inline bool in_starting_set(const Perm& b, int g) { return b[g] > b[g + 1]; }

// The strands ending in slots g, g+1 cross in a.
inline bool in_finishing_set(const Perm& ainv, int g) { return ainv[g] > ainv[g + 1]; }

// Moves initial crossings of b into a until S(b) is contained in F(a).
// Returns true when anything moved.  ainv is kept consistent with a.
bool make_left_weighted(Perm& a, Perm& ainv, Perm& b) {
  int n = static_cast<int>(a.size());
  bool changed = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int g = 0; g + 1 < n; ++g) {
      if (!in_starting_set(b, g) || in_finishing_set(ainv, g)) continue;
      // a <- a.sigma_g : swap the end slots g, g+1
      std::swap(ainv[g], ainv[g + 1]);
      a[ainv[g]] = static_cast<std::uint8_t>(g);
      a[ainv[g + 1]] = static_cast<std::uint8_t>(g + 1);
      // b <- sigma_g^{-1}.b : swap the start slots g, g+1
      std::swap(b[g], b[g + 1]);
      progress = true;
      changed = true;
    }
  }
  return changed;
}

}  // namespace

std::vector<long> BraidNormalForm::invariant() const {
  std::vector<long> out;
  out.reserve(3 + factors.size() * strands);
  out.push_back(strands);
  out.push_back(delta_power);
  out.push_back(static_cast<long>(factors.size()));
  for (const Perm& f : factors)
    for (std::uint8_t x : f) out.push_back(x);
  return out;
}

BraidNormalForm braid_normal_form(const BraidWord& word) {
  int n = word.strands;
  if (n < 1)
    throw Error(ErrorCode::DimensionMismatch, "braid needs at least one strand");
  BraidNormalForm nf;
  nf.strands = n;

  // Rewrite the word as Delta^k times permutation braids: a positive letter
  // is itself simple, a negative letter sigma_g^{-1} equals
  // Delta^{-1} (Delta sigma_g^{-1}) and the Delta^{-1} shifts left through
  // tau.
  std::vector<Perm> factors;
  factors.reserve(word.letters.size());
  long delta = 0;
  const Perm dperm = delta_perm(n);
  for (int letter : word.letters) {
    int g = std::abs(letter) - 1;
    if (g < 0 || g >= n - 1)
      throw Error(ErrorCode::DimensionMismatch, "braid letter out of range");
    if (letter > 0) {
      Perm s = identity_perm(n);
      std::swap(s[g], s[g + 1]);
      factors.push_back(std::move(s));
    } else {
      --delta;
      for (Perm& f : factors) f = tau(f);
      // Delta sigma_g^{-1}: the reversal with its values g, g+1 exchanged,
      // i.e. entries at slots n-2-g and n-1-g swapped.
      Perm r = dperm;
      std::swap(r[n - 2 - g], r[n - 1 - g]);
      factors.push_back(std::move(r));
    }
  }

  // Local left-weighting passes to the unique fixedpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    // drop identities
    std::size_t out = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (is_identity(factors[i])) {
        changed = true;
        continue;
      }
      if (out != i) factors[out] = std::move(factors[i]);
      ++out;
    }
    factors.resize(out);
    for (std::size_t j = 0; j + 1 < factors.size(); ++j) {
      Perm ainv = inverse_perm(factors[j]);
      if (make_left_weighted(factors[j], ainv, factors[j + 1])) changed = true;
    }
  }

  // Delta factors can only survive as a prefix; merge them into the power.
  std::size_t lead = 0;
  while (lead < factors.size() && is_delta(factors[lead])) {
    ++delta;
    ++lead;
  }
  nf.delta_power = delta;
  nf.factors.assign(factors.begin() + lead, factors.end());
  return nf;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw Error(ErrorCode::DimensionMismatch, "braid strand counts differ");
  return braid_normal_form(a) == braid_normal_form(b);
}

}  // namespace starsurgery
