#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "starsurgery/error.hpp"
#include "starsurgery/numbers.hpp"

namespace starsurgery {

/// Second-homology class of CP^2 # N barCP^2 in the basis (h; e_1..e_N).
/// Coefficients are stored exactly as written, the pairing carries the
/// signature: <x,y> = x_h y_h - sum x_i y_i.
struct BlowupClass {
  std::size_t N = 0;
  IntVec coeffs;  // size N+1, coeffs[0] is the h coefficient

  BlowupClass() = default;
  BlowupClass(std::size_t blowups, IntVec c);
  /// Convenience: {h, e1, ..., eN} from longs.
  static BlowupClass of(std::size_t blowups, std::initializer_list<long> c);

  const Int& h() const { return coeffs[0]; }
  const Int& e(std::size_t i) const { return coeffs[i]; }  // 1-based

  bool operator==(const BlowupClass&) const = default;

  BlowupClass operator+(const BlowupClass& o) const;
  BlowupClass operator-(const BlowupClass& o) const;
  BlowupClass operator*(const Int& c) const;
  BlowupClass operator-() const;

  std::string to_string() const;
};

Int pair_classes(const BlowupClass& x, const BlowupClass& y);
Int square(const BlowupClass& x);

/// -3h + e_1 + ... + e_N, the canonical class of the N-fold blow-up.
BlowupClass canonical_class(std::size_t N);

/// The elliptic fiber class 3h - (e_1 + ... + e_9); requires N >= 9.
BlowupClass fiber_class(std::size_t N);

/// h itself.
BlowupClass hyperplane_class(std::size_t N);

BlowupClass exceptional_class(std::size_t N, std::size_t i);

}  // namespace starsurgery
