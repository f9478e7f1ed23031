#pragma once

#include <random>
#include <string>
#include <vector>

#include "starsurgery/blowup.hpp"
#include "starsurgery/matrix.hpp"

namespace starsurgery {

/// Symplectic-form parameters on CP^2 # N barCP^2: omega = a h - sum b_i e_i
/// with a > b_1 > ... > b_N > 0 and a > sum b_i.
struct OmegaParams {
  Rat a;
  RatVec b;

  bool admissible() const;
  /// Throws Error(InadmissibleParams) when the inequalities fail.
  void require_admissible() const;
};

OmegaParams sample_admissible_params(std::mt19937_64& rng, std::size_t N);

/// Exact linear functional c_a * a + sum c_i * b_i of the form parameters.
struct ParamFunctional {
  Rat a_coeff;
  RatVec b_coeffs;

  bool operator==(const ParamFunctional&) const = default;

  Rat evaluate(const OmegaParams& p) const;
  std::string to_string() const;
};

enum class KodairaDimension { MinusInfinity, Zero, One, Two };

const char* kodaira_dimension_name(KodairaDimension k);

struct KodairaReport {
  ParamFunctional functional;   // K_X . omega_X as a functional of (a, b)
  Rat value;                    // evaluated at the given parameters
  Int k_squared;                // K_X^2 = 3 sigma + 2 chi, supplied by caller
  KodairaDimension dimension;
};

/// K_X . omega_X = K.omega - K|_S . omega|_S where the restriction is
/// computed through the inverse Gram matrix of the configuration, and the
/// Kodaira dimension is classified from sign(K_X.omega_X) and sign(K_X^2).
KodairaReport kodaira_report(const std::vector<BlowupClass>& config_classes,
                             const RatMat& gram_inverse,
                             const OmegaParams& params,
                             const Int& k_squared);

}  // namespace starsurgery
