#pragma once

#include <string>

#include "starsurgery/numbers.hpp"

namespace starsurgery {

/// Euler characteristic / signature bookkeeping for cut-and-paste surgery:
/// the ambient invariant loses the plumbing's share and gains the filling's.
struct HomeoTypeReport {
  long chi = 0;
  long sigma = 0;
  long b2_plus = 0;
  long b2_minus = 0;
  /// "odd" when a rank/signature count rules out an even intersection form
  /// (b2+ = 1 and b2- not 1 mod 8); "undetermined" otherwise.
  std::string parity;
};

HomeoTypeReport homeo_type_report(long chi_ambient, long sigma_ambient,
                                  long chi_plumbing, long sigma_plumbing,
                                  long chi_filling, long sigma_filling);

}  // namespace starsurgery
