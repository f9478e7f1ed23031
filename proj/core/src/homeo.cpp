#include "starsurgery/homeo.hpp"

#include "starsurgery/error.hpp"

namespace starsurgery {

HomeoTypeReport homeo_type_report(long chi_ambient, long sigma_ambient,
                                  long chi_plumbing, long sigma_plumbing,
                                  long chi_filling, long sigma_filling) {
  HomeoTypeReport rep;
  rep.chi = chi_ambient - chi_plumbing + chi_filling;
  rep.sigma = sigma_ambient - sigma_plumbing + sigma_filling;
  long b2 = rep.chi - 2;  // simply connected bookkeeping: b1 = b3 = 0
  if ((b2 + rep.sigma) % 2 != 0)
    throw Error(ErrorCode::DimensionMismatch, "chi and sigma have mixed parity");
  rep.b2_plus = (b2 + rep.sigma) / 2;
  rep.b2_minus = (b2 - rep.sigma) / 2;
  // An even indefinite form with b2+ = 1 is H + k E8, forcing
  // b2- = 1 mod 8.  Anything else with b2+ = 1 must be odd.
  bool even_possible =
      rep.b2_plus != 1 || ((rep.b2_minus % 8) + 8) % 8 == 1;
  rep.parity = even_possible ? "undetermined" : "odd";
  return rep;
}

}  // namespace starsurgery
