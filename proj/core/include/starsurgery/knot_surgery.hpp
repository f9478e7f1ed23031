#pragma once

#include "starsurgery/homeo.hpp"
#include "starsurgery/homology_checks.hpp"

namespace starsurgery {

/// Homological bookkeeping for the knot-surgery family: the twist parameter
/// n >= 2 only scales the invariant count, every check below is exact
/// class arithmetic.
struct KnotSurgeryReport {
  long n = 0;
  CheckReport configuration;        // the star embedding after knot surgery
  CheckReport chamber;              // the common-chamber vector conditions
  bool chamber_transcription_slip = false;
  bool no_wall = false;             // K.H < 0 and K.h < 0
  HomeoTypeReport homeo;            // (chi, sigma, parity) of the result
  Rat d_ambient;                    // expected dimension upstairs
  Rat d_canonical;                  // expected dimension downstairs
  Rat restriction_square_canonical; // (K restricted to the plumbing)^2
  Rat restriction_square_other;     // (P restricted to the plumbing)^2
  Rat filling_square_max;           // max L^2 over characteristic filling classes
  Rat minimality_bound_derived;     // sup of d over candidate descents
  Rat minimality_bound_printed;     // the looser printed constant
  bool minimal = false;
  bool pass = false;
};

KnotSurgeryReport knot_surgery_checks(long n);

}  // namespace starsurgery
