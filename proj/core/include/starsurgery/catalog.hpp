#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starsurgery/gaymark.hpp"
#include "starsurgery/handlebody.hpp"
#include "starsurgery/homology_checks.hpp"
#include "starsurgery/plumbing.hpp"

namespace starsurgery::catalog {

// ---- Star plumbings ------------------------------------------------------

/// The star family: center of square -(i+3), i+2 arms of i-1 spheres of
/// square -2 (i = 1 is a single -4 sphere).
StarPlumbing star_family(int i);

/// The four named plumbings with the hole labels their printed open-book
/// words use, plus the printed position of the boundary-parallel twist.
struct LabeledPlumbing {
  std::string name;
  StarPlumbing graph;
  OuterTwistPosition outer;
  TwistWord printed_word;  // expected monodromy, letter for letter
};

LabeledPlumbing plumbing_S(int i);  // i = 1..4
LabeledPlumbing plumbing_Q();
LabeledPlumbing plumbing_U();
LabeledPlumbing plumbing_K();

// ---- Fillings ------------------------------------------------------------

/// The small filling of the star family: i+2 dotted circles, one -1-framed
/// handle over each pair.
Handlebody filling_T(int i);
Handlebody filling_R();
Handlebody filling_V();
Handlebody filling_L();

/// Filling monodromy words (for the plumbing/filling word equivalences).
TwistWord filling_word_T(int i);

// ---- Embeddings ----------------------------------------------------------

struct ChamberVectorEntry {
  BlowupClass transcribed;       // as printed
  BlowupClass vector;            // repaired when the print has a slip
  bool transcription_slip = false;
  int expected_sign_K = +1;
};

struct Embedding {
  std::string name;
  std::size_t N = 0;                       // ambient blow-up count
  long chi_ambient = 0;
  long sigma_ambient = 0;
  std::vector<BlowupClass> classes;        // vertex order of the graph
  std::optional<BlowupClass> transcribed_center;  // printed center when it has a slip
  StarPlumbing graph;
  bool check_adjunction = true;
  std::optional<BlowupClass> canonical;    // nonstandard canonical class (knot surgery)
  std::vector<ChamberVectorEntry> chamber_vectors;
};

Embedding embedding_s2_cp11();   // five-sphere star in the 11-fold blow-up
Embedding embedding_q_cp12();    // Q in the 12-fold blow-up
Embedding embedding_u_cp13();    // U in the 13-fold blow-up
Embedding embedding_k_cp12();    // K in the 12-fold blow-up
Embedding embedding_s2_knot();   // five-sphere star after knot surgery, N = 10

SphereConfiguration configuration_of(const Embedding& e);

// ---- Elliptic fibration fibers -------------------------------------------

struct NamedFiber {
  std::string name;
  FiberComponents components;
};

/// All reducible singular fibers of the three fibrations, N = 9.
std::vector<NamedFiber> fiber_catalog();

// ---- Spin-c reference data -----------------------------------------------

/// Reduced d values over the five-sphere star plumbing, as certified by
/// exact enumeration (eight values).
std::vector<Rat> reduced_d_values_star();
/// The transcribed nine-value version of the same set; three of its entries
/// are not attained by any characteristic class on this lattice.
std::vector<Rat> reduced_d_values_star_printed();
/// Reduced d values over the filling form (four values) = the allowed set.
std::vector<Rat> reduced_d_values_filling();
/// The 24 extendable orbit representatives, as pairing tuples.
std::vector<IntVec> phi_reference();

/// Intersection form of the small filling of the five-sphere star.
IntMat filling_t2_form();

}  // namespace starsurgery::catalog
