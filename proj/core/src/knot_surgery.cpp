#include "starsurgery/knot_surgery.hpp"

#include "starsurgery/catalog.hpp"
#include "starsurgery/matrix.hpp"
#include "starsurgery/quadform.hpp"

namespace starsurgery {

KnotSurgeryReport knot_surgery_checks(long n) {
  if (n < 2)
    throw Error(ErrorCode::InadmissibleParams, "knot surgery family needs n >= 2");
  KnotSurgeryReport rep;
  rep.n = n;

  catalog::Embedding emb = catalog::embedding_s2_knot();
  rep.configuration = verify_configuration(catalog::configuration_of(emb));

  const BlowupClass K = *emb.canonical;
  const auto& hvec = emb.chamber_vectors.front();
  rep.chamber_transcription_slip = hvec.transcription_slip;
  ChamberVectorReport ch =
      verify_chamber_vector(hvec.vector, emb.classes, hvec.expected_sign_K, K);
  rep.chamber = ch.checks;

  BlowupClass hcls = hyperplane_class(emb.N);
  rep.no_wall = pair_classes(K, hvec.vector) < 0 && pair_classes(K, hcls) < 0;

  // chi/sigma arithmetic for the surgered manifold
  rep.homeo = homeo_type_report(emb.chi_ambient, emb.sigma_ambient, 6, -5, 3, -2);

  // d upstairs: (K^2 - 3 sigma - 2 chi)/4
  rep.d_ambient = make_rat(square(K) - 3 * Int(emb.sigma_ambient) -
                               2 * Int(emb.chi_ambient),
                           4);

  // restriction to the plumbing through the inverse Gram
  IntMat gram(5, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      gram.at(i, j) = pair_classes(emb.classes[i], emb.classes[j]);
  RatMat inv = invert_rational(gram);
  auto restricted_square = [&](const BlowupClass& x) {
    RatVec pair(5);
    for (std::size_t i = 0; i < 5; ++i) pair[i] = Rat(pair_classes(x, emb.classes[i]));
    Rat s(0);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) s += pair[i] * inv.at(i, j) * pair[j];
    return s;
  };
  rep.restriction_square_canonical = restricted_square(K);

  // d on the surgered manifold with the canonical class restricting to zero
  // on the filling side:
  // (K^2 - (K|_plumbing)^2 + 0 - 3 sigma' - 2 chi')/4
  rep.d_canonical = (Rat(square(K)) - rep.restriction_square_canonical -
                     Rat(3 * rep.homeo.sigma) - Rat(2 * rep.homeo.chi)) /
                    4;

  // the other basic class up to sign: opposite fiber direction, +e10
  BlowupClass P = K;
  P.coeffs[10] = 1;
  rep.restriction_square_other = restricted_square(P);

  // Any descent of P has d = (P^2 - (P|)^2 + L^2 - 3 sigma' - 2 chi')/4 with
  // L characteristic on the negative definite filling form, so L^2 <= 0 and
  // L = 0 is characteristic: the supremum sits at L^2 = 0.
  IntMat form = catalog::filling_t2_form();
  if (quadratic_form_profile(form).definiteness != Definiteness::NegativeDefinite)
    throw Error(ErrorCode::NotNegativeDefinite, "filling form must be negative definite");
  for (std::size_t i = 0; i < form.rows(); ++i)
    if (form.at(i, i) % 2 != 0)
      throw Error(ErrorCode::NotNegativeDefinite,
                  "zero must be characteristic for the filling form");
  rep.filling_square_max = 0;
  rep.minimality_bound_derived =
      (Rat(square(P)) - rep.restriction_square_other + rep.filling_square_max -
       Rat(3 * rep.homeo.sigma) - Rat(2 * rep.homeo.chi)) /
      4;
  // The printed bound carries a stray constant but certifies the same sign.
  rep.minimality_bound_printed = make_rat(-13, 6) + rep.filling_square_max / 4;
  rep.minimal = rep.minimality_bound_derived < 0 && rep.minimality_bound_printed < 0;

  rep.pass = rep.configuration.pass && rep.chamber.pass && rep.no_wall &&
             rep.homeo.chi == 10 && rep.homeo.sigma == -6 &&
             rep.homeo.parity == "odd" && rep.d_ambient == 0 &&
             rep.d_canonical == 0 && rep.minimal;
  return rep;
}

}  // namespace starsurgery
