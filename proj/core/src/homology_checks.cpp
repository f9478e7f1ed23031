#include "starsurgery/homology_checks.hpp"

#include <sstream>

#include "starsurgery/matrix.hpp"

namespace starsurgery {

namespace {

std::string vert_name(std::size_t v) { return "u" + std::to_string(v); }

}  // namespace

CheckReport verify_configuration(const SphereConfiguration& cfg) {
  CheckReport rep;
  cfg.graph.validate();
  std::size_t n = cfg.graph.vertex_count();
  if (cfg.classes.size() != n) {
    rep.fail("class count " + std::to_string(cfg.classes.size()) +
             " does not match vertex count " + std::to_string(n));
    return rep;
  }
  IntMat g = cfg.graph.gram();
  for (std::size_t v = 0; v < n; ++v) {
    Int sq = square(cfg.classes[v]);
    if (sq != g.at(v, v))
      rep.fail("square of " + vert_name(v) + " is " + sq.get_str() +
               ", weight is " + g.at(v, v).get_str());
  }
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = v + 1; w < n; ++w) {
      Int p = pair_classes(cfg.classes[v], cfg.classes[w]);
      if (p != g.at(v, w))
        rep.fail("<" + vert_name(v) + "," + vert_name(w) + "> = " + p.get_str() +
                 ", adjacency requires " + g.at(v, w).get_str());
    }
  if (cfg.adjunction_class) {
    for (std::size_t v = 0; v < n; ++v) {
      Int adj = pair_classes(*cfg.adjunction_class, cfg.classes[v]) +
                square(cfg.classes[v]);
      if (adj != -2)
        rep.fail("adjunction for " + vert_name(v) + " gives " + adj.get_str() +
                 " instead of -2");
    }
  }
  return rep;
}

CheckReport verify_fiber_decomposition(const FiberComponents& components) {
  CheckReport rep;
  if (components.empty()) {
    rep.fail("no components");
    return rep;
  }
  std::size_t N = components.front().first.N;
  if (N < 9) {
    rep.fail("components must live in a blow-up with N >= 9");
    return rep;
  }
  BlowupClass sum(N, IntVec(N + 1, Int(0)));
  BlowupClass K = canonical_class(N);
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& [cls, mult] = components[i];
    sum = sum + cls * mult;
    Int sq = square(cls);
    if (sq != -2)
      rep.fail("component " + std::to_string(i) + " has square " + sq.get_str());
    Int adj = pair_classes(K, cls) + sq;
    if (adj != -2)
      rep.fail("component " + std::to_string(i) + " fails sphere adjunction");
  }
  if (!(sum == fiber_class(N)))
    rep.fail("components sum to " + sum.to_string() + ", not the fiber class");
  return rep;
}

ChamberVectorReport verify_chamber_vector(const BlowupClass& W,
                                          const std::vector<BlowupClass>& classes,
                                          int sign_of_KW,
                                          const std::optional<BlowupClass>& K_opt) {
  ChamberVectorReport rep;
  BlowupClass K = K_opt ? *K_opt : canonical_class(W.N);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    Int p = pair_classes(W, classes[i]);
    if (p != 0)
      rep.checks.fail("<W," + vert_name(i) + "> = " + p.get_str() + ", expected 0");
  }
  rep.square = square(W);
  if (rep.square <= 0)
    rep.checks.fail("W.W = " + rep.square.get_str() + " is not positive");
  rep.pairing_h = pair_classes(W, hyperplane_class(W.N));
  if (rep.pairing_h <= 0)
    rep.checks.fail("W.h = " + rep.pairing_h.get_str() + " is not positive");
  rep.pairing_K = pair_classes(W, K);
  if (sign(rep.pairing_K) != sign_of_KW)
    rep.checks.fail("sign(W.K) = " + std::to_string(sign(rep.pairing_K)) +
                    ", expected " + std::to_string(sign_of_KW));
  return rep;
}

ChamberVectorRepair repair_chamber_vector(const BlowupClass& W,
                                          const std::vector<BlowupClass>& classes,
                                          int sign_of_KW,
                                          const std::optional<BlowupClass>& K_opt) {
  ChamberVectorRepair out;
  out.vector = W;
  if (verify_chamber_vector(W, classes, sign_of_KW, K_opt).checks.pass) {
    out.note = "vector already satisfies all conditions";
    return out;
  }

  // Single-coefficient repairs first: adjusting coordinate j by delta shifts
  // <W,u> by delta * s_j(u), with s_j the signed coordinate of u.
  auto coord_pairing = [](const BlowupClass& u, std::size_t j) -> Int {
    return j == 0 ? u.coeffs[0] : Int(-u.coeffs[j]);
  };
  std::optional<BlowupClass> best;
  Int best_delta_abs;
  for (std::size_t j = 0; j <= W.N; ++j) {
    std::optional<Int> delta;
    bool ok = true;
    for (const auto& u : classes) {
      Int v = pair_classes(W, u);
      Int s = coord_pairing(u, j);
      if (s == 0) {
        if (v != 0) { ok = false; break; }
        continue;
      }
      if (v % s != 0) { ok = false; break; }
      Int d = -v / s;
      if (delta && *delta != d) { ok = false; break; }
      delta = d;
    }
    if (!ok || !delta || *delta == 0) continue;
    BlowupClass cand = W;
    cand.coeffs[j] += *delta;
    if (!verify_chamber_vector(cand, classes, sign_of_KW, K_opt).checks.pass)
      continue;
    Int da = abs(*delta);
    if (!best || da < best_delta_abs) {
      best = cand;
      best_delta_abs = da;
      out.note = "adjusted coordinate " + (j == 0 ? std::string("h") : "e" + std::to_string(j)) +
                 " by " + delta->get_str();
    }
  }
  if (best) {
    out.repaired = true;
    out.vector = *best;
    return out;
  }

  // Rational fallback: project W onto the orthogonal complement of the
  // classes (Euclidean least squares on coordinates), then clear
  // denominators.  A = constraint matrix with rows s(u).
  std::size_t m = classes.size(), dim = W.N + 1;
  IntMat A(m, dim);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      A.at(i, j) = coord_pairing(classes[i], j);
  IntMat AAt = A * A.transpose();
  IntVec Aw(m, Int(0));
  for (std::size_t i = 0; i < m; ++i) Aw[i] = pair_classes(W, classes[i]);
  RatVec y;
  try {
    y = solve_rational(AAt, Aw);
  } catch (const Error&) {
    out.note = "orthogonality system is degenerate; no repair found";
    return out;
  }
  RatVec corrected(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    Rat c(W.coeffs[j]);
    for (std::size_t i = 0; i < m; ++i) c -= y[i] * Rat(A.at(i, j));
    corrected[j] = c;
  }
  Int lcm(1);
  for (const auto& c : corrected) {
    Int l;
    mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    lcm = l;
  }
  BlowupClass cand(W.N, IntVec(dim, Int(0)));
  for (std::size_t j = 0; j < dim; ++j) cand.coeffs[j] = rat_num(corrected[j] * Rat(lcm));
  if (verify_chamber_vector(cand, classes, sign_of_KW, K_opt).checks.pass) {
    out.repaired = true;
    out.vector = cand;
    out.note = "projected onto the orthogonal complement and cleared denominators";
  } else {
    out.note = "projection failed the sign conditions; no repair found";
  }
  return out;
}

}  // namespace starsurgery
