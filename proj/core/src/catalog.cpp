#include "starsurgery/catalog.hpp"

namespace starsurgery::catalog {

namespace {

BlowupClass cls(std::size_t N, std::initializer_list<long> coeffs) {
  return BlowupClass::of(N, coeffs);
}

// h - e_a - e_b - e_c style helper.
BlowupClass line(std::size_t N, std::initializer_list<int> es) {
  IntVec c(N + 1, Int(0));
  c[0] = 1;
  for (int e : es) c[e] = -1;
  return BlowupClass(N, std::move(c));
}

BlowupClass diff(std::size_t N, int a, int b) {
  IntVec c(N + 1, Int(0));
  c[a] = 1;
  c[b] = -1;
  return BlowupClass(N, std::move(c));
}

}  // namespace

StarPlumbing star_family(int i) {
  if (i < 1) throw Error(ErrorCode::UnsupportedShape, "family index must be >= 1");
  StarPlumbing g;
  g.center_weight = -(i + 3);
  if (i > 1)
    g.arms.assign(i + 2, std::vector<long>(i - 1, -2));
  return g;
}

LabeledPlumbing plumbing_S(int i) {
  if (i < 1 || i > 4)
    throw Error(ErrorCode::UnsupportedShape, "catalog keeps the star family for i = 1..4");
  LabeledPlumbing p;
  p.name = "S" + std::to_string(i);
  p.graph = star_family(i);
  p.outer = OuterTwistPosition::First;
  int m = i + 2;
  std::vector<int> all;
  for (int a = 1; a <= m; ++a) all.push_back(a);
  p.printed_word.holes = m;
  p.printed_word.letters.push_back({ConvexCurve(all), 1});
  for (int a = 1; a <= m; ++a)
    p.printed_word.letters.push_back({ConvexCurve({a}), i});
  return p;
}

LabeledPlumbing plumbing_Q() {
  LabeledPlumbing p;
  p.name = "Q";
  p.graph.center_weight = -5;
  p.graph.arms = {{-3}, {-2}, {-2, -3}, {-2, -2}};
  p.graph.arm_hole_labels = {{1, 2}, {3}, {4, 5}, {6}};
  p.outer = OuterTwistPosition::First;
  p.printed_word = word(6).d({1, 2, 3, 4, 5, 6}).d({1, 2}).d({1}).d({2}).d({3}, 2)
                       .d({4, 5}, 2).d({4}).d({5}).d({6}, 3);
  return p;
}

LabeledPlumbing plumbing_U() {
  LabeledPlumbing p;
  p.name = "U";
  p.graph.center_weight = -5;
  p.graph.arms = {{-2, -2, -3}, {-2, -3}, {-2, -3}, {-3}};
  p.graph.arm_hole_labels = {{1, 2}, {3, 4}, {5, 6}, {7, 8}};
  p.outer = OuterTwistPosition::First;
  p.printed_word = word(8).d({1, 2, 3, 4, 5, 6, 7, 8}).d({1, 2}, 3).d({1}).d({2})
                       .d({3, 4}, 2).d({3}).d({4}).d({5, 6}, 2).d({5}).d({6})
                       .d({7, 8}).d({7}).d({8});
  return p;
}

LabeledPlumbing plumbing_K() {
  LabeledPlumbing p;
  p.name = "K";
  p.graph.center_weight = -6;
  p.graph.arms = {{-2}, {-2}, {-2}, {-2}};
  p.graph.arm_hole_labels = {{1}, {2}, {4}, {5}};
  p.graph.center_extra_hole_labels = {3};
  p.outer = OuterTwistPosition::Last;
  p.printed_word = word(5).d({1}, 2).d({2}, 2).d({3}).d({4}, 2).d({5}, 2)
                       .d({1, 2, 3, 4, 5});
  return p;
}

Handlebody filling_T(int i) {
  if (i < 1) throw Error(ErrorCode::UnsupportedShape, "family index must be >= 1");
  Handlebody h;
  h.holes = i + 2;
  for (int a = 1; a <= h.holes; ++a)
    for (int b = a + 1; b <= h.holes; ++b) h.handles.push_back({{a, b}, -1});
  return h;
}

TwistWord filling_word_T(int i) {
  int n = i + 2;
  TwistWord w;
  w.holes = n;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) w.letters.push_back({ConvexCurve({a, b}), 1});
  return w;
}

Handlebody filling_R() {
  Handlebody h;
  h.holes = 6;
  h.handles = {{{4, 6}, -1},    {{5, 6}, -1},    {{1, 4, 5}, -1},
               {{2, 4, 5}, -1}, {{3, 4, 5}, -1}, {{1, 2, 3}, -1},
               {{1, 2, 6}, -1}, {{3, 6}, -1}};
  return h;
}

Handlebody filling_V() {
  Handlebody h;
  h.holes = 8;
  h.handles = {{{1, 3, 4}, -1}, {{2, 3, 4}, -1}, {{1, 2, 5}, -1},
               {{1, 2, 6}, -1}, {{1, 2, 7}, -1}, {{1, 2, 8}, -1},
               {{5, 6, 7, 8}, -1}, {{3, 5, 6}, -1}, {{4, 5, 6}, -1},
               {{3, 4, 7, 8}, -1}};
  return h;
}

Handlebody filling_L() {
  Handlebody h;
  h.holes = 5;
  h.handles = {{{1, 2, 3}, -1}, {{1, 4}, -1}, {{1, 5}, -1},
               {{2, 4}, -1},    {{2, 5}, -1}, {{3, 4, 5}, -1}};
  return h;
}

Embedding embedding_s2_cp11() {
  Embedding e;
  e.name = "s2-cp11";
  e.N = 11;
  e.chi_ambient = 14;
  e.sigma_ambient = -10;
  e.graph = star_family(2);
  // center: twice the fiber class plus e1 - 2 e10 - 2 e11
  e.classes = {
      cls(11, {6, -1, -2, -2, -2, -2, -2, -2, -2, -2, -2, -2}),
      line(11, {1, 2, 3}),
      line(11, {1, 4, 5}),
      line(11, {1, 6, 7}),
      line(11, {1, 8, 9}),
  };
  ChamberVectorEntry v;
  v.transcribed = cls(11, {86, -36, -25, -25, -25, -25, -25, -25, -19, -31, -20, -20});
  v.vector = v.transcribed;
  v.expected_sign_K = +1;
  e.chamber_vectors.push_back(v);
  return e;
}

Embedding embedding_q_cp12() {
  Embedding e;
  e.name = "q-cp12";
  e.N = 12;
  e.chi_ambient = 15;
  e.sigma_ambient = -11;
  e.graph.center_weight = -5;
  e.graph.arms = {{-2}, {-2, -2}, {-2, -3}, {-3}};
  // The printed center class has its e1/e2 coefficients transposed; the
  // repaired class is the one whose pairings match the graph.
  e.transcribed_center =
      cls(12, {6, -2, -1, -2, -2, -2, -2, -2, -2, -2, 0, -2, -2});
  e.classes = {
      cls(12, {6, -1, -2, -2, -2, -2, -2, -2, -2, -2, 0, -2, -2}),
      cls(12, {2, -1, -1, -1, -1, -1, -1, 0, 0, 0, 0, 0, 0}),
      line(12, {1, 2, 9}),
      line(12, {3, 5, 7}),
      line(12, {1, 6, 7}),
      line(12, {3, 4, 9, 10}),
      line(12, {1, 5, 8, 10}),
  };
  ChamberVectorEntry r;
  r.transcribed = cls(12, {533, -188, -186, -192, -126, -185, -189, -156, -104,
                           -159, -56, 0, -151});
  r.vector = cls(12, {533, -188, -186, -192, -126, -185, -189, -156, -104,
                      -159, -56, -57, -151});
  r.transcription_slip = true;
  r.expected_sign_K = +1;
  e.chamber_vectors.push_back(r);
  return e;
}

Embedding embedding_u_cp13() {
  Embedding e;
  e.name = "u-cp13";
  e.N = 13;
  e.chi_ambient = 16;
  e.sigma_ambient = -12;
  e.graph.center_weight = -5;
  e.graph.arms = {{-2, -2, -3}, {-2, -3}, {-2, -3}, {-3}};
  e.classes = {
      cls(13, {7, -3, -2, -2, -2, -2, -2, -2, -2, -3, 0, 0, -2, -2}),
      line(13, {3, 4, 5}),
      diff(13, 5, 8),
      line(13, {1, 5, 6, 11}),
      line(13, {2, 5, 8}),
      cls(13, {0, 0, 1, 0, 0, 0, 0, -1, 0, 0, -1, 0, 0, 0}),
      diff(13, 1, 6),
      line(13, {1, 2, 3, 10}),
      line(13, {2, 4, 7, 11}),
  };
  ChamberVectorEntry r;
  r.transcribed = cls(13, {5656, -1728, -1846, -1836, -1915, -1905, -1728, -1600,
                           -1905, -1890, -246, -295, -393, -1241});
  r.vector = r.transcribed;
  r.expected_sign_K = +1;
  e.chamber_vectors.push_back(r);
  return e;
}

Embedding embedding_k_cp12() {
  Embedding e;
  e.name = "k-cp12";
  e.N = 12;
  e.chi_ambient = 15;
  e.sigma_ambient = -11;
  e.graph = plumbing_K().graph;
  e.graph.arm_hole_labels.clear();
  e.graph.center_extra_hole_labels.clear();
  e.classes = {
      cls(12, {6, -1, -2, -2, -2, -2, -2, -2, -2, -2, -2, -2, -1}),
      line(12, {1, 2, 3}),
      line(12, {1, 4, 5}),
      line(12, {1, 6, 7}),
      line(12, {1, 8, 9}),
  };
  ChamberVectorEntry v;
  v.transcribed = cls(12, {86, -36, -25, -25, -25, -25, -25, -25, -19, -31, -20, -20, 0});
  v.vector = v.transcribed;
  v.expected_sign_K = +1;
  e.chamber_vectors.push_back(v);
  return e;
}

Embedding embedding_s2_knot() {
  Embedding e;
  e.name = "s2-knot";
  e.N = 10;
  e.chi_ambient = 13;
  e.sigma_ambient = -9;
  e.graph = star_family(2);
  e.check_adjunction = false;  // no symplectic structure after knot surgery
  e.classes = {
      cls(10, {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, -2}),
      cls(10, {2, -1, -1, -1, -1, -1, -1, 0, 0, 0, 0}),
      line(10, {1, 2, 9}),
      line(10, {1, 6, 7}),
      line(10, {1, 5, 8}),
  };
  e.canonical = cls(10, {-3, 1, 1, 1, 1, 1, 1, 1, 1, 1, -1});
  ChamberVectorEntry hvec;
  hvec.transcribed = cls(10, {50, -32, -14, -12, -21, -5, -15, -3, -12, -4, -16});
  hvec.vector = cls(10, {50, -32, -14, -12, -21, -6, -15, -3, -12, -4, -16});
  hvec.transcription_slip = true;
  hvec.expected_sign_K = -1;
  e.chamber_vectors.push_back(hvec);
  return e;
}

SphereConfiguration configuration_of(const Embedding& e) {
  SphereConfiguration cfg;
  cfg.classes = e.classes;
  cfg.graph = e.graph;
  if (e.check_adjunction)
    cfg.adjunction_class = e.canonical ? *e.canonical : canonical_class(e.N);
  return cfg;
}

std::vector<NamedFiber> fiber_catalog() {
  const std::size_t N = 9;
  std::vector<NamedFiber> out;
  auto add = [&](std::string name, std::vector<std::pair<BlowupClass, long>> comps) {
    NamedFiber f;
    f.name = std::move(name);
    for (auto& [c, m] : comps) f.components.emplace_back(c, Int(m));
    out.push_back(std::move(f));
  };
  // fibration 1: one I3, one I0* (center with multiplicity two)
  add("f1-I3", {{line(N, {1, 8, 9}), 1}, {line(N, {2, 4, 6}), 1}, {line(N, {3, 5, 7}), 1}});
  add("f1-I0*", {{line(N, {1, 2, 3}), 1},
                 {line(N, {1, 4, 5}), 1},
                 {line(N, {1, 6, 7}), 1},
                 {diff(N, 1, 8), 2},
                 {diff(N, 8, 9), 1}});
  // fibration 2: two I2, two I4
  add("f2-I2a", {{cls(N, {2, -1, -1, -1, -1, 0, 0, -1, -1, 0}), 1},
                 {line(N, {5, 6, 9}), 1}});
  add("f2-I2b", {{cls(N, {2, -1, -1, -1, -1, -1, -1, 0, 0, 0}), 1},
                 {line(N, {7, 8, 9}), 1}});
  add("f2-I4a", {{line(N, {3, 6, 8}), 1},
                 {line(N, {3, 5, 7}), 1},
                 {line(N, {1, 2, 9}), 1},
                 {diff(N, 3, 4), 1}});
  add("f2-I4b", {{line(N, {1, 6, 7}), 1},
                 {line(N, {1, 5, 8}), 1},
                 {line(N, {3, 4, 9}), 1},
                 {diff(N, 1, 2), 1}});
  // fibration 3: two I5
  add("f3-I5a", {{diff(N, 1, 6), 1},
                 {line(N, {1, 4, 9}), 1},
                 {line(N, {2, 5, 8}), 1},
                 {diff(N, 2, 7), 1},
                 {line(N, {1, 2, 3}), 1}});
  add("f3-I5b", {{diff(N, 4, 9), 1},
                 {line(N, {3, 4, 5}), 1},
                 {diff(N, 5, 8), 1},
                 {line(N, {1, 5, 6}), 1},
                 {line(N, {2, 4, 7}), 1}});
  return out;
}

std::vector<Rat> reduced_d_values_star() {
  return {make_rat(-3, 4), make_rat(-1, 3), make_rat(-1, 12), Rat(0),
          make_rat(1, 4), make_rat(2, 3), make_rat(11, 12), Rat(1)};
}

std::vector<Rat> reduced_d_values_star_printed() {
  return {make_rat(-11, 12), make_rat(-2, 3), make_rat(-1, 3), make_rat(-1, 4),
          make_rat(-1, 12), Rat(0), make_rat(1, 4), make_rat(2, 3), Rat(1)};
}

std::vector<Rat> reduced_d_values_filling() {
  return {make_rat(-1, 3), Rat(0), make_rat(2, 3), Rat(1)};
}

std::vector<IntVec> phi_reference() {
  std::vector<std::vector<long>> raw = {
      {1, 0, 0, 0, 0},  {-3, 2, 2, 2, 2}, {-1, 2, 0, 0, 2}, {-3, 0, 2, 2, 0},
      {1, 2, 0, 2, 0},  {3, 0, 0, 0, 0},  {-1, 2, 2, 0, 0}, {-3, 2, 0, 2, 0},
      {-1, 0, 2, 0, 2}, {-3, 0, 0, 2, 2}, {1, 0, 2, 2, 0},  {1, 0, 0, 2, 2},
      {-1, 0, 2, 2, 0}, {-3, 0, 2, 0, 2}, {-3, 0, 0, 0, 0}, {1, 2, 0, 0, 2},
      {5, 0, 0, 0, 0},  {-3, 2, 0, 0, 2}, {-1, 0, 0, 2, 2}, {1, 0, 2, 0, 2},
      {-1, 2, 0, 2, 0}, {-3, 2, 2, 0, 0}, {1, 2, 2, 0, 0},  {-1, 0, 0, 0, 0}};
  std::vector<IntVec> out;
  for (const auto& t : raw) {
    IntVec v;
    for (long x : t) v.emplace_back(x);
    out.push_back(std::move(v));
  }
  return out;
}

IntMat filling_t2_form() { return IntMat{{-4, 2}, {2, -4}}; }

}  // namespace starsurgery::catalog
