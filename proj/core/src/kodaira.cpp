#include "starsurgery/kodaira.hpp"

#include <algorithm>
#include <sstream>

#include "starsurgery/error.hpp"

namespace starsurgery {

bool OmegaParams::admissible() const {
  if (!(a > 0)) return false;
  Rat sum(0);
  Rat prev = a;
  for (const Rat& bi : b) {
    if (!(bi > 0) || !(bi < prev)) return false;
    prev = bi;
    sum += bi;
  }
  return a > sum;
}

void OmegaParams::require_admissible() const {
  if (!admissible())
    throw Error(ErrorCode::InadmissibleParams,
                "need a > b_1 > ... > b_N > 0 and a > sum(b_i)");
}

OmegaParams sample_admissible_params(std::mt19937_64& rng, std::size_t N) {
  // Strictly decreasing positive numerators over a common denominator, then
  // a above both b_1 and the sum.
  const long den = 1 << 20;
  std::uniform_int_distribution<long> dist(1, den - 1);
  std::vector<long> v(N);
  for (auto& x : v) x = dist(rng);
  std::sort(v.begin(), v.end(), std::greater<long>());
  OmegaParams p;
  p.b.resize(N);
  Rat sum(0);
  for (std::size_t i = 0; i < N; ++i) {
    // enforce strict decrease even after duplicates
    p.b[i] = make_rat(Int(v[i]) * (N + 1) + Int(N - i), Int(den) * (N + 1));
    sum += p.b[i];
  }
  std::uniform_int_distribution<long> jitter(1, den);
  Rat bump = (N == 0) ? Rat(1) : p.b[0];
  p.a = std::max(sum, bump) + make_rat(jitter(rng), den);
  p.require_admissible();
  return p;
}

Rat ParamFunctional::evaluate(const OmegaParams& p) const {
  if (p.b.size() != b_coeffs.size())
    throw Error(ErrorCode::DimensionMismatch, "parameter count mismatch");
  Rat v = a_coeff * p.a;
  for (std::size_t i = 0; i < b_coeffs.size(); ++i) v += b_coeffs[i] * p.b[i];
  return v;
}

std::string ParamFunctional::to_string() const {
  std::ostringstream os;
  bool wrote = false;
  auto term = [&](const Rat& c, const std::string& name) {
    if (c == 0) return;
    if (c > 0 && wrote) os << " + ";
    if (c < 0) os << (wrote ? " - " : "-");
    Rat a = abs(c);
    if (a != 1) os << a.get_str() << "*";
    os << name;
    wrote = true;
  };
  term(a_coeff, "a");
  for (std::size_t i = 0; i < b_coeffs.size(); ++i)
    term(b_coeffs[i], "b" + std::to_string(i + 1));
  if (!wrote) os << "0";
  return os.str();
}

const char* kodaira_dimension_name(KodairaDimension k) {
  switch (k) {
    case KodairaDimension::MinusInfinity: return "-infinity";
    case KodairaDimension::Zero: return "0";
    case KodairaDimension::One: return "1";
    case KodairaDimension::Two: return "2";
  }
  return "?";
}

namespace {

// <x, omega> as a functional of (a, b): x_h * a + sum x_i * b_i.
ParamFunctional pairing_functional(const BlowupClass& x) {
  ParamFunctional f;
  f.a_coeff = Rat(x.coeffs[0]);
  f.b_coeffs.resize(x.N);
  for (std::size_t i = 1; i <= x.N; ++i) f.b_coeffs[i - 1] = Rat(x.coeffs[i]);
  return f;
}

}  // namespace

KodairaReport kodaira_report(const std::vector<BlowupClass>& config_classes,
                             const RatMat& gram_inverse,
                             const OmegaParams& params,
                             const Int& k_squared) {
  params.require_admissible();
  if (config_classes.empty())
    throw Error(ErrorCode::DimensionMismatch, "empty configuration");
  std::size_t N = config_classes.front().N;
  if (params.b.size() != N)
    throw Error(ErrorCode::InadmissibleParams, "parameter count differs from N");
  std::size_t k = config_classes.size();
  if (gram_inverse.rows() != k || gram_inverse.cols() != k)
    throw Error(ErrorCode::DimensionMismatch, "inverse Gram size mismatch");

  BlowupClass K = canonical_class(N);
  KodairaReport rep;
  rep.functional = pairing_functional(K);

  // K|_S . omega|_S = (K.u_i) P^{-1}_{ij} (omega.u_j); subtract it from
  // K.omega, keeping omega symbolic.
  RatVec ku(k);
  for (std::size_t i = 0; i < k; ++i) ku[i] = Rat(pair_classes(K, config_classes[i]));
  RatVec left(k, Rat(0));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < k; ++i) left[j] += ku[i] * gram_inverse.at(i, j);
  for (std::size_t j = 0; j < k; ++j) {
    if (left[j] == 0) continue;
    ParamFunctional fj = pairing_functional(config_classes[j]);
    rep.functional.a_coeff -= left[j] * fj.a_coeff;
    for (std::size_t i = 0; i < N; ++i)
      rep.functional.b_coeffs[i] -= left[j] * fj.b_coeffs[i];
  }

  rep.value = rep.functional.evaluate(params);
  rep.k_squared = k_squared;

  int vs = sign(rep.value), ks = sign(rep.k_squared);
  if (vs < 0 || ks < 0)
    rep.dimension = KodairaDimension::MinusInfinity;
  else if (vs == 0 && ks == 0)
    rep.dimension = KodairaDimension::Zero;
  else if (vs > 0 && ks == 0)
    rep.dimension = KodairaDimension::One;
  else if (vs > 0 && ks > 0)
    rep.dimension = KodairaDimension::Two;
  else
    throw Error(ErrorCode::InadmissibleParams,
                "K.omega = 0 with K^2 > 0 is outside the classification");
  return rep;
}

}  // namespace starsurgery
