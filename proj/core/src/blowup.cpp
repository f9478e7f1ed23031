#include "starsurgery/blowup.hpp"

#include <sstream>

namespace starsurgery {

BlowupClass::BlowupClass(std::size_t blowups, IntVec c) : N(blowups), coeffs(std::move(c)) {
  if (coeffs.size() != N + 1)
    throw Error(ErrorCode::DimensionMismatch, "class needs N+1 coefficients");
}

BlowupClass BlowupClass::of(std::size_t blowups, std::initializer_list<long> c) {
  IntVec v;
  v.reserve(c.size());
  for (long x : c) v.emplace_back(x);
  return BlowupClass(blowups, std::move(v));
}

static void require_same_N(const BlowupClass& x, const BlowupClass& y) {
  if (x.N != y.N)
    throw Error(ErrorCode::DimensionMismatch, "classes live in different blow-ups");
}

BlowupClass BlowupClass::operator+(const BlowupClass& o) const {
  require_same_N(*this, o);
  BlowupClass r(*this);
  for (std::size_t i = 0; i <= N; ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

BlowupClass BlowupClass::operator-(const BlowupClass& o) const {
  require_same_N(*this, o);
  BlowupClass r(*this);
  for (std::size_t i = 0; i <= N; ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

BlowupClass BlowupClass::operator*(const Int& c) const {
  BlowupClass r(*this);
  for (auto& x : r.coeffs) x *= c;
  return r;
}

BlowupClass BlowupClass::operator-() const { return *this * Int(-1); }

std::string BlowupClass::to_string() const {
  std::ostringstream os;
  bool wrote = false;
  auto term = [&](const Int& c, const std::string& name) {
    if (c == 0) return;
    if (c > 0 && wrote) os << "+";
    if (c == -1)
      os << "-";
    else if (c != 1)
      os << c.get_str() << "*";
    os << name;
    wrote = true;
  };
  term(coeffs[0], "h");
  for (std::size_t i = 1; i <= N; ++i) term(coeffs[i], "e" + std::to_string(i));
  if (!wrote) os << "0";
  return os.str();
}

Int pair_classes(const BlowupClass& x, const BlowupClass& y) {
  require_same_N(x, y);
  Int p = x.coeffs[0] * y.coeffs[0];
  for (std::size_t i = 1; i <= x.N; ++i) p -= x.coeffs[i] * y.coeffs[i];
  return p;
}

Int square(const BlowupClass& x) { return pair_classes(x, x); }

BlowupClass canonical_class(std::size_t N) {
  IntVec c(N + 1, Int(1));
  c[0] = -3;
  return BlowupClass(N, std::move(c));
}

BlowupClass fiber_class(std::size_t N) {
  if (N < 9)
    throw Error(ErrorCode::DimensionMismatch, "fiber class needs N >= 9");
  IntVec c(N + 1, Int(0));
  c[0] = 3;
  for (std::size_t i = 1; i <= 9; ++i) c[i] = -1;
  return BlowupClass(N, std::move(c));
}

BlowupClass hyperplane_class(std::size_t N) {
  IntVec c(N + 1, Int(0));
  c[0] = 1;
  return BlowupClass(N, std::move(c));
}

BlowupClass exceptional_class(std::size_t N, std::size_t i) {
  if (i < 1 || i > N)
    throw Error(ErrorCode::DimensionMismatch, "exceptional index out of range");
  IntVec c(N + 1, Int(0));
  c[i] = 1;
  return BlowupClass(N, std::move(c));
}

}  // namespace starsurgery
