#include "starsurgery/twist.hpp"

#include <algorithm>
#include <sstream>

namespace starsurgery {

ConvexCurve::ConvexCurve(std::initializer_list<int> h) : holes(h) {
  std::sort(holes.begin(), holes.end());
  holes.erase(std::unique(holes.begin(), holes.end()), holes.end());
}

ConvexCurve::ConvexCurve(std::vector<int> h) : holes(std::move(h)) {
  std::sort(holes.begin(), holes.end());
  holes.erase(std::unique(holes.begin(), holes.end()), holes.end());
}

bool ConvexCurve::contains(int hole) const {
  return std::binary_search(holes.begin(), holes.end(), hole);
}

void ConvexCurve::validate(int hole_count) const {
  if (holes.empty())
    throw Error(ErrorCode::EmptySubset, "a convex curve must enclose a hole");
  if (holes.front() < 1 || holes.back() > hole_count)
    throw Error(ErrorCode::BadHole, "curve hole label out of range");
}

std::string ConvexCurve::to_string() const {
  std::ostringstream os;
  os << "D{";
  for (std::size_t i = 0; i < holes.size(); ++i) {
    if (i) os << ",";
    os << holes[i];
  }
  os << "}";
  return os.str();
}

bool curves_commute(const ConvexCurve& a, const ConvexCurve& b) {
  std::size_t common = 0;
  std::size_t i = 0, j = 0;
  while (i < a.holes.size() && j < b.holes.size()) {
    if (a.holes[i] == b.holes[j]) {
      ++common;
      ++i;
      ++j;
    } else if (a.holes[i] < b.holes[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  if (common == 0) return true;  // disjoint subsets
  // nested subsets also give disjoint curves
  return common == a.holes.size() || common == b.holes.size();
}

void TwistWord::validate() const {
  for (const auto& l : letters) {
    l.curve.validate(holes);
    if (l.power == 0)
      throw Error(ErrorCode::EmptySubset, "zero twist power");
  }
}

TwistWord TwistWord::normalized() const {
  TwistWord out;
  out.holes = holes;
  for (const auto& l : letters) {
    if (l.power == 0) continue;
    if (!out.letters.empty() && out.letters.back().curve == l.curve) {
      out.letters.back().power += l.power;
      if (out.letters.back().power == 0) out.letters.pop_back();
    } else {
      out.letters.push_back(l);
    }
  }
  return out;
}

TwistWord TwistWord::atoms() const {
  TwistWord out;
  out.holes = holes;
  for (const auto& l : letters) {
    long sign = l.power > 0 ? 1 : -1;
    for (long k = 0; k != l.power; k += sign)
      out.letters.push_back({l.curve, sign});
  }
  return out;
}

TwistWord TwistWord::inverse() const {
  TwistWord out;
  out.holes = holes;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back({it->curve, -it->power});
  return out;
}

TwistWord TwistWord::operator*(const TwistWord& rhs) const {
  if (holes != rhs.holes)
    throw Error(ErrorCode::HoleCountMismatch, "twist word hole counts differ");
  TwistWord out(*this);
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

std::string TwistWord::to_string() const {
  std::ostringstream os;
  TwistWord n = normalized();
  if (n.letters.empty()) return "1";
  for (const auto& l : n.letters) {
    os << l.curve.to_string();
    if (l.power != 1) os << "^" << l.power;
  }
  return os.str();
}

TwistWord split_hole(const TwistWord& w, int hole) {
  if (hole < 1 || hole > w.holes)
    throw Error(ErrorCode::BadHole, "split hole out of range");
  TwistWord out;
  out.holes = w.holes + 1;
  for (const auto& l : w.letters) {
    std::vector<int> mapped;
    mapped.reserve(l.curve.holes.size() + 1);
    for (int h : l.curve.holes) {
      if (h < hole) {
        mapped.push_back(h);
      } else if (h == hole) {
        mapped.push_back(hole);
        mapped.push_back(hole + 1);
      } else {
        mapped.push_back(h + 1);
      }
    }
    out.letters.push_back({ConvexCurve(std::move(mapped)), l.power});
  }
  return out;
}

}  // namespace starsurgery
