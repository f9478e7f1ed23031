#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "starsurgery/error.hpp"

namespace starsurgery {

/// Convex curve on a disk with holes: the isotopy class determined by the
/// subset of holes it encloses, drawn in the standard front/behind position.
struct ConvexCurve {
  std::vector<int> holes;  // strictly increasing, 1-based, nonempty

  ConvexCurve() = default;
  ConvexCurve(std::initializer_list<int> h);
  explicit ConvexCurve(std::vector<int> h);

  bool operator==(const ConvexCurve&) const = default;
  bool operator<(const ConvexCurve& o) const { return holes < o.holes; }

  bool contains(int hole) const;
  void validate(int hole_count) const;

  std::string to_string() const;  // e.g. "D{1,2,5}"
};

/// Disjoint or nested subsets enclose disjoint curves, whose twists commute.
bool curves_commute(const ConvexCurve& a, const ConvexCurve& b);

struct TwistLetter {
  ConvexCurve curve;
  long power = 1;  // nonzero; positive = right-handed

  bool operator==(const TwistLetter&) const = default;
};

/// Word of Dehn twists about convex curves; leftmost letter acts first.
struct TwistWord {
  int holes = 0;
  std::vector<TwistLetter> letters;

  TwistWord() = default;
  TwistWord(int n, std::vector<TwistLetter> l) : holes(n), letters(std::move(l)) {}

  void validate() const;

  /// Adjacent letters about the same curve merged, zero powers dropped.
  TwistWord normalized() const;
  /// Every letter with power +1 or -1.
  TwistWord atoms() const;
  TwistWord inverse() const;
  TwistWord operator*(const TwistWord& rhs) const;  // this, then rhs

  bool same_letters(const TwistWord& other) const {
    return holes == other.holes && normalized().letters == other.normalized().letters;
  }

  std::string to_string() const;
};

/// Fluent builder: word(6).d({1,2}).d({3},2) ...
struct TwistWordBuilder {
  TwistWord w;
  explicit TwistWordBuilder(int holes) { w.holes = holes; }
  TwistWordBuilder& d(std::initializer_list<int> holes, long power = 1) {
    w.letters.push_back({ConvexCurve(holes), power});
    return *this;
  }
  TwistWordBuilder& d(const ConvexCurve& c, long power = 1) {
    w.letters.push_back({c, power});
    return *this;
  }
  operator TwistWord() const { return w; }
};

inline TwistWordBuilder word(int holes) { return TwistWordBuilder(holes); }

/// Replaces hole i by the adjacent pair (i, i+1); curves through i now run
/// through both, later holes shift up by one.  Throws Error(BadHole).
TwistWord split_hole(const TwistWord& w, int hole);

}  // namespace starsurgery
