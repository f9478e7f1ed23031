#include "starsurgery/braid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace starsurgery {

BraidWord BraidWord::inverse() const {
  BraidWord out;
  out.strands = strands;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back(-*it);
  return out;
}

BraidWord BraidWord::operator*(const BraidWord& rhs) const {
  if (strands != rhs.strands)
    throw Error(ErrorCode::DimensionMismatch, "braid strand counts differ");
  BraidWord out(*this);
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ".";
    os << (letters[i] > 0 ? "s" : "S") << std::abs(letters[i]);
  }
  return letters.empty() ? "1" : os.str();
}

BraidWord full_twist(int strands, int first, int last, long power) {
  if (first < 1 || last > strands || first >= last)
    throw Error(ErrorCode::DimensionMismatch, "full twist block out of range");
  int c = last - first + 1;
  BraidWord out;
  out.strands = strands;
  std::vector<int> once;
  for (int rep = 0; rep < c; ++rep)
    for (int g = first; g < last; ++g) once.push_back(g);
  long reps = power >= 0 ? power : -power;
  for (long k = 0; k < reps; ++k) {
    if (power > 0) {
      out.letters.insert(out.letters.end(), once.begin(), once.end());
    } else {
      for (auto it = once.rbegin(); it != once.rend(); ++it)
        out.letters.push_back(-*it);
    }
  }
  return out;
}

namespace {

// Moves the doubled member strands into one contiguous block ending at the
// rightmost member, emitting one crossing per elementary move.  The sign of
// the crossings is the front/behind convention.
BraidWord gathering_braid(int strands, const std::vector<int>& member_strands,
                          GatherSide side, int& block_first, int& block_last) {
  BraidWord g;
  g.strands = strands;
  // "Front" is the crossing sign certified by the lantern self-test: with it,
  // conjugating the block full twist by the gathering braid reproduces the
  // drawn curve of every non-contiguous subset.
  int sign = side == GatherSide::Front ? -1 : 1;
  std::vector<int> members = member_strands;  // 1-based strand positions, sorted
  int s = static_cast<int>(members.size());
  int target_last = members.back();
  block_first = target_last - s + 1;
  block_last = target_last;
  // Rightmost member first; members left of it keep their positions until
  // their own turn.
  for (int j = s - 1; j >= 0; --j) {
    int p = members[j];
    int t = target_last - (s - 1 - j);
    for (int q = p; q < t; ++q) g.letters.push_back(sign * q);
  }
  return g;
}

}  // namespace

BraidWord compile_to_braid(const TwistWord& w, GatherSide side) {
  w.validate();
  int strands = 2 * w.holes;
  BraidWord out;
  out.strands = strands;
  for (const auto& letter : w.letters) {
    const auto& holes = letter.curve.holes;
    std::vector<int> member_strands;
    member_strands.reserve(2 * holes.size());
    for (int h : holes) {
      member_strands.push_back(2 * h - 1);
      member_strands.push_back(2 * h);
    }
    bool contiguous =
        member_strands.back() - member_strands.front() + 1 ==
        static_cast<int>(member_strands.size());
    if (contiguous) {
      BraidWord tw = full_twist(strands, member_strands.front(),
                                member_strands.back(), letter.power);
      out.letters.insert(out.letters.end(), tw.letters.begin(), tw.letters.end());
    } else {
      int first = 0, last = 0;
      BraidWord g = gathering_braid(strands, member_strands, side, first, last);
      BraidWord tw = full_twist(strands, first, last, letter.power);
      BraidWord gi = g.inverse();
      out.letters.insert(out.letters.end(), g.letters.begin(), g.letters.end());
      out.letters.insert(out.letters.end(), tw.letters.begin(), tw.letters.end());
      out.letters.insert(out.letters.end(), gi.letters.begin(), gi.letters.end());
    }
  }
  return out;
}

}  // namespace starsurgery
