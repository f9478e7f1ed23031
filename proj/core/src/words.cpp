#include "starsurgery/words.hpp"

#include <algorithm>
#include <functional>

namespace starsurgery {

GatherSide& default_gather_side() {
  static GatherSide side = GatherSide::Front;
  return side;
}

std::vector<long> twist_invariant(const TwistWord& w, std::optional<GatherSide> side) {
  GatherSide s = side.value_or(default_gather_side());
  return braid_normal_form(compile_to_braid(w, s)).invariant();
}

bool words_equal(const TwistWord& a, const TwistWord& b,
                 std::optional<GatherSide> side) {
  if (a.holes != b.holes)
    throw Error(ErrorCode::HoleCountMismatch, "words live on different disks");
  GatherSide s = side.value_or(default_gather_side());
  return braid_equal(compile_to_braid(a, s), compile_to_braid(b, s));
}

bool lantern_self_test(GatherSide side) {
  TwistWord lhs = word(3).d({1, 2, 3}).d({1}).d({2}).d({3});
  TwistWord rhs = word(3).d({1, 2}).d({1, 3}).d({2, 3});
  return words_equal(lhs, rhs, side);
}

namespace {

struct Atom {
  ConvexCurve curve;
  long sign;
  bool operator==(const Atom&) const = default;
};

std::vector<Atom> to_atoms(const TwistWord& w) {
  std::vector<Atom> out;
  for (const auto& l : w.atoms().letters) out.push_back({l.curve, l.power});
  return out;
}

// Occurrence search in the trace monoid: letters about disjoint (or nested)
// curves commute, everything else keeps its relative order.  The pattern
// occurs when a label-respecting matching exists whose dependence order is
// compatible with the pattern order and every unmatched letter can leave the
// block to one side.
struct OccurrenceSearch {
  const std::vector<Atom>& text;
  const std::vector<Atom>& pattern;
  std::vector<std::vector<bool>> before;  // transitive dependence i -> j
  std::vector<std::size_t> match;         // pattern position -> text position
  std::vector<bool> used;

  explicit OccurrenceSearch(const std::vector<Atom>& t, const std::vector<Atom>& p)
      : text(t), pattern(p) {
    std::size_t n = text.size();
    before.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!curves_commute(text[i].curve, text[j].curve)) before[i][j] = true;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        if (!before[i][k]) continue;
        for (std::size_t j = 0; j < n; ++j)
          if (before[k][j]) before[i][j] = true;
      }
    used.assign(n, false);
  }

  bool feasible_exits() const {
    // forced-left: depends into a matched atom; forced-right: depended on by
    // one.  Both at once is a wedge the block cannot pass.
    for (std::size_t q = 0; q < text.size(); ++q) {
      if (used[q]) continue;
      bool down = false, up = false;
      for (std::size_t m : match) {
        if (before[q][m]) down = true;
        if (before[m][q]) up = true;
      }
      if (down && up) return false;
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == pattern.size()) return feasible_exits();
    for (std::size_t p = 0; p < text.size(); ++p) {
      if (used[p] || !(text[p] == pattern[k])) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i)
        if (before[p][match[i]]) ok = false;  // would invert the pattern order
      if (!ok) continue;
      used[p] = true;
      match.push_back(p);
      if (extend(k + 1)) return true;
      match.pop_back();
      used[p] = false;
    }
    return false;
  }
};

}  // namespace

TwistWord substitute(const TwistWord& w, const TwistWord& lhs, const TwistWord& rhs) {
  if (w.holes != lhs.holes || w.holes != rhs.holes)
    throw Error(ErrorCode::HoleCountMismatch, "substitution hole counts differ");
  std::vector<Atom> text = to_atoms(w);
  std::vector<Atom> pattern = to_atoms(lhs);
  if (pattern.empty())
    throw Error(ErrorCode::PatternNotFound, "empty pattern");

  OccurrenceSearch search(text, pattern);
  if (!search.extend(0))
    throw Error(ErrorCode::PatternNotFound,
                "pattern does not occur up to commutation of disjoint twists");

  std::size_t first_matched = *std::min_element(search.match.begin(), search.match.end());
  std::vector<Atom> out;
  // forced-left atoms and everything before the occurrence keep their order
  for (std::size_t q = 0; q < text.size(); ++q) {
    if (search.used[q]) continue;
    bool up = false;
    for (std::size_t m : search.match)
      if (search.before[m][q]) up = true;
    if (!up && q < first_matched) out.push_back(text[q]);
    else if (!up) {
      bool down = false;
      for (std::size_t m : search.match)
        if (search.before[q][m]) down = true;
      if (down) out.push_back(text[q]);
    }
  }
  for (const auto& a : to_atoms(rhs)) out.push_back(a);
  for (std::size_t q = 0; q < text.size(); ++q) {
    if (search.used[q]) continue;
    bool down = false, up = false;
    for (std::size_t m : search.match) {
      if (search.before[q][m]) down = true;
      if (search.before[m][q]) up = true;
    }
    if (up || (!down && q >= first_matched)) out.push_back(text[q]);
  }

  TwistWord result;
  result.holes = w.holes;
  for (const auto& a : out) result.letters.push_back({a.curve, a.sign});
  return result.normalized();
}

}  // namespace starsurgery
