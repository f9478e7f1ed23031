#include "starsurgery/relations.hpp"

#include <chrono>
#include <numeric>

#include "starsurgery/words.hpp"

namespace starsurgery {

namespace {

std::vector<int> block_union(std::initializer_list<const std::vector<int>*> blocks) {
  std::vector<int> u;
  for (const auto* b : blocks) u.insert(u.end(), b->begin(), b->end());
  return u;
}

int total_holes(const HoleBlocks& blocks) {
  int n = 0;
  for (const auto& b : blocks)
    for (int h : b) n = std::max(n, h);
  return n;
}

TwistLetter D(const std::vector<int>& holes, long power = 1) {
  return {ConvexCurve(holes), power};
}

NamedRelation lantern(const HoleBlocks& blocks) {
  if (blocks.size() != 3)
    throw Error(ErrorCode::UnknownRelation, "lantern needs blocks A,B,C");
  const auto &A = blocks[0], &B = blocks[1], &C = blocks[2];
  NamedRelation r;
  r.name = "lantern";
  r.holes = total_holes(blocks);
  r.lhs.holes = r.rhs.holes = r.holes;
  r.lhs.letters = {D(block_union({&A, &B, &C})), D(A), D(B), D(C)};
  r.rhs.letters = {D(block_union({&A, &B})), D(block_union({&A, &C})),
                   D(block_union({&B, &C}))};
  return r;
}

NamedRelation daisy(const HoleBlocks& blocks) {
  if (blocks.size() < 3)
    throw Error(ErrorCode::UnknownRelation, "daisy needs blocks B0..Bm, m >= 2");
  long m = static_cast<long>(blocks.size()) - 1;
  NamedRelation r;
  r.name = "daisy";
  r.holes = total_holes(blocks);
  r.lhs.holes = r.rhs.holes = r.holes;
  std::vector<int> all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  r.lhs.letters.push_back(D(all));
  r.lhs.letters.push_back(D(blocks[0], m - 1));
  for (long i = 1; i <= m; ++i) r.lhs.letters.push_back(D(blocks[i]));
  for (long i = 1; i <= m; ++i)
    r.rhs.letters.push_back(D(block_union({&blocks[0], &blocks[i]})));
  std::vector<int> tail;
  for (long i = 1; i <= m; ++i)
    tail.insert(tail.end(), blocks[i].begin(), blocks[i].end());
  r.rhs.letters.push_back(D(tail));
  return r;
}

NamedRelation park(const HoleBlocks& blocks) {
  if (blocks.size() != 5)
    throw Error(ErrorCode::UnknownRelation, "park needs blocks A,B,C,D,E");
  const auto &A = blocks[0], &B = blocks[1], &C = blocks[2], &Dd = blocks[3],
             &E = blocks[4];
  NamedRelation r;
  r.name = "park";
  r.holes = total_holes(blocks);
  r.lhs.holes = r.rhs.holes = r.holes;
  r.lhs.letters = {D(block_union({&A, &B, &C, &Dd, &E})),
                   D(block_union({&A, &B})),
                   D(A),
                   D(B),
                   D(C, 2),
                   D(Dd),
                   D(E)};
  r.rhs.letters = {D(block_union({&A, &C})), D(block_union({&B, &C})),
                   D(block_union({&A, &B, &Dd})), D(block_union({&A, &B, &E})),
                   D(block_union({&C, &Dd, &E}))};
  return r;
}

NamedRelation genlantern(int i) {
  if (i < 1)
    throw Error(ErrorCode::UnknownRelation, "genlantern parameter must be >= 1");
  int n = i + 2;
  NamedRelation r;
  r.name = "genlantern";
  r.holes = n;
  r.lhs.holes = r.rhs.holes = n;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  r.lhs.letters.push_back(D(all));
  for (int a = 1; a <= n; ++a) r.lhs.letters.push_back(D({a}, i));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) r.rhs.letters.push_back(D({a, b}));
  return r;
}

NamedRelation fixed_word_relation(const std::string& name) {
  NamedRelation r;
  r.name = name;
  if (name == "QR") {
    r.holes = 6;
    r.lhs = word(6).d({1, 2, 3, 4, 5, 6}).d({1, 2}).d({1}).d({2}).d({3}, 2)
                .d({4, 5}, 2).d({4}).d({5}).d({6}, 3);
    r.rhs = word(6).d({4, 6}).d({5, 6}).d({1, 4, 5}).d({2, 4, 5}).d({3, 4, 5})
                .d({1, 2, 3}).d({1, 2, 6}).d({3, 6});
  } else if (name == "UV") {
    r.holes = 8;
    r.lhs = word(8).d({1, 2, 3, 4, 5, 6, 7, 8}).d({1, 2}, 3).d({1}).d({2})
                .d({3, 4}, 2).d({3}).d({4}).d({5, 6}, 2).d({5}).d({6})
                .d({7, 8}).d({7}).d({8});
    r.rhs = word(8).d({1, 3, 4}).d({2, 3, 4}).d({1, 2, 5}).d({1, 2, 6})
                .d({1, 2, 7}).d({1, 2, 8}).d({5, 6, 7, 8}).d({3, 5, 6})
                .d({4, 5, 6}).d({3, 4, 7, 8});
  } else if (name == "KL") {
    r.holes = 5;
    r.lhs = word(5).d({1}, 2).d({2}, 2).d({3}).d({4}, 2).d({5}, 2)
                .d({1, 2, 3, 4, 5});
    r.rhs = word(5).d({1, 2, 3}).d({1, 4}).d({1, 5}).d({2, 4}).d({2, 5})
                .d({3, 4, 5});
  } else if (name == "MN") {
    // holes 1, 2a, 2b, 3, 4a, 4b, 5 as labels 1..7
    r.holes = 7;
    r.lhs = word(7).d({1}, 2).d({2, 3}, 2).d({2}).d({3}).d({4}).d({5, 6})
                .d({5}).d({6}).d({7}, 3).d({1, 2, 3, 4, 5, 6, 7});
    r.rhs = word(7).d({1, 2, 3, 4}).d({1, 5, 6}).d({1, 7}).d({2, 3, 5})
                .d({2, 3, 6}).d({2, 7}).d({3, 7}).d({4, 5, 6, 7});
  } else if (name == "OP") {
    // holes 1a,1b,2a,2b,3,4a,4b,5a,5b as labels 1..9
    r.holes = 9;
    r.lhs = word(9).d({1, 2}, 2).d({1}).d({2}).d({3, 4}, 2).d({3}).d({4})
                .d({5}).d({6, 7}, 2).d({6}).d({7}).d({8, 9}, 2).d({8}).d({9})
                .d({1, 2, 3, 4, 5, 6, 7, 8, 9});
    r.rhs = word(9).d({1, 2, 3, 4, 5}).d({1, 6, 7}).d({2, 6, 7}).d({1, 2, 8})
                .d({1, 2, 9}).d({3, 4, 6}).d({3, 4, 7}).d({3, 8, 9})
                .d({4, 8, 9}).d({5, 6, 7, 8, 9});
  } else {
    throw Error(ErrorCode::UnknownRelation, name);
  }
  return r;
}

}  // namespace

HoleBlocks consecutive_blocks(const std::vector<int>& sizes) {
  HoleBlocks blocks;
  int next = 1;
  for (int s : sizes) {
    std::vector<int> b(s);
    std::iota(b.begin(), b.end(), next);
    next += s;
    blocks.push_back(std::move(b));
  }
  return blocks;
}

NamedRelation build_relation(const std::string& name, const HoleBlocks& blocks,
                             int param) {
  if (name == "lantern") return lantern(blocks);
  if (name == "daisy") return daisy(blocks);
  if (name == "park") return park(blocks);
  if (name == "genlantern") return genlantern(param);
  return fixed_word_relation(name);
}

RelationReport verify_named_relation(const std::string& name,
                                     const HoleBlocks& blocks, int param) {
  RelationReport rep;
  rep.relation = build_relation(name, blocks, param);
  auto t0 = std::chrono::steady_clock::now();
  rep.equal = words_equal(rep.relation.lhs, rep.relation.rhs);
  auto t1 = std::chrono::steady_clock::now();
  rep.milliseconds = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

std::size_t verify_relation_perturbations(const NamedRelation& rel) {
  std::size_t tried = 0;
  auto try_side = [&](const TwistWord& side, const TwistWord& other) {
    for (std::size_t li = 0; li < side.letters.size(); ++li) {
      for (int hole = 1; hole <= rel.holes; ++hole) {
        TwistWord perturbed = side;
        std::vector<int> subset = perturbed.letters[li].curve.holes;
        bool present = perturbed.letters[li].curve.contains(hole);
        if (present) {
          if (subset.size() == 1) continue;  // keep curves nonempty
          subset.erase(std::find(subset.begin(), subset.end(), hole));
        } else {
          subset.push_back(hole);
        }
        perturbed.letters[li].curve = ConvexCurve(std::move(subset));
        ++tried;
        if (words_equal(perturbed, other))
          throw Error(ErrorCode::UnknownRelation,
                      rel.name + ": perturbation of letter " + std::to_string(li) +
                          " by hole " + std::to_string(hole) + " stayed equal");
      }
    }
  };
  try_side(rel.lhs, rel.rhs);
  try_side(rel.rhs, rel.lhs);
  return tried;
}

std::vector<NamedRelation> acceptance_relation_instances() {
  std::vector<NamedRelation> out;
  // lantern on every 3-block composition of n holes, n = 3..6
  for (int n = 3; n <= 6; ++n)
    for (int a = 1; a + 2 <= n; ++a)
      for (int b = 1; a + b + 1 <= n; ++b)
        out.push_back(build_relation("lantern",
                                     consecutive_blocks({a, b, n - a - b})));
  for (int m = 2; m <= 4; ++m)
    out.push_back(build_relation("daisy",
                                 consecutive_blocks(std::vector<int>(m + 1, 1))));
  out.push_back(build_relation("park", consecutive_blocks({1, 1, 1, 1, 1})));
  for (int i = 1; i <= 4; ++i) out.push_back(build_relation("genlantern", {}, i));
  for (const char* name : {"QR", "UV", "KL", "MN", "OP"})
    out.push_back(build_relation(name));
  return out;
}

}  // namespace starsurgery
