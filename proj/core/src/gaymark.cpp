#include "starsurgery/gaymark.hpp"

#include <algorithm>
#include <numeric>

namespace starsurgery {

OpenBookWord gaymark_word(const StarPlumbing& g, OuterTwistPosition outer) {
  g.validate();
  long k0 = -(g.center_weight + static_cast<long>(g.arms.size()));

  std::vector<long> block_reps;   // arm length l_j per arm
  std::vector<long> block_sizes;  // k_j per arm
  for (const auto& arm : g.arms) {
    block_reps.push_back(static_cast<long>(arm.size()));
    block_sizes.push_back(-(arm.back() + 1));
  }
  long m = std::accumulate(block_sizes.begin(), block_sizes.end(), 0L) + (k0 - 1);

  // Hole labels: explicit when given, else consecutive blocks in arm order
  // with the extra center holes last.
  std::vector<std::vector<int>> blocks = g.arm_hole_labels;
  std::vector<int> extras = g.center_extra_hole_labels;
  if (blocks.empty() && extras.empty()) {
    int next = 1;
    for (long s : block_sizes) {
      std::vector<int> b(s);
      std::iota(b.begin(), b.end(), next);
      next += static_cast<int>(s);
      blocks.push_back(std::move(b));
    }
    for (long c = 0; c < k0 - 1; ++c) extras.push_back(next++);
  } else {
    if (static_cast<long>(extras.size()) != k0 - 1 || blocks.size() != g.arms.size())
      throw Error(ErrorCode::UnsupportedShape, "hole labelling has wrong shape");
    std::vector<bool> seen(m + 1, false);
    long total = 0;
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (static_cast<long>(blocks[j].size()) != block_sizes[j])
        throw Error(ErrorCode::UnsupportedShape, "arm hole block has wrong size");
      total += blocks[j].size();
    }
    total += extras.size();
    if (total != m)
      throw Error(ErrorCode::UnsupportedShape, "hole labelling has wrong size");
    auto check = [&](int label) {
      if (label < 1 || label > m || seen[label])
        throw Error(ErrorCode::UnsupportedShape, "hole labels must cover 1..m once");
      seen[label] = true;
    };
    for (const auto& b : blocks)
      for (int label : b) check(label);
    for (int label : extras) check(label);
  }

  // Emission runs ordered by smallest label.
  struct Run {
    int min_label;
    std::vector<TwistLetter> letters;
  };
  std::vector<Run> runs;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    Run r;
    std::vector<int> sorted = blocks[j];
    std::sort(sorted.begin(), sorted.end());
    r.min_label = sorted.front();
    r.letters.push_back({ConvexCurve(sorted), block_reps[j]});
    for (int c : sorted) r.letters.push_back({ConvexCurve({c}), 1});
    runs.push_back(std::move(r));
  }
  for (int c : extras) runs.push_back({c, {{ConvexCurve({c}), 1}}});
  std::sort(runs.begin(), runs.end(),
            [](const Run& a, const Run& b) { return a.min_label < b.min_label; });

  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 1);
  TwistLetter outer_twist{ConvexCurve(all), 1};

  OpenBookWord out;
  out.holes = static_cast<int>(m);
  out.monodromy.holes = static_cast<int>(m);
  if (outer == OuterTwistPosition::First) out.monodromy.letters.push_back(outer_twist);
  for (const auto& r : runs)
    out.monodromy.letters.insert(out.monodromy.letters.end(), r.letters.begin(),
                                 r.letters.end());
  if (outer == OuterTwistPosition::Last) out.monodromy.letters.push_back(outer_twist);
  out.monodromy = out.monodromy.normalized();
  return out;
}

}  // namespace starsurgery
