#include "starsurgery/pi1.hpp"

#include <deque>

namespace starsurgery {

namespace {

// Coset table with union-find coincidence processing.
class CosetTable {
public:
  CosetTable(std::size_t generators, std::size_t budget)
      : ncols_(2 * generators), budget_(budget) {
    new_coset();
  }

  static int col(int letter) {
    return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
  }
  static int inv(int c) { return c ^ 1; }

  int rep(int a) {
    while (p_[a] != a) {
      p_[a] = p_[p_[a]];
      a = p_[a];
    }
    return a;
  }
  bool alive(int a) { return p_[a] == a; }

  int entry(int a, int c) const { return tab_[a][c]; }
  std::size_t size() const { return tab_.size(); }
  std::size_t live() const { return live_; }
  bool exhausted() const { return exhausted_; }

  int new_coset() {
    if (tab_.size() >= budget_) {
      exhausted_ = true;
      return -1;
    }
    tab_.emplace_back(ncols_, -1);
    p_.push_back(static_cast<int>(tab_.size()) - 1);
    ++live_;
    return static_cast<int>(tab_.size()) - 1;
  }

  void set_edge(int a, int c, int b) {
    tab_[a][c] = b;
    tab_[b][inv(c)] = a;
  }

  void merge(int a, int b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    --live_;
    queue_.push_back(b);
  }

  void process_coincidences() {
    while (!queue_.empty()) {
      int dead = queue_.front();
      queue_.pop_front();
      for (int c = 0; c < static_cast<int>(ncols_); ++c) {
        int d = tab_[dead][c];
        if (d < 0) continue;
        tab_[dead][c] = -1;
        if (tab_[d][inv(c)] == dead) tab_[d][inv(c)] = -1;
        int mu = rep(dead), nu = rep(d);
        if (tab_[mu][c] >= 0) {
          merge(nu, tab_[mu][c]);
        } else if (tab_[nu][inv(c)] >= 0) {
          merge(mu, tab_[nu][inv(c)]);
        } else {
          set_edge(mu, c, nu);
        }
      }
    }
  }

  void coincide(int a, int b) {
    merge(a, b);
    process_coincidences();
  }

  // HLT scan of one relator at one coset, defining cosets to fill gaps.
  // Returns false when the budget ran out.
  bool scan_and_fill(int a, const std::vector<int>& w) {
    int f = rep(a), b = rep(a);
    std::size_t i = 0, j = w.size();
    while (true) {
      while (i < j && tab_[f][col(w[i])] >= 0) {
        f = rep(tab_[f][col(w[i])]);
        ++i;
      }
      if (i == j) {
        if (f != b) coincide(f, b);
        return true;
      }
      while (j > i && tab_[b][inv(col(w[j - 1]))] >= 0) {
        b = rep(tab_[b][inv(col(w[j - 1]))]);
        --j;
      }
      if (j == i) {
        coincide(f, b);
        return true;
      }
      if (j == i + 1) {
        set_edge(f, col(w[i]), b);
        return true;
      }
      int n = new_coset();
      if (n < 0) return false;
      set_edge(f, col(w[i]), n);
    }
  }

  // Complete table where every relator closes at every live coset.
  bool verified_complete(const std::vector<std::vector<int>>& relators) {
    for (int a = 0; a < static_cast<int>(tab_.size()); ++a) {
      if (!alive(a)) continue;
      for (int c = 0; c < static_cast<int>(ncols_); ++c)
        if (tab_[a][c] < 0 || !alive(rep(tab_[a][c]))) {
          if (tab_[a][c] < 0) return false;
          tab_[a][c] = rep(tab_[a][c]);
        }
      for (const auto& w : relators) {
        int x = a;
        for (int letter : w) x = rep(tab_[x][col(letter)]);
        if (x != a) return false;
      }
    }
    return true;
  }

private:
  std::size_t ncols_;
  std::size_t budget_;
  std::size_t live_ = 0;
  bool exhausted_ = false;
  std::vector<std::vector<int>> tab_;
  std::vector<int> p_;
  std::deque<int> queue_;
};

}  // namespace

std::optional<unsigned long> todd_coxeter_order(const GroupPresentation& pres,
                                                std::size_t max_cosets,
                                                std::size_t* cosets_used) {
  if (pres.generators == 0) {
    if (cosets_used) *cosets_used = 1;
    return 1;
  }
  CosetTable table(pres.generators, max_cosets);
  for (int a = 0; a < static_cast<int>(table.size()); ++a) {
    if (!table.alive(a)) continue;
    for (const auto& w : pres.relators) {
      if (!table.alive(a)) break;
      if (!table.scan_and_fill(a, w)) {
        if (cosets_used) *cosets_used = table.size();
        return std::nullopt;
      }
    }
    if (!table.alive(a)) continue;
    for (std::size_t g = 1; g <= pres.generators; ++g) {
      for (int sgn : {+1, -1}) {
        int c = CosetTable::col(sgn * static_cast<int>(g));
        if (table.entry(a, c) >= 0) continue;
        int n = table.new_coset();
        if (n < 0) {
          if (cosets_used) *cosets_used = table.size();
          return std::nullopt;
        }
        table.set_edge(a, c, n);
      }
    }
  }
  if (cosets_used) *cosets_used = table.size();
  if (!table.verified_complete(pres.relators)) return std::nullopt;
  return table.live();
}

AbelianGroup abelianization(const GroupPresentation& pres) {
  IntMat m(pres.generators, pres.relators.size());
  for (std::size_t j = 0; j < pres.relators.size(); ++j)
    for (int letter : pres.relators[j]) {
      std::size_t g = static_cast<std::size_t>(letter > 0 ? letter : -letter) - 1;
      m.at(g, j) += letter > 0 ? 1 : -1;
    }
  return cokernel(m);
}

Pi1Report pi1_report(const Handlebody& h, std::size_t max_cosets) {
  h.validate();
  Pi1Report rep;
  rep.presentation.generators = h.holes;
  for (const auto& handle : h.handles) {
    std::vector<int> w(handle.over.begin(), handle.over.end());
    rep.presentation.relators.push_back(std::move(w));
  }
  rep.abelianized = abelianization(rep.presentation);
  rep.order = todd_coxeter_order(rep.presentation, max_cosets, &rep.cosets_used);
  return rep;
}

}  // namespace starsurgery
