#include "starsurgery/sw_pipeline.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace starsurgery {

namespace {

struct BoxRanges {
  std::vector<IntVec> values;  // per coordinate
  unsigned long total = 1;
};

BoxRanges adjunctive_box(const IntMat& gram9) {
  BoxRanges box;
  box.values.resize(9);
  for (std::size_t i = 0; i < 9; ++i) {
    Int sq = gram9.at(i, i);  // negative
    for (Int t = sq; t <= -sq; t += 2) box.values[i].push_back(t);
    box.total *= box.values[i].size();
  }
  return box;
}

void decode(unsigned long index, const BoxRanges& box, IntVec& tuple) {
  for (std::size_t i = 0; i < 9; ++i) {
    std::size_t s = box.values[i].size();
    tuple[i] = box.values[i][index % s];
    index /= s;
  }
}

// d = (q/det - 1)/4 integral, nonnegative, even?
bool dimension_ok(const Int& q, const Int& det, Rat* d_out = nullptr) {
  Int num = q - det;
  Int den = 4 * det;
  if (num % den != 0) return false;
  Int d = num / den;
  if (d_out) *d_out = Rat(d);
  return d >= 0 && d % 2 == 0;
}

struct StageTwoResult {
  unsigned long examined = 0;
  std::vector<IntVec> tuples;
};

StageTwoResult stage_one_two(const SearchBasis& basis, const BoxRanges& box,
                             unsigned long lo, unsigned long hi) {
  StageTwoResult out;
  IntVec t(9);
  Int q, term;
  for (unsigned long idx = lo; idx < hi; ++idx) {
    decode(idx, box, t);
    ++out.examined;
    q = 0;
    for (std::size_t i = 0; i < 9; ++i) {
      if (t[i] == 0) continue;
      term = basis.gram9_adj.at(i, i) * t[i];
      for (std::size_t j = i + 1; j < 9; ++j)
        if (t[j] != 0) term += 2 * basis.gram9_adj.at(i, j) * t[j];
      q += term * t[i];
    }
    if (dimension_ok(q, basis.gram9_det)) out.tuples.push_back(t);
  }
  return out;
}

}  // namespace

PipelineReport run_pipeline(const SearchBasis& basis, const std::vector<IntVec>& phi,
                            const BlowupClass& V, unsigned workers) {
  if (workers < 1) workers = 1;
  PipelineReport rep;
  BoxRanges box = adjunctive_box(basis.gram9);

  // Stages 1-2: sharded scan of the adjunctive box.
  std::vector<StageTwoResult> partial(workers);
  {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      unsigned long lo = box.total * w / workers;
      unsigned long hi = box.total * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] { partial[w] = stage_one_two(basis, box, lo, hi); });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<IntVec> stage2;
  for (auto& p : partial) {
    rep.counts.adjunctive += p.examined;
    stage2.insert(stage2.end(), p.tuples.begin(), p.tuples.end());
  }
  rep.counts.dimension = stage2.size();

  // Group by the complement part; the glued lift only depends on it.
  std::map<IntVec, std::vector<IntVec>> by_complement;  // B -> list of (t8,t9)
  for (const auto& t : stage2) {
    IntVec b(t.begin(), t.begin() + 7);
    IntVec a(t.begin() + 7, t.end());
    by_complement[b].push_back(a);
  }
  std::vector<const std::pair<const IntVec, std::vector<IntVec>>*> groups;
  groups.reserve(by_complement.size());
  for (const auto& kv : by_complement) groups.push_back(&kv);

  struct TailCounts {
    unsigned long n3 = 0, n4 = 0, n5 = 0, n6 = 0;
    std::vector<Survivor> survivors;
    std::vector<IntVec> on_wall;
  };
  auto run_tail = [&](std::size_t glo, std::size_t ghi) {
    TailCounts tc;
    IntVec rhs(12);
    for (std::size_t gi = glo; gi < ghi; ++gi) {
      const IntVec& B = groups[gi]->first;
      const auto& alist = groups[gi]->second;
      unsigned long mult = alist.size();
      for (const IntVec& C : phi) {
        tc.n3 += mult;
        for (std::size_t i = 0; i < 7; ++i) rhs[i] = B[i];
        for (std::size_t i = 0; i < 5; ++i) rhs[7 + i] = C[i];
        IntVec w = basis.lift_adj * rhs;  // l = w / lift_det
        // upstairs dimension: (l^2 + 2)/4 integral, >= 0, even with
        // l^2 = (w0^2 - sum wi^2)/det^2
        Int lsq_num = w[0] * w[0];
        for (std::size_t i = 1; i < 12; ++i) lsq_num -= w[i] * w[i];
        Int det2 = basis.lift_det * basis.lift_det;
        // (lsq/det2 + 2)/4 = (lsq + 2 det2) / (4 det2)
        Int num = lsq_num + 2 * det2;
        Int den = 4 * det2;
        if (num % den != 0) continue;
        Int d = num / den;
        if (d < 0 || d % 2 != 0) continue;
        tc.n4 += mult;
        bool integral_char = true;
        for (std::size_t i = 0; i < 12 && integral_char; ++i) {
          if (w[i] % basis.lift_det != 0) {
            integral_char = false;
            break;
          }
          Int coord = w[i] / basis.lift_det;
          if (coord % 2 == 0) integral_char = false;
        }
        if (!integral_char) continue;
        tc.n5 += mult;
        // wall test: sign of <l, V> against sign of <l, h>
        Int pv = w[0] * V.coeffs[0];
        for (std::size_t i = 1; i < 12; ++i) pv -= w[i] * V.coeffs[i];
        Int ph = w[0];
        if (basis.lift_det < 0) {
          pv = -pv;
          ph = -ph;
        }
        if (pv == 0) {
          IntVec bad(B);
          bad.insert(bad.end(), C.begin(), C.end());
          tc.on_wall.push_back(bad);
          continue;
        }
        if (sign(pv) == sign(ph)) continue;
        tc.n6 += mult;
        RatVec lifted(12);
        for (std::size_t i = 0; i < 12; ++i)
          lifted[i] = make_rat(w[i], basis.lift_det);
        for (const IntVec& A : alist) {
          Survivor s;
          s.tuple = B;
          s.tuple.insert(s.tuple.end(), A.begin(), A.end());
          s.glue = C;
          s.lifted = lifted;
          Int q(0);
          for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < 9; ++j)
              q += s.tuple[i] * basis.gram9_adj.at(i, j) * s.tuple[j];
          s.d = (make_rat(q, basis.gram9_det) - 1) / 4;
          tc.survivors.push_back(std::move(s));
        }
      }
    }
    return tc;
  };

  std::vector<TailCounts> tails(workers);
  {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t glo = groups.size() * w / workers;
      std::size_t ghi = groups.size() * (w + 1) / workers;
      pool.emplace_back([&, w, glo, ghi] { tails[w] = run_tail(glo, ghi); });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<IntVec> on_wall;
  for (auto& tc : tails) {
    rep.counts.triples += tc.n3;
    rep.counts.upstairs_dimension += tc.n4;
    rep.counts.integral_characteristic += tc.n5;
    rep.counts.wall_crossed += tc.n6;
    rep.survivors.insert(rep.survivors.end(), tc.survivors.begin(), tc.survivors.end());
    on_wall.insert(on_wall.end(), tc.on_wall.begin(), tc.on_wall.end());
  }
  if (!on_wall.empty())
    throw Error(ErrorCode::WallAmbiguity,
                std::to_string(on_wall.size()) +
                    " candidate classes pair to zero against the chamber vector");
  std::sort(rep.survivors.begin(), rep.survivors.end());
  return rep;
}

}  // namespace starsurgery
