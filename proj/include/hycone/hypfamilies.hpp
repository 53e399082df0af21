#pragma once

#include <cstdint>
#include <functional>

#include "hycone/base.hpp"

namespace hycone {

// Pair-indexed distance vector d on n points, lexicographic pair order.
struct DistVec {
  int n = 0;
  QVec d;

  DistVec() = default;
  DistVec(int n_, QVec d_);
  const Rat& at(int i, int j) const {
    return d[i < j ? pair_index(i, j, n) : pair_index(j, i, n)];
  }
  Rat& at(int i, int j) {
    return d[i < j ? pair_index(i, j, n) : pair_index(j, i, n)];
  }
};

// Cut semimetric delta_S; S is kept modulo complement with point 0 excluded.
struct CutVec {
  int n = 0;
  uint32_t s_mask = 0;  // bit i set <=> point i in S; bit 0 always clear

  BVec delta() const;       // 0/1 vector of length C(n,2)
  DistVec dist() const;
  static uint32_t normalize(uint32_t mask, int n);
};

// All cut semimetrics modulo complement, ordered by normalized mask.
std::vector<CutVec> cuts(int n, bool include_zero);

// Hypermetric inequality sum b_i b_j d(i,j) <= s(s+1), sum(b) = 2s+1 odd.
struct BInequality {
  BVec b;
  long long s = 0;

  BInequality() = default;
  explicit BInequality(BVec b_);  // rejects even coordinate sum
  int n() const { return static_cast<int>(b.size()); }
  long long rhs() const { return s * (s + 1); }
  bool homogeneous() const { return rhs() == 0; }
  // Identically-zero left-hand side (at most one nonzero coefficient).
  bool trivial() const;
  // k for a {0,+-1}-valued b with k+1 ones and k minus ones; -1 otherwise.
  int gonal_k() const;
  bool operator==(const BInequality& o) const { return b == o.b; }
};

Rat eval_hyp(const BInequality& q, const DistVec& d);

// t(2s+1-t) with t = sum of b over S; equals eval_hyp(q, delta_S).
long long eval_on_cut(const BInequality& q, const CutVec& cut);

// Number of cuts (modulo complement) tight on q, i.e. with t in {s, s+1}.
long long cut_incidence_count(const BInequality& q, bool include_zero);

// Rank of the incident cut semimetrics as vectors in R^{C(n,2)}.
int cut_rank(const BInequality& q, int n);

enum class BTarget { Cone, Polytope };

struct GenB {
  BInequality ineq;  // coordinates sorted ascending (Sym-canonical), sum >= 1
  bool trivial;
  int gonal_k;  // -1 when not {0,+-1}-valued
};

// Streams one representative per Sym(n)-orbit (per switching class when
// per_switching_class is set) of all b with |b_i| <= max_abs and coordinate
// sum 1 (cone) or odd (polytope), ascending lexicographic order.
void gen_b(int n, int max_abs, BTarget target, bool per_switching_class,
           const std::function<void(const GenB&)>& emit);

std::vector<GenB> gen_b_list(int n, int max_abs, BTarget target,
                             bool per_switching_class = false);

// 3*C(n,3) triangle inequalities; metp adds the C(n,3) perimeter inequalities.
std::vector<BInequality> met_family(int n);
std::vector<BInequality> metp_family(int n);

// Switching U_S: d(i,j) -> 1 - d(i,j) across the cut S. An involution.
DistVec switch_dist(const DistVec& d, uint32_t s_mask);

// b -> -b on S with the right-hand side recomputed from the new sum.
BInequality switch_ineq(const BInequality& q, uint32_t s_mask);

}  // namespace hycone
