#pragma once

#include "hycone/base.hpp"
#include "hycone/hypfamilies.hpp"

namespace hycone {

// Sym(n), or ARes(n) = Sym(n) extended by the 2^{n-1} switchings.
enum class Group { Sym, ARes };

Int group_order(Group g, int n);

// n! / prod(multiplicities!), the Sym(n)-orbit size of v as a multiset.
long long orbit_size_sym(const BVec& v, int n);

// sigma acting on a pair-indexed vector: result[pair(s(i),s(j))] = v[pair(i,j)].
QVec act_perm_pairs(const BVec& perm, const QVec& v, int n);
IVec act_perm_pairs(const BVec& perm, const IVec& v, int n);

// Switching U_S on a pair-indexed point: x -> 1-x on the cut pairs of S.
QVec act_switch_pairs(uint32_t s_mask, const QVec& v, int n);

// Inequality f0 + g.x >= 0 under switching: g flips sign on delta(S) and f0
// absorbs the switched part. Permutations just permute g.
IVec act_switch_homog_ineq(uint32_t s_mask, const IVec& f, int n);
IVec act_perm_homog_ineq(const BVec& perm, const IVec& f, int n);

// b-inequalities are handled modulo the global sign flip (b,rhs) ~ (-b,rhs).
BVec bineq_sign_normal(BVec b);

struct OrbitSummary {
  QVec canonical;
  long long size = 0;
  Int stabilizer_order;
  std::vector<QVec> members;  // optional (empty when not requested)
};

struct BOrbitSummary {
  BVec canonical;  // per-action canonical form of the class representative
  long long size = 0;
  Int stabilizer_order;
  std::vector<BVec> members;  // sign-normalized, optional
};

// Orbit of a pair-indexed vector (distance-style action).
OrbitSummary orbit_pairs(const QVec& v, int n, Group g, bool with_members);

// Orbit of a b-inequality modulo global sign.
BOrbitSummary orbit_bineq(const BInequality& q, Group g, bool with_members);

// Closed-form size of the ARes class of q modulo global sign:
// orbit_size_sym(|b|) * 2^{nnz-1}.
long long ares_class_size(const BInequality& q);

// Canonical forms. Pair-indexed vectors canonicalize to the greatest image
// (so cut vectors land on the delta_{{1}} representative); b-vectors to the
// least (ascending coordinate sort; under ARes additionally the all-negative
// signing, since switchings reach every sign pattern).
QVec canonical_pairs(const QVec& v, int n, Group g);
BVec canonical_bineq(const BInequality& q, Group g);

struct SymOrbitInfo {
  BInequality rep;  // ascending-sorted coordinates, positive sum
  long long size = 0;
};

struct AresClass {
  BVec abs_signature;                // sorted |b_i|
  std::vector<SymOrbitInfo> sym_orbits;
  long long total_size = 0;          // members modulo global sign
  std::vector<int> input_indices;    // which input reps fell into this class
  std::vector<int> homogeneous;      // sym_orbits indices with rhs == 0
};

// Partition of pairwise Sym-inequivalent representatives into switching
// classes, each expanded into its full Sym-orbit decomposition.
std::vector<AresClass> merge_classes(const std::vector<BInequality>& reps);

// Orbit partitions of closed sets (indices grouped per orbit, each group
// sorted, groups ordered by smallest index).
std::vector<std::vector<int>> orbit_partition_pairs_sym(
    const std::vector<IVec>& vecs, int n);
std::vector<std::vector<int>> orbit_partition_homog_ares(
    const std::vector<IVec>& facets, int n);
std::vector<std::vector<int>> orbit_partition_points_ares(
    const std::vector<QVec>& pts, int n);

}  // namespace hycone
