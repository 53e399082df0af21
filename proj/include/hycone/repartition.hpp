#pragma once

#include "hycone/base.hpp"

namespace hycone {

// n+2 lattice points with their unique affine relation; the two
// triangulations drop one point of S_plus / S_minus per simplex.
struct RepartitionConfig {
  int n = 0;
  std::vector<IVec> points;  // n+2 points in Z^n
  IVec alpha;                // primitive, sum 0, sum alpha_i points_i = 0
  std::vector<int> s_plus, s_minus;
  bool degenerate = false;  // some alpha_i = 0: that point lies on a facet
                            // hyperplane of the opposite simplex
};

// Normalized volume |det| of the edge vectors of n+1 points in Z^n;
// 0 iff affinely dependent.
Int simplex_volume(const std::vector<IVec>& points);

// Primitive integer alpha with sum(alpha) = 0 and sum(alpha_i w_i) = 0,
// first nonzero entry positive. Requires the points to affinely span.
IVec affine_relation(const std::vector<IVec>& points);

RepartitionConfig make_config(const std::vector<IVec>& points);

struct Triangulation {
  std::vector<int> omitted;  // simplex k = all points except omitted[k]
  std::vector<Int> volumes;
};

// The two triangulations T_plus (omit i in S_plus) and T_minus; their
// volume sums agree. Degenerate configs are rejected.
std::pair<Triangulation, Triangulation> two_triangulations(
    const RepartitionConfig& config);

// Affine forms |w.v + kappa| giving the volume of the simplex obtained by
// replacing fixed point i with the unknown point v; the fixed simplex's own
// volume is the constant `fixed_volume`.
struct CandidateBox {
  int n = 0;
  std::vector<IVec> fixed;  // n+1 affinely independent points
  std::vector<std::pair<IVec, Int>> forms;  // (w_i, kappa_i) for each i
  Int fixed_volume;
};

CandidateBox cofactor_forms(const std::vector<IVec>& fixed_points);

// All v in Z^n with |form_i(v)| <= max_vol for every i, the fixed simplex
// itself achieving exactly max_vol; the fixed points are excluded. Sorted
// lexicographically. Errors when the forms do not bound a finite region.
std::vector<IVec> enum_candidates(const CandidateBox& box, const Int& max_vol);

}  // namespace hycone
