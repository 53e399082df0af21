#pragma once

#include <variant>

#include "hycone/hypfamilies.hpp"
#include "hycone/mat.hpp"

namespace hycone {

// Quadratic form on Z^{n-1} attached to a distance on n points via
// q_ii = d(1,i+1), q_ij = (d(1,i+1) + d(1,j+1) - d(i+1,j+1)) / 2.
struct QuadForm {
  int m = 0;
  Mat q;

  Rat operator()(const QVec& v) const;  // v^T q v
};

QuadForm covariance_form(const DistVec& d);
DistVec covariance_inverse(const QuadForm& q);

struct Circumsphere {
  QVec center;
  Rat r2;
};

// Center of the sphere through 0, e_1, ..., e_m: (q c)_i = q_ii / 2,
// r^2 = c^T q c. Positive definite forms only.
Circumsphere circumsphere(const QuadForm& q);

// All x in Z^m with q[x - c] < bound (strict) or <= bound. Exact: integer
// ranges per enumeration level are found by rational comparisons, no square
// roots. Output sorted lexicographically.
std::vector<IVec> cvp_enum(const QuadForm& q, const QVec& center,
                           const Rat& bound, bool strict);

// Minimizer of q[x - c] among points with value < bound (or <= bound),
// shrinking the search radius as better points are found; lexicographically
// least among ties. Nullopt when no such point exists.
struct CvpPoint {
  IVec x;
  Rat value;
};
std::optional<CvpPoint> cvp_min(const QuadForm& q, const QVec& center,
                                const Rat& bound, bool strict);

struct Member {};
struct Violated {
  BInequality witness;
  Rat amount;  // eval_hyp(witness, d) - rhs(witness) > 0, exact
};
using MembershipResult = std::variant<Member, Violated>;

inline bool is_member(const MembershipResult& r) {
  return std::holds_alternative<Member>(r);
}

// d in HYP_n: no b with sum 1 violates sum b_i b_j d_ij <= 0. Degenerate
// covariance forms are handled on the quotient by the saturated integer
// kernel; indefinite ones by scaling a negative direction.
MembershipResult member_hyp(const DistVec& d);

// d in HYPP_n: all odd-sum b satisfy sum b_i b_j d_ij <= s(s+1). Reduced to
// a CVP over the coset e_1 + {x : sum x_i even}.
MembershipResult member_hypp(const DistVec& d);

// Largest lambda with lambda*d in HYPP_n, for d in HYP_n, d != 0. Each
// violated witness tightens the scale until membership holds.
Rat max_scale(const DistVec& d);

struct NoCircumsphereError : hy_error {
  explicit NoCircumsphereError(const std::string& m) : hy_error(m) {}
};

// True iff no lattice point lies strictly inside the common circumsphere of
// the given points. The center must exist and be unique (points affinely
// spanning); otherwise NoCircumsphereError.
bool is_empty_sphere(const QuadForm& q, const std::vector<IVec>& points);

DistVec scale_dist(const DistVec& d, const Rat& lambda);

}  // namespace hycone
