#pragma once

#include "hycone/base.hpp"
#include "hycone/mat.hpp"

namespace hycone {

// Pointed rational cone; both representations optional until computed.
// Vectors are primitive integer. When the cone is not full-dimensional,
// `equations` carries a basis of the orthogonal complement of its span and
// the facets are normals valid within the span.
struct PolyCone {
  int dim = 0;
  std::optional<std::vector<IVec>> facets;  // a.x >= 0
  std::optional<std::vector<IVec>> rays;
  std::vector<IVec> equations;
};

struct NonPointedError : hy_error {
  IVec lineality;
  explicit NonPointedError(IVec l)
      : hy_error("cone is not pointed; lineality direction " + ivec_str(l)),
        lineality(std::move(l)) {}
};

// Extreme rays of the intersection of the halfspaces a.x >= 0 by incremental
// double description; input must have full rank (pointed), else NonPointedError.
std::vector<IVec> dual_rays(const std::vector<IVec>& halfspaces, int dim);

// Fills in whichever representation is missing. Ray inputs that do not span
// get facets within their span plus the span equations.
void dd_convert(PolyCone& cone);

PolyCone cone_from_rays(int dim, std::vector<IVec> rays);
PolyCone cone_from_facets(int dim, std::vector<IVec> facets);

// Polytope as the x0 = 1 section of a homogenized cone. Facet vectors are
// homogenized: f = (f0, g) meaning f0 + g.x >= 0; equations likewise give
// the affine hull.
struct PolyTope {
  int ambient_dim = 0;
  int dim = 0;  // affine dimension
  std::vector<QVec> vertices;
  std::vector<IVec> facets;
  std::vector<IVec> equations;
};

PolyTope hull(const std::vector<QVec>& points);

// Vertices of the polytope {x : a.x <= c constraints}, given homogenized
// (f0, g) rows f0 + g.x >= 0; the polytope must be bounded and nonempty.
PolyTope polytope_from_inequalities(int ambient_dim, const std::vector<IVec>& homog);

// incidence[r][f]: ray r lies on facet f (exact zero).
std::vector<std::vector<bool>> incidence(const PolyCone& cone);

// Requires v to satisfy every facet; true iff the active normals span dim-1.
bool is_extreme_ray(const IVec& v, const std::vector<IVec>& facets, int dim);

bool are_adjacent(const IVec& r1, const IVec& r2, const PolyCone& cone);

struct AdjGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;
  int diameter() const;  // -1 when disconnected, 0 for a single vertex
};

AdjGraph skeleton(const PolyCone& cone);      // rays, adjacency by rank dim-2
AdjGraph ridge_graph(const PolyCone& cone);   // facets, via common rays
AdjGraph skeleton(const PolyTope& p);
AdjGraph ridge_graph(const PolyTope& p);

}  // namespace hycone
