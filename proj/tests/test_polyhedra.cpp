#include <random>
#include <set>

#include "doctest.h"
#include "hycone/hypfamilies.hpp"
#include "hycone/polyhedra.hpp"
#include "hycone/symmetry.hpp"

using namespace hycone;

namespace {

std::vector<IVec> cut_rays(int n) {
  std::vector<IVec> out;
  for (const CutVec& c : cuts(n, false)) out.push_back(to_ivec(c.delta()));
  return out;
}

// Cone facet vector of a homogeneous b-inequality: a_e = -b_i b_j, a.d >= 0.
IVec bineq_facet(const BInequality& q) {
  int n = q.n();
  IVec a(pair_count(n));
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) a[k] = -q.b[i] * q.b[j];
  return a;
}

std::vector<IVec> met_facets(int n) {
  std::vector<IVec> out;
  for (const BInequality& q : met_family(n)) out.push_back(bineq_facet(q));
  return out;
}

std::vector<QVec> cut_points(int n) {
  std::vector<QVec> out;
  for (const CutVec& c : cuts(n, true)) out.push_back(to_qvec(to_ivec(c.delta())));
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("polyhedra");

TEST_CASE("coordinate axes cone") {
  std::vector<IVec> axes{{Int(1), Int(0), Int(0)},
                         {Int(0), Int(1), Int(0)},
                         {Int(0), Int(0), Int(1)}};
  PolyCone c = cone_from_rays(3, axes);
  dd_convert(c);
  CHECK(c.facets->size() == 3);
  // two rays of a simplicial cone are always adjacent
  CHECK(are_adjacent(axes[0], axes[1], c));
}

TEST_CASE("CUT_3 and CUT_4 conversions") {
  PolyCone c3 = cone_from_rays(3, cut_rays(3));
  dd_convert(c3);
  CHECK(c3.facets->size() == 3);
  auto inc3 = incidence(c3);
  for (size_t f = 0; f < 3; ++f) {
    int cnt = 0;
    for (size_t r = 0; r < 3; ++r) cnt += inc3[r][f];
    CHECK(cnt == 2);
  }

  PolyCone c4 = cone_from_rays(6, cut_rays(4));
  dd_convert(c4);
  CHECK(c4.facets->size() == 12);

  // facet side back to rays
  PolyCone back = cone_from_facets(6, *c4.facets);
  dd_convert(back);
  CHECK(*back.rays == *cone_from_rays(6, cut_rays(4)).rays);

  // every facet of CUT_4 is a simplicial facet on 5 of the 7 rays
  auto inc4 = incidence(c4);
  for (size_t f = 0; f < 12; ++f) {
    int cnt = 0;
    for (size_t r = 0; r < 7; ++r) cnt += inc4[r][f];
    CHECK(cnt == 5);
  }
}

TEST_CASE("CUT_5 conversion") {
  PolyCone c5 = cone_from_rays(10, cut_rays(5));
  dd_convert(c5);
  CHECK(c5.facets->size() == 40);
  auto parts = orbit_partition_pairs_sym(*c5.facets, 5);
  CHECK(parts.size() == 2);
  std::multiset<size_t> sizes;
  for (auto& p : parts) sizes.insert(p.size());
  CHECK(sizes == std::multiset<size_t>{10, 30});
}

TEST_CASE("MET_4 and MET_5 extreme rays") {
  PolyCone m4 = cone_from_facets(6, met_facets(4));
  dd_convert(m4);
  CHECK(m4.rays->size() == 7);
  CHECK(*m4.rays == *cone_from_rays(6, cut_rays(4)).rays);

  PolyCone m5 = cone_from_facets(10, met_facets(5));
  dd_convert(m5);
  CHECK(m5.rays->size() == 25);
  auto parts = orbit_partition_pairs_sym(*m5.rays, 5);
  CHECK(parts.size() == 3);
}

TEST_CASE("hull basics") {
  std::vector<QVec> square{{Rat(0), Rat(0)}, {Rat(1), Rat(0)},
                           {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
  PolyTope p = hull(square);
  CHECK(p.dim == 2);
  CHECK(p.facets.size() == 4);
  CHECK(p.vertices.size() == 4);
  CHECK(p.equations.empty());

  // interior points are not vertices
  std::vector<QVec> with_center = square;
  with_center.push_back({Rat(1, 2), Rat(1, 2)});
  CHECK(hull(with_center).vertices.size() == 4);
}

TEST_CASE("degenerate hull reports its affine hull") {
  std::vector<QVec> line{{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}};
  PolyTope p = hull(line);
  CHECK(p.dim == 1);
  CHECK(p.vertices.size() == 2);
  CHECK(!p.equations.empty());
}

TEST_CASE("cut polytope hulls") {
  PolyTope p4 = hull(cut_points(4));
  CHECK(p4.facets.size() == 16);
  CHECK(p4.vertices.size() == 8);
  CHECK(p4.dim == 6);

  PolyTope p5 = hull(cut_points(5));
  CHECK(p5.facets.size() == 56);
  CHECK(p5.vertices.size() == 16);
}

TEST_CASE("extreme ray test") {
  PolyCone c4 = cone_from_rays(6, cut_rays(4));
  dd_convert(c4);
  IVec d1 = to_ivec(CutVec{4, CutVec::normalize(1, 4)}.delta());
  IVec d2 = to_ivec(CutVec{4, CutVec::normalize(2, 4)}.delta());
  CHECK(is_extreme_ray(d1, *c4.facets, 6));
  IVec mid(d1.size());
  for (size_t i = 0; i < d1.size(); ++i) mid[i] = d1[i] + d2[i];
  CHECK(!is_extreme_ray(mid, *c4.facets, 6));
  IVec bad(d1.size(), Int(0));
  bad[0] = -1;
  CHECK_THROWS_AS(is_extreme_ray(bad, *c4.facets, 6), hy_error);
  // all 31 nonzero cuts are extreme in the facet description of CUT_6 --
  // checked in the acceptance suite where the 210 facets are computed.
}

TEST_CASE("skeleton of CUTP_4 is complete, ridge graph of MET_4 has diameter 2") {
  PolyTope p4 = hull(cut_points(4));
  AdjGraph sk = skeleton(p4);
  CHECK(sk.n == 8);
  for (int i = 0; i < sk.n; ++i) CHECK(sk.adj[i].size() == 7);
  CHECK(sk.diameter() == 1);

  PolyCone m4 = cone_from_facets(6, met_facets(4));
  dd_convert(m4);
  AdjGraph rg = ridge_graph(m4);
  CHECK(rg.n == 12);
  CHECK(rg.diameter() == 2);
}

TEST_CASE("skeleton of CUTP_5 is complete") {
  PolyTope p5 = hull(cut_points(5));
  AdjGraph sk = skeleton(p5);
  CHECK(sk.n == 16);
  CHECK(sk.diameter() == 1);
}

TEST_CASE("non-pointed inputs are rejected with a lineality direction") {
  std::vector<IVec> half{{Int(1), Int(0)}};  // halfspace in the plane
  CHECK_THROWS_AS(dual_rays(half, 2), NonPointedError);
  try {
    dual_rays(half, 2);
  } catch (const NonPointedError& e) {
    CHECK(dot(e.lineality, half[0]) == 0);
  }
  // rays spanning a line
  std::vector<IVec> line{{Int(1), Int(1)}, {Int(-1), Int(-1)}, {Int(1), Int(0)}};
  PolyCone c = cone_from_rays(2, line);
  CHECK_THROWS_AS(dd_convert(c), NonPointedError);
}

TEST_CASE("round trip on random extreme ray sets") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 12) {
    int dim = 3 + static_cast<int>(rng() % 3);
    int m = dim + 1 + static_cast<int>(rng() % 4);
    std::vector<IVec> gens;
    for (int i = 0; i < m; ++i) {
      IVec v(dim);
      // strictly positive first coordinate keeps the cone pointed
      v[0] = 1 + static_cast<int>(rng() % 3);
      for (int c = 1; c < dim; ++c) v[c] = static_cast<int>(rng() % 7) - 3;
      gens.push_back(std::move(v));
    }
    PolyCone c = cone_from_rays(dim, gens);
    if (rank(Mat::from_int_rows(*c.rays)) < dim) continue;
    dd_convert(c);
    // normalize generators to the extreme subset, then round trip exactly
    std::vector<IVec> extreme;
    for (const IVec& v : *c.rays)
      if (is_extreme_ray(v, *c.facets, dim)) extreme.push_back(v);
    PolyCone c2 = cone_from_rays(dim, extreme);
    dd_convert(c2);
    CHECK(*c2.facets == *c.facets);
    PolyCone c3 = cone_from_facets(dim, *c2.facets);
    dd_convert(c3);
    CHECK(*c3.rays == *cone_from_rays(dim, extreme).rays);
    // every output ray/facet pair evaluates >= 0
    for (const IVec& r : *c3.rays)
      for (const IVec& f : *c2.facets) CHECK(dot(r, f) >= 0);
    ++done;
  }
}

TEST_CASE("irredundancy: removing any facet of CUT_4 changes the ray set") {
  PolyCone c4 = cone_from_rays(6, cut_rays(4));
  dd_convert(c4);
  for (size_t drop = 0; drop < c4.facets->size(); ++drop) {
    std::vector<IVec> sub;
    for (size_t f = 0; f < c4.facets->size(); ++f)
      if (f != drop) sub.push_back((*c4.facets)[f]);
    auto rays = dual_rays(sub, 6);
    CHECK(rays.size() != cone_from_rays(6, cut_rays(4)).rays->size());
  }
}

TEST_CASE("incidence counts are constant on facet orbits of CUT_5") {
  PolyCone c5 = cone_from_rays(10, cut_rays(5));
  dd_convert(c5);
  auto inc = incidence(c5);
  auto parts = orbit_partition_pairs_sym(*c5.facets, 5);
  for (const auto& orbit : parts) {
    int expect = -1;
    for (int f : orbit) {
      int cnt = 0;
      for (size_t r = 0; r < c5.rays->size(); ++r) cnt += inc[r][f];
      if (expect < 0) expect = cnt;
      CHECK(cnt == expect);
    }
  }
}

TEST_SUITE_END();
