#include <random>

#include "doctest.h"
#include "hycone/graphs.hpp"

using namespace hycone;

namespace {

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(e));
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

}  // namespace

TEST_SUITE_BEGIN("graphs");

TEST_CASE("graph construction") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), hy_error);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), hy_error);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), hy_error);
  Graph k3 = Graph::complete(3);
  CHECK(k3.edges.size() == 3);
  CHECK(k3.edge_index(2, 1) == 2);
}

TEST_CASE("graph cuts") {
  CHECK(graph_cuts(Graph::complete(3)).size() == 4);  // zero cut included
  CHECK(graph_cuts(Graph(2, {{0, 1}})) ==
        std::vector<BVec>{{0}, {1}});
  // C_4 cuts have even weight; 8 distinct vectors
  auto c4 = graph_cuts(cycle_graph(4));
  CHECK(c4.size() == 8);
  for (const BVec& v : c4) {
    int w = 0;
    for (int x : v) w += x;
    CHECK(w % 2 == 0);
  }
}

TEST_CASE("cycle inequalities on the triangle") {
  Graph k3 = Graph::complete(3);
  std::vector<int> cyc{0, 1, 2};  // edges (0,1),(0,2),(1,2)
  // F = {(1,2)}: x12 - x01 - x02 <= 0, a triangle inequality
  EdgeIneq tri = cycle_ineq(k3, cyc, {2});
  CHECK(tri.coeff == QVec{Rat(-1), Rat(-1), Rat(1)});
  CHECK(tri.rhs == 0);
  CHECK(check_valid(tri, k3).valid);
  // F = C: the perimeter x01 + x02 + x12 <= 2
  EdgeIneq peri = cycle_ineq(k3, cyc, cyc);
  CHECK(peri.coeff == QVec{Rat(1), Rat(1), Rat(1)});
  CHECK(peri.rhs == 2);
  CHECK(check_valid(peri, k3).valid);
  CHECK_THROWS_AS(cycle_ineq(k3, cyc, {0, 1}), hy_error);  // even F
}

TEST_CASE("triangle lifted into C_5 equals the cycle inequality") {
  Graph c5 = cycle_graph(5);
  // terminals 0, 2, 3; P(0,2) = 0-1-2, P(0,3) = 0-4-3, P(2,3) = edge
  PathSystem sys;
  sys.terminals = {0, 2, 3};
  sys.paths[{0, 1}] = {0, 1, 2};
  sys.paths[{0, 2}] = {0, 4, 3};
  sys.paths[{1, 2}] = {2, 3};
  // triangle x_{t2,t3} - x_{t1,t2} - x_{t1,t3} <= 0 comes from b = (-1,1,1)
  PairIneq f = bineq_to_pair_ineq(BInequality({-1, 1, 1}));
  EdgeIneq lifted = lift_ineq(f, c5, sys);
  // the cycle inequality with F = {edge (2,3)}
  std::vector<int> cyc{c5.edge_index(0, 1), c5.edge_index(1, 2),
                       c5.edge_index(2, 3), c5.edge_index(3, 4),
                       c5.edge_index(0, 4)};
  EdgeIneq m = cycle_ineq(c5, cyc, {c5.edge_index(2, 3)});
  CHECK(lifted.coeff == m.coeff);
  CHECK(lifted.rhs == m.rhs);
  CHECK(check_valid(lifted, c5).valid);
}

TEST_CASE("identity lift keeps the inequality") {
  Graph k4 = Graph::complete(4);
  PathSystem sys;
  sys.terminals = {0, 1, 2, 3};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) sys.paths[{i, j}] = {i, j};
  PairIneq f = bineq_to_pair_ineq(BInequality({1, 1, -1, 0}));
  EdgeIneq lifted = lift_ineq(f, k4, sys);
  CHECK(lifted.coeff == f.coeff);
  CHECK(lifted.rhs == f.rhs);
}

TEST_CASE("lift validation errors") {
  Graph c5 = cycle_graph(5);
  PathSystem sys;
  sys.terminals = {0, 2, 3};
  sys.paths[{0, 1}] = {0, 1, 2};
  sys.paths[{0, 2}] = {0, 4, 3};
  sys.paths[{1, 2}] = {2, 3};
  // positive coefficient on a long path
  PairIneq bad = bineq_to_pair_ineq(BInequality({-1, 1, 1}));
  std::swap(bad.coeff[0], bad.coeff[2]);  // positive weight now on pair (0,1)
  CHECK_THROWS_AS(lift_ineq(bad, c5, sys), hy_error);
  // overlapping paths
  PathSystem overlap = sys;
  overlap.paths[{0, 2}] = {0, 1, 2, 3};
  CHECK_THROWS_AS(lift_ineq(bineq_to_pair_ineq(BInequality({-1, 1, 1})), c5,
                            overlap),
                  hy_error);
}

TEST_CASE("pentagonal inequality lifted into a subdivided K_5") {
  // negative-coefficient edges subdivided once; positive pairs stay edges
  BInequality penta({1, 1, 1, -1, -1});
  PairIneq f = bineq_to_pair_ineq(penta);
  std::vector<std::pair<int, int>> edges;
  PathSystem sys;
  sys.terminals = {0, 1, 2, 3, 4};
  int next = 5;
  int k = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j, ++k) {
      if (f.coeff[k] > 0) {
        edges.emplace_back(i, j);
        sys.paths[{i, j}] = {i, j};
      } else {
        edges.emplace_back(i, next);
        edges.emplace_back(next, j);
        sys.paths[{i, j}] = {i, next, j};
        ++next;
      }
    }
  Graph g(next, std::move(edges));
  CHECK(g.n == 11);  // 5 terminals plus one subdivision point per cross pair
  EdgeIneq lifted = lift_ineq(f, g, sys);
  ValidityReport rep = check_valid(lifted, g, 2);
  CHECK(rep.valid);
}

TEST_CASE("check_valid rejects an unsatisfiable bound") {
  Graph e1(2, {{0, 1}});
  EdgeIneq q;
  q.coeff = {Rat(-1)};
  q.rhs = -1;  // -x_e <= -1 fails on the zero cut
  ValidityReport rep = check_valid(q, e1);
  CHECK(!rep.valid);
  CHECK(rep.max_value == 0);
}

TEST_CASE("metp_graph restricted to K_n matches the triangle/perimeter family") {
  for (int n : {3, 4}) {
    Graph kn = Graph::complete(n);
    auto cycle_based = metp_graph(kn);
    // chordless cycles of K_n are the triangles: 4 inequalities per triple
    // plus the 2|E| bounds
    size_t expect = 4 * static_cast<size_t>(n * (n - 1) * (n - 2) / 6) +
                    2 * kn.edges.size();
    CHECK(cycle_based.size() == expect);
    auto fam = metp_family(n);
    // every family member appears among the cycle inequalities
    int found = 0;
    for (const BInequality& q : fam) {
      PairIneq f = bineq_to_pair_ineq(q);
      for (const EdgeIneq& e : cycle_based)
        if (e.coeff == f.coeff && e.rhs == f.rhs) {
          ++found;
          break;
        }
    }
    CHECK(found == static_cast<int>(fam.size()));
  }
}

TEST_CASE("cutp_equals_metp") {
  CHECK(cutp_equals_metp(Graph::complete(4)));
  CHECK(!cutp_equals_metp(Graph::complete(5)));
  CHECK(cutp_equals_metp(path_graph(4)));
}

TEST_CASE("randomized lifting property") {
  std::mt19937_64 rng(47);
  int done = 0;
  while (done < 60) {
    int n = 3 + static_cast<int>(rng() % 3);
    // a valid inequality on CUTP_n from the polytope families
    auto pool = gen_b_list(n, 2, BTarget::Polytope);
    const BInequality& q = pool[rng() % pool.size()].ineq;
    PairIneq f = bineq_to_pair_ineq(q);
    // random admissible path system: negative or zero pairs may be
    // subdivided while the vertex budget lasts
    std::vector<std::pair<int, int>> edges;
    PathSystem sys;
    for (int i = 0; i < n; ++i) sys.terminals.push_back(i);
    int next = n;
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++k) {
        bool subdivide = f.coeff[k] <= 0 && next < 13 && (rng() & 1);
        if (subdivide) {
          edges.emplace_back(i, next);
          edges.emplace_back(next, j);
          sys.paths[{i, j}] = {i, next, j};
          ++next;
        } else {
          edges.emplace_back(i, j);
          sys.paths[{i, j}] = {i, j};
        }
      }
    Graph g(next, std::move(edges));
    EdgeIneq lifted = lift_ineq(f, g, sys);
    CHECK(check_valid(lifted, g).valid);
    ++done;
  }
}

TEST_CASE("cut images: graph cuts restrict cut semimetrics of K_n") {
  Graph g = cycle_graph(5);
  auto gcuts = graph_cuts(g);
  for (const BVec& gc : gcuts) {
    bool found = false;
    for (const CutVec& c : cuts(5, true)) {
      BVec restricted(g.edges.size());
      for (size_t e = 0; e < g.edges.size(); ++e) {
        auto [u, v] = g.edges[e];
        restricted[e] =
            ((c.s_mask >> u) ^ (c.s_mask >> v)) & 1u;
      }
      if (restricted == gc) {
        found = true;
        break;
      }
    }
    CHECK(found);
  }
}

TEST_SUITE_END();
