#pragma once

#include <map>

#include "hycone/base.hpp"
#include "hycone/hypfamilies.hpp"

namespace hycone {

// Simple undirected graph, 0-based vertices, edges stored with i < j.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  Graph(int n_, std::vector<std::pair<int, int>> edges_);
  int edge_index(int u, int v) const;  // -1 when absent
  bool adjacent(int u, int v) const { return edge_index(u, v) >= 0; }
  static Graph complete(int n);
};

// Restrictions of the cut semimetrics to E, deduplicated (distinct S can
// coincide on E when G is disconnected), sorted.
std::vector<BVec> graph_cuts(const Graph& g);

struct EdgeIneq {
  QVec coeff;  // one per edge of the graph it lives on
  Rat rhs;
  std::string provenance;
};

// Cycle inequality m_{C,F}: x(F) - x(C \ F) <= |F| - 1 for odd F inside the
// cycle C (edge index lists).
EdgeIneq cycle_ineq(const Graph& g, const std::vector<int>& cycle,
                    const std::vector<int>& f_subset);

// Inequality on K_n in pair coordinates together with its right-hand side.
struct PairIneq {
  int n = 0;
  QVec coeff;  // length C(n,2)
  Rat rhs;
};

PairIneq bineq_to_pair_ineq(const BInequality& q);

// Terminals v_1..v_n in G and one path per pair; paths must be pairwise
// edge-disjoint, and pairs with positive coefficient must be single edges.
struct PathSystem {
  std::vector<int> terminals;
  std::map<std::pair<int, int>, std::vector<int>> paths;  // vertex sequences
};

EdgeIneq lift_ineq(const PairIneq& f, const Graph& g, const PathSystem& sys);

struct ValidityReport {
  bool valid = false;
  Rat max_value;
  uint32_t argmax_mask = 0;  // cut achieving the maximum (mod complement)
};

// Brute force over all 2^{n-1} cuts; n <= 24. Workers split the mask range.
ValidityReport check_valid(const EdgeIneq& ineq, const Graph& g, int jobs = 1);

// All cycle inequalities over chordless cycles plus the 0 <= x_e <= 1
// bounds; needs few enough vertices to enumerate cycles (n <= 10).
std::vector<EdgeIneq> metp_graph(const Graph& g);

// Exact test: every vertex of the cycle-inequality polytope is a cut vector.
bool cutp_equals_metp(const Graph& g);

}  // namespace hycone
