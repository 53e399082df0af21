#include "hycone/graphs.hpp"

#include <algorithm>
#include <set>
#include <thread>

#include "hycone/polyhedra.hpp"

namespace hycone {

Graph::Graph(int n_, std::vector<std::pair<int, int>> edges_) : n(n_) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges_) {
    if (u == v) throw hy_error("graph: loop edge");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw hy_error("graph: vertex out of range");
    if (!seen.insert({u, v}).second) throw hy_error("graph: multi-edge");
  }
  edges.assign(seen.begin(), seen.end());
}

int Graph::edge_index(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges.begin());
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

std::vector<BVec> graph_cuts(const Graph& g) {
  std::set<BVec> seen;
  for (uint32_t mask = 0; mask < (1u << (g.n - 1)); ++mask) {
    uint32_t s = mask << 1;
    BVec v(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e)
      v[e] = ((s >> g.edges[e].first) ^ (s >> g.edges[e].second)) & 1u;
    seen.insert(std::move(v));
  }
  return {seen.begin(), seen.end()};
}

EdgeIneq cycle_ineq(const Graph& g, const std::vector<int>& cycle,
                    const std::vector<int>& f_subset) {
  if (f_subset.size() % 2 == 0)
    throw hy_error("cycle_ineq: F must have odd size");
  std::set<int> cset(cycle.begin(), cycle.end());
  EdgeIneq out;
  out.coeff.assign(g.edges.size(), Rat(0));
  for (int e : cycle) out.coeff[e] = -1;
  for (int e : f_subset) {
    if (!cset.count(e)) throw hy_error("cycle_ineq: F not inside C");
    out.coeff[e] = 1;
  }
  out.rhs = Rat(static_cast<long long>(f_subset.size()) - 1);
  return out;
}

PairIneq bineq_to_pair_ineq(const BInequality& q) {
  PairIneq f;
  f.n = q.n();
  f.coeff.assign(pair_count(q.n()), Rat(0));
  int k = 0;
  for (int i = 0; i < q.n(); ++i)
    for (int j = i + 1; j < q.n(); ++j, ++k)
      f.coeff[k] = 1LL * q.b[i] * q.b[j];
  f.rhs = Rat(q.rhs());
  return f;
}

EdgeIneq lift_ineq(const PairIneq& f, const Graph& g, const PathSystem& sys) {
  int n = f.n;
  if (static_cast<int>(sys.terminals.size()) != n)
    throw hy_error("lift_ineq: terminal count mismatch");
  EdgeIneq out;
  out.coeff.assign(g.edges.size(), Rat(0));
  out.rhs = f.rhs;
  std::set<int> used_edges;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) {
      auto it = sys.paths.find({i, j});
      if (it == sys.paths.end())
        throw hy_error("lift_ineq: missing path for a pair");
      const std::vector<int>& p = it->second;
      if (p.size() < 2 || p.front() != sys.terminals[i] ||
          p.back() != sys.terminals[j])
        throw hy_error("lift_ineq: path endpoints do not match terminals");
      if (f.coeff[k] > 0 && p.size() != 2)
        throw hy_error("lift_ineq: positive coefficient on a non-edge path");
      for (size_t t = 0; t + 1 < p.size(); ++t) {
        int e = g.edge_index(p[t], p[t + 1]);
        if (e < 0) throw hy_error("lift_ineq: path uses a non-edge");
        if (!used_edges.insert(e).second)
          throw hy_error("lift_ineq: paths are not edge-disjoint");
        out.coeff[e] += f.coeff[k];
      }
    }
  out.provenance = "lift";
  return out;
}

ValidityReport check_valid(const EdgeIneq& ineq, const Graph& g, int jobs) {
  if (g.n > 24) throw hy_error("check_valid: vertex budget exceeded");
  if (ineq.coeff.size() != g.edges.size())
    throw hy_error("check_valid: coefficient count mismatch");
  // scale to integers for the scan
  Int lcm = 1;
  for (const Rat& c : ineq.coeff) lcm = boost::multiprecision::lcm(lcm, rat_den(c));
  std::vector<long long> ic(ineq.coeff.size());
  for (size_t e = 0; e < ineq.coeff.size(); ++e)
    ic[e] = static_cast<long long>(
        Int(rat_num(ineq.coeff[e]) * (lcm / rat_den(ineq.coeff[e])))
            .convert_to<long long>());

  uint32_t total = 1u << (g.n - 1);
  int nworkers = std::max(1, std::min(jobs, 16));
  std::vector<std::pair<long long, uint32_t>> best(nworkers,
                                                   {LLONG_MIN, 0});
  auto scan = [&](int w, uint32_t lo, uint32_t hi) {
    long long bv = LLONG_MIN;
    uint32_t bm = 0;
    for (uint32_t mask = lo; mask < hi; ++mask) {
      uint32_t s = mask << 1;
      long long v = 0;
      for (size_t e = 0; e < g.edges.size(); ++e)
        if (((s >> g.edges[e].first) ^ (s >> g.edges[e].second)) & 1u)
          v += ic[e];
      if (v > bv || (v == bv && mask < bm)) {
        bv = v;
        bm = mask;
      }
    }
    best[w] = {bv, bm};
  };
  if (nworkers == 1) {
    scan(0, 0, total);
  } else {
    std::vector<std::thread> ts;
    uint32_t chunk = total / nworkers + 1;
    for (int w = 0; w < nworkers; ++w)
      ts.emplace_back(scan, w, std::min(total, w * chunk),
                      std::min(total, (w + 1) * chunk));
    for (auto& t : ts) t.join();
  }
  long long bv = LLONG_MIN;
  uint32_t bm = 0;
  for (auto& [v, m] : best)
    if (v > bv || (v == bv && m < bm)) bv = v, bm = m;

  ValidityReport rep;
  rep.max_value = Rat(Int(bv), lcm);
  rep.argmax_mask = bm << 1;
  rep.valid = rep.max_value <= ineq.rhs;
  return rep;
}

namespace {

// Chordless cycles as edge-index lists; each cycle found once (smallest
// vertex first, orientation fixed by the second vertex).
std::vector<std::vector<int>> chordless_cycles(const Graph& g) {
  if (g.n > 10) throw hy_error("metp_graph: cycle enumeration budget exceeded");
  std::vector<std::vector<int>> nbr(g.n);
  for (auto [u, v] : g.edges) {
    nbr[u].push_back(v);
    nbr[v].push_back(u);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::vector<bool> on_path(g.n, false);
  auto emit = [&]() {
    std::vector<int> es;
    for (size_t t = 0; t < path.size(); ++t)
      es.push_back(g.edge_index(path[t], path[(t + 1) % path.size()]));
    std::sort(es.begin(), es.end());
    out.push_back(std::move(es));
  };
  auto chord_free = [&](int v) {
    // v may only be adjacent to the path's last vertex and (for closing) the
    // first; any other adjacency is a chord.
    for (size_t t = 1; t + 1 < path.size(); ++t)
      if (g.adjacent(path[t], v)) return false;
    return true;
  };
  auto rec = [&](auto&& self, int v) -> void {
    int s = path.front();
    for (int w : nbr[v]) {
      if (w == s && path.size() >= 3) {
        // close the cycle; chordlessness of the closure needs no edge from
        // s into the middle of the path
        bool ok = true;
        for (size_t t = 2; t + 1 < path.size(); ++t)
          if (g.adjacent(s, path[t])) ok = false;
        if (ok && path[1] < path.back()) emit();
        continue;
      }
      if (w <= s || on_path[w]) continue;
      if (!chord_free(w)) continue;
      path.push_back(w);
      on_path[w] = true;
      self(self, w);
      on_path[w] = false;
      path.pop_back();
    }
  };
  for (int s = 0; s < g.n; ++s) {
    path.assign(1, s);
    on_path.assign(g.n, false);
    on_path[s] = true;
    rec(rec, s);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<EdgeIneq> metp_graph(const Graph& g) {
  std::vector<EdgeIneq> out;
  for (const auto& cyc : chordless_cycles(g)) {
    // all odd F inside the cycle
    size_t m = cyc.size();
    for (uint32_t fmask = 0; fmask < (1u << m); ++fmask) {
      if (__builtin_popcount(fmask) % 2 == 0) continue;
      std::vector<int> f;
      for (size_t t = 0; t < m; ++t)
        if ((fmask >> t) & 1u) f.push_back(cyc[t]);
      out.push_back(cycle_ineq(g, cyc, f));
    }
  }
  for (size_t e = 0; e < g.edges.size(); ++e) {
    EdgeIneq lo, hi;
    lo.coeff.assign(g.edges.size(), Rat(0));
    lo.coeff[e] = -1;
    lo.rhs = 0;  // -x_e <= 0
    hi.coeff.assign(g.edges.size(), Rat(0));
    hi.coeff[e] = 1;
    hi.rhs = 1;  // x_e <= 1
    out.push_back(std::move(lo));
    out.push_back(std::move(hi));
  }
  return out;
}

bool cutp_equals_metp(const Graph& g) {
  int ne = static_cast<int>(g.edges.size());
  std::vector<IVec> homog;
  for (const EdgeIneq& q : metp_graph(g)) {
    // a.x <= c as homogenized (c, -a), integral
    QVec h(ne + 1);
    h[0] = q.rhs;
    for (int e = 0; e < ne; ++e) h[e + 1] = -q.coeff[e];
    homog.push_back(primitive(integral_multiple(h)));
  }
  {
    IVec x0(ne + 1, Int(0));
    x0[0] = 1;
    homog.push_back(std::move(x0));
  }
  std::vector<IVec> rays = dual_rays(homog, ne + 1);
  std::set<BVec> cut_set;
  for (BVec& c : graph_cuts(g)) cut_set.insert(std::move(c));
  for (const IVec& r : rays) {
    if (r[0] == 0) throw hy_error("cutp_equals_metp: polytope is unbounded");
    if (r[0] != 1) return false;  // fractional vertex
    BVec v(ne);
    for (int e = 0; e < ne; ++e) {
      if (r[e + 1] != 0 && r[e + 1] != 1) return false;
      v[e] = static_cast<int>(r[e + 1].convert_to<long long>());
    }
    if (!cut_set.count(v)) return false;
  }
  return true;
}

}  // namespace hycone
