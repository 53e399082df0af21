#include "hycone/polyhedra.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <deque>

namespace hycone {

namespace {

using Bits = boost::dynamic_bitset<>;

bool ivec_lt(const IVec& a, const IVec& b) { return lex_less(a, b); }

struct RayState {
  IVec v;
  Bits zero;  // zero set over already-processed constraints
};

IVec lineality_direction(const std::vector<IVec>& rows, int dim) {
  std::vector<IVec> nonzero;
  for (const IVec& r : rows)
    if (std::any_of(r.begin(), r.end(), [](const Int& x) { return x != 0; }))
      nonzero.push_back(r);
  if (nonzero.empty()) {
    IVec e(dim, Int(0));
    e[0] = 1;
    return e;
  }
  auto ker = kernel(Mat::from_int_rows(nonzero));
  if (ker.empty()) throw hy_error("internal: expected nontrivial kernel");
  return primitive_signed(integral_multiple(ker.front()));
}

}  // namespace

std::vector<IVec> dual_rays(const std::vector<IVec>& halfspaces, int dim) {
  std::vector<IVec> cons;
  for (const IVec& h : halfspaces) {
    if (static_cast<int>(h.size()) != dim) throw hy_error("constraint length != dim");
    if (std::all_of(h.begin(), h.end(), [](const Int& x) { return x == 0; })) continue;
    cons.push_back(primitive(h));
  }
  size_t nc = cons.size();

  // Greedy full-rank subset in input order seeds a simplicial cone.
  std::vector<int> basis;
  {
    std::vector<IVec> sel;
    for (size_t i = 0; i < nc && static_cast<int>(basis.size()) < dim; ++i) {
      sel.push_back(cons[i]);
      if (rank(Mat::from_int_rows(sel)) == static_cast<int>(sel.size()))
        basis.push_back(static_cast<int>(i));
      else
        sel.pop_back();
    }
    if (static_cast<int>(basis.size()) < dim)
      throw NonPointedError(lineality_direction(cons, dim));
  }

  std::vector<RayState> rays;
  {
    std::vector<IVec> brows;
    for (int i : basis) brows.push_back(cons[i]);
    Mat b = Mat::from_int_rows(brows);
    for (int j = 0; j < dim; ++j) {
      QVec e(dim, Rat(0));
      e[j] = 1;
      auto res = solve(b, e);
      auto* u = std::get_if<SolveUnique>(&res);
      if (!u) throw hy_error("internal: basis not invertible");
      RayState st;
      st.v = primitive(integral_multiple(u->x));
      st.zero.resize(nc);
      for (int k = 0; k < dim; ++k)
        if (k != j) st.zero.set(basis[k]);
      rays.push_back(std::move(st));
    }
  }

  std::vector<bool> in_basis(nc, false);
  for (int i : basis) in_basis[i] = true;

  for (size_t ci = 0; ci < nc; ++ci) {
    if (in_basis[ci]) continue;
    const IVec& a = cons[ci];
    std::vector<int> pos, neg;
    std::vector<Int> val(rays.size());
    for (size_t r = 0; r < rays.size(); ++r) {
      val[r] = dot(a, rays[r].v);
      if (val[r] > 0) pos.push_back(static_cast<int>(r));
      else if (val[r] < 0) neg.push_back(static_cast<int>(r));
    }
    if (neg.empty()) {
      for (size_t r = 0; r < rays.size(); ++r)
        if (val[r] == 0) rays[r].zero.set(ci);
      continue;
    }
    std::vector<RayState> created;
    size_t min_common = dim >= 2 ? static_cast<size_t>(dim - 2) : 0;
    for (int p : pos) {
      for (int m : neg) {
        Bits common = rays[p].zero & rays[m].zero;
        if (common.count() < min_common) continue;
        bool adjacent = true;
        for (size_t q = 0; q < rays.size(); ++q) {
          if (static_cast<int>(q) == p || static_cast<int>(q) == m) continue;
          if (common.is_subset_of(rays[q].zero)) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        RayState st;
        st.v.resize(dim);
        for (int k = 0; k < dim; ++k)
          st.v[k] = val[p] * rays[m].v[k] - val[m] * rays[p].v[k];
        st.v = primitive(std::move(st.v));
        st.zero = common;
        st.zero.set(ci);
        created.push_back(std::move(st));
      }
    }
    std::vector<RayState> next;
    next.reserve(rays.size() - neg.size() + created.size());
    for (size_t r = 0; r < rays.size(); ++r) {
      if (val[r] < 0) continue;
      if (val[r] == 0) rays[r].zero.set(ci);
      next.push_back(std::move(rays[r]));
    }
    for (auto& st : created) next.push_back(std::move(st));
    rays = std::move(next);
  }

  std::vector<IVec> out;
  out.reserve(rays.size());
  for (auto& st : rays) out.push_back(std::move(st.v));
  std::sort(out.begin(), out.end(), ivec_lt);
  return out;
}

PolyCone cone_from_rays(int dim, std::vector<IVec> rays) {
  PolyCone c;
  c.dim = dim;
  for (IVec& r : rays) r = primitive(std::move(r));
  std::sort(rays.begin(), rays.end(), ivec_lt);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  c.rays = std::move(rays);
  return c;
}

PolyCone cone_from_facets(int dim, std::vector<IVec> facets) {
  PolyCone c;
  c.dim = dim;
  for (IVec& f : facets) f = primitive(std::move(f));
  std::sort(facets.begin(), facets.end(), ivec_lt);
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  c.facets = std::move(facets);
  return c;
}

namespace {

// Facets of cone(generators) inside its span; fills equations when the span
// is proper. Detects non-pointed input.
void rays_to_facets(PolyCone& cone) {
  const auto& rays = *cone.rays;
  if (rays.empty()) throw hy_error("dd_convert: empty generator list");
  Mat m = Mat::from_int_rows(rays);
  int r = rank(m);
  std::vector<IVec> gens = rays;
  std::vector<int> chart;  // pivot columns when restricting to the span
  if (r < cone.dim) {
    std::vector<IVec> sel;
    for (int c = 0; c < cone.dim && static_cast<int>(chart.size()) < r; ++c) {
      IVec col(static_cast<size_t>(m.rows));
      for (int i = 0; i < m.rows; ++i) col[i] = rat_num(m.at(i, c));
      sel.push_back(col);
      if (rank(Mat::from_int_rows(sel)) == static_cast<int>(sel.size()))
        chart.push_back(c);
      else
        sel.pop_back();
    }
    gens.clear();
    for (const IVec& v : rays) {
      IVec g(chart.size());
      for (size_t k = 0; k < chart.size(); ++k) g[k] = v[chart[k]];
      gens.push_back(std::move(g));
    }
    for (const QVec& k : kernel(m))
      cone.equations.push_back(primitive_signed(integral_multiple(k)));
    std::sort(cone.equations.begin(), cone.equations.end(), ivec_lt);
  }
  std::vector<IVec> polar = dual_rays(gens, r);
  if (polar.empty() || rank(Mat::from_int_rows(polar)) < r) {
    // Primal has lineality: a direction orthogonal to every polar ray.
    IVec dir_chart =
        polar.empty() ? IVec()
                      : primitive_signed(integral_multiple(
                            kernel(Mat::from_int_rows(polar)).front()));
    if (polar.empty()) {
      dir_chart.assign(static_cast<size_t>(r), Int(0));
      dir_chart[0] = 1;
    }
    IVec dir;
    if (chart.empty()) {
      dir = dir_chart;
    } else {
      // Express the chart direction in ambient coordinates: it lies in the
      // span, so solve for a generator combination and recombine.
      Mat gm = Mat::from_int_rows(gens).transposed();
      auto res = solve(gm, to_qvec(dir_chart));
      QVec coeff;
      if (auto* u = std::get_if<SolveUnique>(&res)) coeff = u->x;
      else if (auto* nu = std::get_if<SolveNonUnique>(&res)) coeff = nu->x;
      else throw hy_error("internal: lineality lift failed");
      QVec full(cone.dim, Rat(0));
      for (size_t g = 0; g < rays.size(); ++g)
        for (int c = 0; c < cone.dim; ++c)
          full[c] += coeff[g] * Rat(rays[g][c]);
      dir = primitive_signed(integral_multiple(full));
    }
    throw NonPointedError(dir);
  }
  std::vector<IVec> facets;
  for (const IVec& f : polar) {
    if (chart.empty()) {
      facets.push_back(f);
    } else {
      IVec a(cone.dim, Int(0));
      for (size_t k = 0; k < chart.size(); ++k) a[chart[k]] = f[k];
      facets.push_back(std::move(a));
    }
  }
  std::sort(facets.begin(), facets.end(), ivec_lt);
  cone.facets = std::move(facets);
}

}  // namespace

void dd_convert(PolyCone& cone) {
  if (cone.rays && cone.facets) return;
  if (cone.facets) {
    cone.rays = dual_rays(*cone.facets, cone.dim);
    return;
  }
  if (!cone.rays) throw hy_error("dd_convert: no representation present");
  rays_to_facets(cone);
}

PolyTope hull(const std::vector<QVec>& points) {
  if (points.empty()) throw hy_error("hull: need at least one point");
  int d = static_cast<int>(points[0].size());
  std::vector<IVec> gens;
  for (const QVec& p : points) {
    if (static_cast<int>(p.size()) != d) throw hy_error("hull: ragged points");
    QVec h(d + 1);
    h[0] = 1;
    std::copy(p.begin(), p.end(), h.begin() + 1);
    gens.push_back(primitive(integral_multiple(h)));
  }
  std::sort(gens.begin(), gens.end(), ivec_lt);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  PolyCone cone = cone_from_rays(d + 1, gens);
  rays_to_facets(cone);  // homogenized generators: always pointed

  PolyTope out;
  out.ambient_dim = d;
  out.facets = *cone.facets;
  out.equations = cone.equations;
  int homog_rank = d + 1 - static_cast<int>(cone.equations.size());
  out.dim = homog_rank - 1;

  for (const IVec& g : gens) {
    std::vector<IVec> active;
    for (const IVec& f : out.facets)
      if (dot(f, g) == 0) active.push_back(f);
    bool extreme = active.empty()
                       ? (homog_rank == 1)
                       : rank(Mat::from_int_rows(active)) == homog_rank - 1;
    if (extreme) {
      QVec v(d);
      for (int c = 0; c < d; ++c) v[c] = Rat(g[c + 1], g[0]);
      out.vertices.push_back(std::move(v));
    }
  }
  std::sort(out.vertices.begin(), out.vertices.end(),
            [](const QVec& a, const QVec& b) { return lex_less(a, b); });
  return out;
}

PolyTope polytope_from_inequalities(int ambient_dim,
                                    const std::vector<IVec>& homog) {
  std::vector<IVec> cons = homog;
  {
    IVec x0(ambient_dim + 1, Int(0));
    x0[0] = 1;
    cons.push_back(std::move(x0));
  }
  std::vector<IVec> rays = dual_rays(cons, ambient_dim + 1);
  std::vector<QVec> pts;
  for (const IVec& r : rays) {
    if (r[0] == 0)
      throw hy_error("polytope_from_inequalities: unbounded (recession ray " +
                     ivec_str(r) + ")");
    QVec v(ambient_dim);
    for (int c = 0; c < ambient_dim; ++c) v[c] = Rat(r[c + 1], r[0]);
    pts.push_back(std::move(v));
  }
  if (pts.empty()) throw hy_error("polytope_from_inequalities: empty polytope");
  return hull(pts);
}

std::vector<std::vector<bool>> incidence(const PolyCone& cone) {
  if (!cone.rays || !cone.facets)
    throw hy_error("incidence: both representations required");
  std::vector<std::vector<bool>> inc(cone.rays->size(),
                                     std::vector<bool>(cone.facets->size()));
  for (size_t r = 0; r < cone.rays->size(); ++r)
    for (size_t f = 0; f < cone.facets->size(); ++f)
      inc[r][f] = dot((*cone.rays)[r], (*cone.facets)[f]) == 0;
  return inc;
}

bool is_extreme_ray(const IVec& v, const std::vector<IVec>& facets, int dim) {
  std::vector<IVec> active;
  for (const IVec& f : facets) {
    Int s = dot(f, v);
    if (s < 0) throw hy_error("is_extreme_ray: vector violates a facet");
    if (s == 0) active.push_back(f);
  }
  if (active.empty()) return dim == 1;
  return rank(Mat::from_int_rows(active)) == dim - 1;
}

bool are_adjacent(const IVec& r1, const IVec& r2, const PolyCone& cone) {
  if (!cone.facets) throw hy_error("are_adjacent: facets required");
  std::vector<IVec> common;
  for (const IVec& f : *cone.facets)
    if (dot(f, r1) == 0 && dot(f, r2) == 0) common.push_back(f);
  if (common.empty()) return cone.dim == 2;
  return rank(Mat::from_int_rows(common)) == cone.dim - 2;
}

int AdjGraph::diameter() const {
  if (n == 0) return -1;
  int diam = 0;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : adj[u])
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
    }
    for (int w = 0; w < n; ++w) {
      if (dist[w] < 0) return -1;
      diam = std::max(diam, dist[w]);
    }
  }
  return diam;
}

namespace {

// Adjacency among `prim` objects via the rank of the `dual` vectors tight on
// both sides of a pair.
AdjGraph adjacency_graph(const std::vector<IVec>& prim,
                         const std::vector<IVec>& dual, int target_rank) {
  int n = static_cast<int>(prim.size());
  std::vector<std::vector<int>> tight(n);
  for (int i = 0; i < n; ++i)
    for (size_t k = 0; k < dual.size(); ++k)
      if (dot(prim[i], dual[k]) == 0) tight[i].push_back(static_cast<int>(k));
  AdjGraph g;
  g.n = n;
  g.adj.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<IVec> common;
      size_t a = 0, b = 0;
      while (a < tight[i].size() && b < tight[j].size()) {
        if (tight[i][a] < tight[j][b]) ++a;
        else if (tight[i][a] > tight[j][b]) ++b;
        else {
          common.push_back(dual[tight[i][a]]);
          ++a;
          ++b;
        }
      }
      bool is_adj = common.empty()
                        ? (target_rank == 0)
                        : rank(Mat::from_int_rows(common)) == target_rank;
      if (is_adj) {
        g.adj[i].push_back(j);
        g.adj[j].push_back(i);
      }
    }
  return g;
}

}  // namespace

AdjGraph skeleton(const PolyCone& cone) {
  if (!cone.rays || !cone.facets)
    throw hy_error("skeleton: both representations required");
  return adjacency_graph(*cone.rays, *cone.facets, cone.dim - 2);
}

AdjGraph ridge_graph(const PolyCone& cone) {
  if (!cone.rays || !cone.facets)
    throw hy_error("ridge_graph: both representations required");
  return adjacency_graph(*cone.facets, *cone.rays, cone.dim - 2);
}

static std::vector<IVec> homog_vertices(const PolyTope& p) {
  std::vector<IVec> vs;
  for (const QVec& v : p.vertices) {
    QVec h(p.ambient_dim + 1);
    h[0] = 1;
    std::copy(v.begin(), v.end(), h.begin() + 1);
    vs.push_back(primitive(integral_multiple(h)));
  }
  return vs;
}

AdjGraph skeleton(const PolyTope& p) {
  return adjacency_graph(homog_vertices(p), p.facets, p.dim - 1);
}

AdjGraph ridge_graph(const PolyTope& p) {
  return adjacency_graph(p.facets, homog_vertices(p), p.dim - 1);
}

}  // namespace hycone
