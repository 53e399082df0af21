#include "hycone/symmetry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hycone {

Int group_order(Group g, int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  if (g == Group::ARes) f <<= (n - 1);
  return f;
}

long long orbit_size_sym(const BVec& v, int n) {
  if (static_cast<int>(v.size()) != n) throw hy_error("orbit_size_sym: length != n");
  std::map<int, int> mult;
  for (int x : v) ++mult[x];
  long long size = 1;
  // n!/prod(m_i!) accumulated as a product of binomials to stay integral.
  int placed = 0;
  for (auto& [val, m] : mult) {
    (void)val;
    for (int i = 1; i <= m; ++i) {
      ++placed;
      size = size * placed / i;
    }
  }
  return size;
}

template <typename Vec>
static Vec perm_pairs(const BVec& perm, const Vec& v, int n) {
  Vec out(v.size());
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k) {
      int a = perm[i], b = perm[j];
      out[a < b ? pair_index(a, b, n) : pair_index(b, a, n)] = v[k];
    }
  return out;
}

QVec act_perm_pairs(const BVec& perm, const QVec& v, int n) { return perm_pairs(perm, v, n); }
IVec act_perm_pairs(const BVec& perm, const IVec& v, int n) { return perm_pairs(perm, v, n); }

QVec act_switch_pairs(uint32_t s_mask, const QVec& v, int n) {
  QVec out = v;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (((s_mask >> i) ^ (s_mask >> j)) & 1u) out[k] = 1 - v[k];
  return out;
}

IVec act_switch_homog_ineq(uint32_t s_mask, const IVec& f, int n) {
  IVec out = f;
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++k)
      if (((s_mask >> i) ^ (s_mask >> j)) & 1u) {
        out[0] += f[k + 1];
        out[k + 1] = -f[k + 1];
      }
  return out;
}

IVec act_perm_homog_ineq(const BVec& perm, const IVec& f, int n) {
  IVec g(f.begin() + 1, f.end());
  g = perm_pairs(perm, g, n);
  IVec out(f.size());
  out[0] = f[0];
  std::copy(g.begin(), g.end(), out.begin() + 1);
  return out;
}

BVec bineq_sign_normal(BVec b) {
  BVec neg(b.size());
  for (size_t i = 0; i < b.size(); ++i) neg[i] = -b[i];
  return std::min(b, neg);
}

static std::vector<BVec> adjacent_transpositions(int n) {
  std::vector<BVec> gens;
  for (int i = 0; i + 1 < n; ++i) {
    BVec p(n);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[i], p[i + 1]);
    gens.push_back(std::move(p));
  }
  return gens;
}

OrbitSummary orbit_pairs(const QVec& v, int n, Group g, bool with_members) {
  auto gens = adjacent_transpositions(n);
  std::set<QVec> seen;
  std::vector<QVec> stack{v};
  seen.insert(v);
  while (!stack.empty()) {
    QVec cur = std::move(stack.back());
    stack.pop_back();
    auto push = [&](QVec img) {
      if (seen.insert(img).second) stack.push_back(std::move(img));
    };
    for (const BVec& p : gens) push(act_perm_pairs(p, cur, n));
    if (g == Group::ARes)
      for (int i = 0; i < n; ++i) push(act_switch_pairs(1u << i, cur, n));
  }
  OrbitSummary out;
  out.size = static_cast<long long>(seen.size());
  out.canonical = *seen.rbegin();  // greatest image
  Int ord = group_order(g, n);
  if (ord % out.size != 0) throw hy_error("orbit size does not divide group order");
  out.stabilizer_order = ord / out.size;
  if (with_members) out.members.assign(seen.begin(), seen.end());
  return out;
}

BOrbitSummary orbit_bineq(const BInequality& q, Group g, bool with_members) {
  auto gens = adjacent_transpositions(q.n());
  int n = q.n();
  std::set<BVec> seen;
  BVec start = bineq_sign_normal(q.b);
  std::vector<BVec> stack{start};
  seen.insert(start);
  while (!stack.empty()) {
    BVec cur = std::move(stack.back());
    stack.pop_back();
    auto push = [&](BVec img) {
      img = bineq_sign_normal(std::move(img));
      if (seen.insert(img).second) stack.push_back(std::move(img));
    };
    for (const BVec& p : gens) {
      BVec img(n);
      for (int i = 0; i < n; ++i) img[p[i]] = cur[i];
      push(std::move(img));
    }
    if (g == Group::ARes)
      for (int i = 0; i < n; ++i) {
        BVec img = cur;
        img[i] = -img[i];
        push(std::move(img));
      }
  }
  BOrbitSummary out;
  out.size = static_cast<long long>(seen.size());
  out.canonical = canonical_bineq(q, g);
  Int ord = group_order(g, n);
  if (ord % out.size != 0) throw hy_error("orbit size does not divide group order");
  out.stabilizer_order = ord / out.size;
  if (with_members) out.members.assign(seen.begin(), seen.end());
  return out;
}

long long ares_class_size(const BInequality& q) {
  BVec abs(q.b);
  int nnz = 0;
  for (int& x : abs) {
    x = std::abs(x);
    nnz += (x != 0);
  }
  return orbit_size_sym(abs, q.n()) << (nnz - 1);
}

QVec canonical_pairs(const QVec& v, int n, Group g) {
  BVec perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  QVec best = v;
  bool first = true;
  do {
    QVec pv = act_perm_pairs(perm, v, n);
    uint32_t nmasks = (g == Group::ARes) ? (1u << (n - 1)) : 1u;
    for (uint32_t m = 0; m < nmasks; ++m) {
      QVec img = m ? act_switch_pairs(m << 1, pv, n) : pv;
      if (first || lex_less(best, img)) {
        best = img;
        first = false;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

BVec canonical_bineq(const BInequality& q, Group g) {
  if (g == Group::Sym) {
    BVec b = q.b;
    std::sort(b.begin(), b.end());
    return b;
  }
  BVec b = q.b;
  for (int& x : b) x = -std::abs(x);
  std::sort(b.begin(), b.end());
  return b;
}

std::vector<AresClass> merge_classes(const std::vector<BInequality>& reps) {
  std::map<BVec, AresClass> by_sig;
  for (size_t idx = 0; idx < reps.size(); ++idx) {
    BVec sig(reps[idx].b);
    for (int& x : sig) x = std::abs(x);
    std::sort(sig.begin(), sig.end());
    auto [it, fresh] = by_sig.try_emplace(sig);
    AresClass& cls = it->second;
    if (fresh) {
      cls.abs_signature = sig;
      int n = static_cast<int>(sig.size());
      // Sym-orbits of the class = sign assignments on the distinct nonzero
      // values, modulo the global flip (free: coordinate sums are odd).
      std::vector<std::pair<int, int>> vals;  // (value, multiplicity), nonzero
      int zeros = 0;
      for (int x : sig) {
        if (x == 0) { ++zeros; continue; }
        if (!vals.empty() && vals.back().first == x) ++vals.back().second;
        else vals.emplace_back(x, 1);
      }
      (void)zeros;
      std::set<BVec> seen;
      std::vector<int> k(vals.size(), 0);  // negatives per value
      while (true) {
        BVec b;
        b.reserve(n);
        for (int z = 0; z < n && sig[z] == 0; ++z) b.push_back(0);
        long long sum = 0;
        for (size_t t = 0; t < vals.size(); ++t) {
          for (int c = 0; c < k[t]; ++c) b.push_back(-vals[t].first);
          for (int c = k[t]; c < vals[t].second; ++c) b.push_back(vals[t].first);
          sum += static_cast<long long>(vals[t].second - 2 * k[t]) * vals[t].first;
        }
        if (sum < 0)
          for (int& x : b) x = -x;
        std::sort(b.begin(), b.end());
        if (seen.insert(b).second) {
          BInequality q(b);
          cls.sym_orbits.push_back({q, orbit_size_sym(b, n)});
        }
        size_t t = 0;
        for (; t < vals.size(); ++t) {
          if (++k[t] <= vals[t].second) break;
          k[t] = 0;
        }
        if (t == vals.size()) break;
      }
      std::sort(cls.sym_orbits.begin(), cls.sym_orbits.end(),
                [](const SymOrbitInfo& a, const SymOrbitInfo& b2) {
                  return a.rep.b < b2.rep.b;
                });
      for (size_t t = 0; t < cls.sym_orbits.size(); ++t) {
        cls.total_size += cls.sym_orbits[t].size;
        if (cls.sym_orbits[t].rep.homogeneous())
          cls.homogeneous.push_back(static_cast<int>(t));
      }
    }
    cls.input_indices.push_back(static_cast<int>(idx));
  }
  std::vector<AresClass> out;
  for (auto& [sig, cls] : by_sig) out.push_back(std::move(cls));
  return out;
}

namespace {
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

template <typename Vec, typename ApplyGen>
std::vector<std::vector<int>> partition_closed_set(const std::vector<Vec>& elems,
                                                   ApplyGen&& apply_all) {
  std::map<Vec, int> index;
  for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  UnionFind uf(static_cast<int>(elems.size()));
  for (size_t i = 0; i < elems.size(); ++i) {
    apply_all(elems[i], [&](const Vec& img) {
      auto it = index.find(img);
      if (it == index.end())
        throw hy_error("orbit partition: set is not closed under the action");
      uf.unite(static_cast<int>(i), it->second);
    });
  }
  std::map<int, std::vector<int>> groups;
  for (size_t i = 0; i < elems.size(); ++i)
    groups[uf.find(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  for (auto& [root, g] : groups) out.push_back(std::move(g));
  std::sort(out.begin(), out.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  return out;
}
}  // namespace

std::vector<std::vector<int>> orbit_partition_pairs_sym(
    const std::vector<IVec>& vecs, int n) {
  auto gens = adjacent_transpositions(n);
  return partition_closed_set(vecs, [&](const IVec& v, auto&& visit) {
    for (const BVec& p : gens) visit(act_perm_pairs(p, v, n));
  });
}

std::vector<std::vector<int>> orbit_partition_homog_ares(
    const std::vector<IVec>& facets, int n) {
  auto gens = adjacent_transpositions(n);
  return partition_closed_set(facets, [&](const IVec& f, auto&& visit) {
    for (const BVec& p : gens) visit(primitive(act_perm_homog_ineq(p, f, n)));
    for (int i = 0; i < n; ++i)
      visit(primitive(act_switch_homog_ineq(1u << i, f, n)));
  });
}

std::vector<std::vector<int>> orbit_partition_points_ares(
    const std::vector<QVec>& pts, int n) {
  auto gens = adjacent_transpositions(n);
  return partition_closed_set(pts, [&](const QVec& v, auto&& visit) {
    for (const BVec& p : gens) visit(act_perm_pairs(p, v, n));
    for (int i = 0; i < n; ++i) visit(act_switch_pairs(1u << i, v, n));
  });
}

}  // namespace hycone
