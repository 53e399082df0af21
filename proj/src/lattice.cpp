#include "hycone/lattice.hpp"

#include <algorithm>

namespace hycone {

Rat QuadForm::operator()(const QVec& v) const {
  Rat s = 0;
  for (int i = 0; i < m; ++i) {
    if (v[i] == 0) continue;
    s += q.at(i, i) * v[i] * v[i];
    for (int j = i + 1; j < m; ++j) s += 2 * q.at(i, j) * v[i] * v[j];
  }
  return s;
}

QuadForm covariance_form(const DistVec& d) {
  if (d.n < 2) throw hy_error("covariance_form: need n >= 2");
  int m = d.n - 1;
  QuadForm f;
  f.m = m;
  f.q = Mat(m, m);
  for (int i = 0; i < m; ++i) {
    f.q.at(i, i) = d.at(0, i + 1);
    for (int j = i + 1; j < m; ++j) {
      Rat v = (d.at(0, i + 1) + d.at(0, j + 1) - d.at(i + 1, j + 1)) / 2;
      f.q.at(i, j) = v;
      f.q.at(j, i) = v;
    }
  }
  return f;
}

DistVec covariance_inverse(const QuadForm& f) {
  int n = f.m + 1;
  DistVec d(n, QVec(pair_count(n), Rat(0)));
  for (int i = 0; i < f.m; ++i) {
    d.at(0, i + 1) = f.q.at(i, i);
    for (int j = i + 1; j < f.m; ++j)
      d.at(i + 1, j + 1) = f.q.at(i, i) + f.q.at(j, j) - 2 * f.q.at(i, j);
  }
  return d;
}

Circumsphere circumsphere(const QuadForm& f) {
  if (!is_positive_definite(f.q))
    throw hy_error("circumsphere: form is not positive definite");
  QVec h(f.m);
  for (int i = 0; i < f.m; ++i) h[i] = f.q.at(i, i) / 2;
  auto res = solve(f.q, h);
  auto* u = std::get_if<SolveUnique>(&res);
  if (!u) throw hy_error("internal: PD system not uniquely solvable");
  return Circumsphere{u->x, dot(u->x, h)};
}

std::vector<IVec> cvp_enum(const QuadForm& f, const QVec& center,
                           const Rat& bound, bool strict) {
  int m = f.m;
  std::vector<IVec> out;
  if (m == 0) {
    if (bound > 0 || (!strict && bound == 0)) out.push_back(IVec{});
    return out;
  }
  if (static_cast<int>(center.size()) != m)
    throw hy_error("cvp_enum: center length != m");
  if (bound < 0) return out;
  auto res = ldlt(f.q);
  auto* pd = std::get_if<LdltPosDef>(&res);
  if (!pd) throw hy_error("cvp_enum: form is not positive definite");
  const Mat& l = pd->l;
  const QVec& dg = pd->d;

  IVec x(m, Int(0));
  // Level j fixes x[j], scanning outward from the real minimizer of
  // d_j (x_j + off)^2; pruning and acceptance are exact rational tests.
  auto rec = [&](auto&& self, int j, const Rat& used) -> void {
    if (j < 0) {
      if (used < bound || (!strict && used == bound)) out.push_back(x);
      return;
    }
    Rat off = -center[j];
    for (int k = j + 1; k < m; ++k)
      off += l.at(k, j) * (Rat(x[k]) - center[k]);
    Rat budget = bound - used;  // >= 0 here
    auto weight = [&](const Int& u) {
      Rat y = Rat(u) + off;
      return dg[j] * y * y;
    };
    Int u0 = floor_rat(-off);
    for (Int u = u0;; --u) {
      Rat w = weight(u);
      if (w > budget) break;
      x[j] = u;
      self(self, j - 1, used + w);
    }
    for (Int u = u0 + 1;; ++u) {
      Rat w = weight(u);
      if (w > budget) break;
      x[j] = u;
      self(self, j - 1, used + w);
    }
  };
  rec(rec, m - 1, Rat(0));
  std::sort(out.begin(), out.end(),
            [](const IVec& a, const IVec& b) { return lex_less(a, b); });
  return out;
}

std::optional<CvpPoint> cvp_min(const QuadForm& f, const QVec& center,
                                const Rat& bound, bool strict) {
  int m = f.m;
  if (m == 0) {
    if (bound > 0 || (!strict && bound == 0)) return CvpPoint{IVec{}, Rat(0)};
    return std::nullopt;
  }
  if (static_cast<int>(center.size()) != m)
    throw hy_error("cvp_min: center length != m");
  if (bound < 0) return std::nullopt;
  auto res = ldlt(f.q);
  auto* pd = std::get_if<LdltPosDef>(&res);
  if (!pd) throw hy_error("cvp_min: form is not positive definite");
  const Mat& l = pd->l;
  const QVec& dg = pd->d;

  std::optional<CvpPoint> best;
  Rat limit = bound;  // shrinks as points are found
  IVec x(m, Int(0));
  auto leaf = [&](const Rat& value) {
    bool better;
    if (!best)
      better = strict ? value < limit : value <= limit;
    else
      better = value < best->value ||
               (value == best->value && lex_less(x, best->x));
    if (better) {
      best = CvpPoint{x, value};
      limit = value;
    }
  };
  auto rec = [&](auto&& self, int j, const Rat& used) -> void {
    if (j < 0) {
      leaf(used);
      return;
    }
    Rat off = -center[j];
    for (int k = j + 1; k < m; ++k)
      off += l.at(k, j) * (Rat(x[k]) - center[k]);
    auto weight = [&](const Int& u) {
      Rat y = Rat(u) + off;
      return dg[j] * y * y;
    };
    Int u0 = floor_rat(-off);
    for (Int u = u0;; --u) {
      Rat w = weight(u);
      if (used + w > limit) break;  // ties kept for the lex tiebreak
      x[j] = u;
      self(self, j - 1, used + w);
    }
    for (Int u = u0 + 1;; ++u) {
      Rat w = weight(u);
      if (used + w > limit) break;
      x[j] = u;
      self(self, j - 1, used + w);
    }
  };
  rec(rec, m - 1, Rat(0));
  return best;
}

namespace {

// Shared core of both membership tests: minimize g(y) = A[y] + 2 w.y over
// y in Z^k, reporting a minimizer only when the minimum is negative.
struct QuadMin {
  bool negative = false;
  IVec y;     // argmin when negative
  Rat value;  // g(y), negative when reported
};

Rat eval_g(const Mat& a, const QVec& w, const IVec& y) {
  int k = a.rows;
  Rat s = 0;
  QVec yq = to_qvec(y);
  for (int i = 0; i < k; ++i) {
    if (yq[i] == 0) continue;
    s += a.at(i, i) * yq[i] * yq[i] + 2 * w[i] * yq[i];
    for (int j = i + 1; j < k; ++j) s += 2 * a.at(i, j) * yq[i] * yq[j];
  }
  return s;
}

std::vector<IVec> integer_rows(const Mat& a) {
  Int lcm = 1;
  for (const Rat& x : a.a) lcm = boost::multiprecision::lcm(lcm, rat_den(x));
  std::vector<IVec> rows;
  for (int r = 0; r < a.rows; ++r) {
    IVec row(a.cols);
    for (int c = 0; c < a.cols; ++c) {
      const Rat& x = a.at(r, c);
      row[c] = rat_num(x) * (lcm / rat_den(x));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

QuadMin minimize_pd(const Mat& a, const QVec& w) {
  int k = a.rows;
  QVec negw(k);
  for (int i = 0; i < k; ++i) negw[i] = -w[i];
  auto res = solve(a, negw);
  auto* u = std::get_if<SolveUnique>(&res);
  if (!u) throw hy_error("internal: PD system not uniquely solvable");
  const QVec& gamma = u->x;
  Rat bound = -dot(w, gamma);  // A[gamma]
  QuadForm f{k, a};
  auto pt = cvp_min(f, gamma, bound, true);
  QuadMin out;
  if (!pt) return out;
  out.negative = true;
  out.y = pt->x;
  out.value = pt->value - bound;  // g(y) = A[y - gamma] - A[gamma]
  return out;
}

QuadMin minimize_quadratic(const Mat& a, const QVec& w) {
  int k = a.rows;
  auto cls = ldlt(a);
  if (std::holds_alternative<LdltPosDef>(cls)) return minimize_pd(a, w);

  if (auto* ind = std::get_if<LdltIndefinite>(&cls)) {
    IVec u = integral_multiple(ind->witness);
    // g(t u) = t^2 A[u] + 2 t w.u with A[u] < 0: scan t = 1,-1,2,-2,...
    for (long long t = 1;; ++t) {
      for (int sgn : {1, -1}) {
        IVec y(k);
        for (int i = 0; i < k; ++i) y[i] = sgn * t * u[i];
        Rat g = eval_g(a, w, y);
        if (g < 0) {
          QuadMin out;
          out.negative = true;
          out.y = std::move(y);
          out.value = g;
          return out;
        }
      }
    }
  }

  // Semidefinite singular: work with the saturated integer kernel.
  auto hnf = integer_column_reduce(integer_rows(a), k);
  int rho = hnf.rank;

  QVec negw(k);
  for (int i = 0; i < k; ++i) negw[i] = -w[i];
  auto res = solve(a, negw);
  if (std::holds_alternative<SolveNoSolution>(res)) {
    // w has a component along the kernel: linear escape in one step.
    for (int j = rho; j < k; ++j) {
      Rat wt = 0;
      for (int i = 0; i < k; ++i) wt += w[i] * Rat(hnf.u_cols[j][i]);
      if (wt == 0) continue;
      QuadMin out;
      out.negative = true;
      out.y.resize(k);
      int sgn = wt > 0 ? -1 : 1;
      for (int i = 0; i < k; ++i) out.y[i] = sgn * hnf.u_cols[j][i];
      out.value = eval_g(a, w, out.y);
      if (out.value >= 0) throw hy_error("internal: kernel escape failed");
      return out;
    }
    throw hy_error("internal: inconsistent system without kernel escape");
  }

  QVec gamma;
  if (auto* uq = std::get_if<SolveUnique>(&res)) gamma = uq->x;
  else gamma = std::get<SolveNonUnique>(res).x;
  Rat bound = -dot(w, gamma);  // A[gamma], well-defined modulo the kernel

  QuadMin none;
  if (rho == 0) return none;  // A == 0, w = 0: g vanishes identically

  Mat umat(k, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i) umat.at(i, j) = Rat(hnf.u_cols[j][i]);
  auto zres = solve(umat, gamma);
  auto* zu = std::get_if<SolveUnique>(&zres);
  if (!zu) throw hy_error("internal: unimodular solve failed");
  QVec gbar(zu->x.begin(), zu->x.begin() + rho);

  Mat wmat(k, rho);
  for (int j = 0; j < rho; ++j)
    for (int i = 0; i < k; ++i) wmat.at(i, j) = Rat(hnf.u_cols[j][i]);
  Mat abar = mat_mul(mat_mul(wmat.transposed(), a), wmat);
  QuadForm fbar{rho, abar};
  auto pt = cvp_min(fbar, gbar, bound, true);
  if (!pt) return none;

  QuadMin out;
  out.negative = true;
  out.y.assign(k, Int(0));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < rho; ++j) out.y[i] += hnf.u_cols[j][i] * pt->x[j];
  out.value = eval_g(a, w, out.y);
  return out;
}

int to_small_int(const Int& x) {
  if (x > 1000000000 || x < -1000000000)
    throw hy_error("witness coordinate out of range");
  return static_cast<int>(x.convert_to<long long>());
}

BInequality bineq_from_bary(const IVec& v) {
  Int sum = 0;
  for (const Int& x : v) sum += x;
  BVec b(v.size() + 1);
  b[0] = to_small_int(1 - sum);
  for (size_t i = 0; i < v.size(); ++i) b[i + 1] = to_small_int(v[i]);
  return BInequality(std::move(b));
}

MembershipResult check_witness(const BInequality& b, const DistVec& d) {
  Rat amount = eval_hyp(b, d) - b.rhs();
  if (amount <= 0) throw hy_error("internal: witness does not violate");
  return Violated{b, amount};
}

}  // namespace

MembershipResult member_hyp(const DistVec& d) {
  QuadForm f = covariance_form(d);
  int m = f.m;
  // With v the barycentric tail of b, H(b,d) = 2h.v - q[v] for h_i = q_ii/2.
  // Violations are the negative values of q[v] - 2h.v.
  QVec w(m);
  for (int i = 0; i < m; ++i) w[i] = -f.q.at(i, i) / 2;
  QuadMin r = minimize_quadratic(f.q, w);
  if (!r.negative) return Member{};
  return check_witness(bineq_from_bary(r.y), d);
}

MembershipResult member_hypp(const DistVec& d) {
  int n = d.n;
  // Q with Q_ii = 1/4, Q_ij = 1/4 - d_ij/2 satisfies
  // s(s+1) - sum b_i b_j d_ij = b^T Q b - 1/4 for odd-sum b.
  Mat qq(n, n);
  for (int i = 0; i < n; ++i) {
    qq.at(i, i) = Rat(1, 4);
    for (int j = i + 1; j < n; ++j) {
      Rat v = Rat(1, 4) - d.at(i, j) / 2;
      qq.at(i, j) = v;
      qq.at(j, i) = v;
    }
  }
  // Odd-sum b = e_1 + V y over y in Z^n, V the even-sum sublattice basis
  // {e_1-e_2, ..., e_{n-1}-e_n, 2e_n}.
  Mat vmat(n, n);
  for (int j = 0; j + 1 < n; ++j) {
    vmat.at(j, j) = 1;
    vmat.at(j + 1, j) = -1;
  }
  vmat.at(n - 1, n - 1) = 2;
  Mat a = mat_mul(mat_mul(vmat.transposed(), qq), vmat);
  QVec e0(n, Rat(0));
  e0[0] = 1;
  QVec w = vmat.transposed().apply(qq.apply(e0));
  QuadMin r = minimize_quadratic(a, w);
  if (!r.negative) return Member{};
  std::vector<long long> b(n, 0);
  b[0] = 1;
  for (int j = 0; j < n; ++j) {
    long long yj = to_small_int(r.y[j]);
    if (j + 1 < n) {
      b[j] += yj;
      b[j + 1] -= yj;
    } else {
      b[j] += 2 * yj;
    }
  }
  BVec bi(n);
  for (int i = 0; i < n; ++i) bi[i] = to_small_int(Int(b[i]));
  return check_witness(BInequality(std::move(bi)), d);
}

DistVec scale_dist(const DistVec& d, const Rat& lambda) {
  DistVec out = d;
  for (Rat& x : out.d) x *= lambda;
  return out;
}

Rat max_scale(const DistVec& d) {
  bool nonzero = false;
  for (const Rat& x : d.d) nonzero |= (x != 0);
  if (!nonzero) throw hy_error("max_scale: d = 0");
  if (!is_member(member_hyp(d))) throw hy_error("max_scale: d is not in HYP_n");

  // Perimeter bound 2/(d_ij + d_ik + d_jk) over triples; pair fallback
  // 1/d_ij covers n = 2.
  Rat lambda;
  bool have = false;
  for (int i = 0; i < d.n; ++i)
    for (int j = i + 1; j < d.n; ++j)
      for (int k = j + 1; k < d.n; ++k) {
        Rat per = d.at(i, j) + d.at(i, k) + d.at(j, k);
        if (per > 0) {
          Rat cand = Rat(2) / per;
          if (!have || cand < lambda) lambda = cand, have = true;
        }
      }
  if (!have) {
    for (const Rat& x : d.d)
      if (x > 0) {
        Rat cand = 1 / x;
        if (!have || cand < lambda) lambda = cand, have = true;
      }
  }
  if (!have) throw hy_error("max_scale: no positive entry");

  while (true) {
    MembershipResult r = member_hypp(scale_dist(d, lambda));
    if (is_member(r)) return lambda;
    const Violated& v = std::get<Violated>(r);
    Rat hd = eval_hyp(v.witness, d);
    if (hd <= 0 || v.witness.rhs() <= 0)
      throw hy_error("internal: witness cannot tighten the scale");
    Rat next = Rat(v.witness.rhs()) / hd;
    if (next >= lambda) throw hy_error("internal: scale did not decrease");
    lambda = next;
  }
}

bool is_empty_sphere(const QuadForm& f, const std::vector<IVec>& points) {
  if (points.empty()) throw hy_error("is_empty_sphere: no points");
  if (!is_positive_definite(f.q))
    throw hy_error("is_empty_sphere: form is not positive definite");
  int m = f.m;
  QVec p0q = to_qvec(points[0]);
  QVec qp0 = f.q.apply(p0q);
  Rat q0 = f(p0q);
  std::vector<QVec> rows;
  QVec rhs;
  for (size_t i = 1; i < points.size(); ++i) {
    QVec pi = to_qvec(points[i]);
    QVec qi = f.q.apply(pi);
    QVec row(m);
    for (int c = 0; c < m; ++c) row[c] = 2 * (qi[c] - qp0[c]);
    rows.push_back(std::move(row));
    rhs.push_back(f(pi) - q0);
  }
  QVec z;
  if (rows.empty()) {
    z = p0q;  // single point: radius-zero sphere
  } else {
    auto res = solve(Mat::from_rows(rows), rhs);
    if (std::holds_alternative<SolveNoSolution>(res))
      throw NoCircumsphereError("points have no common circumsphere");
    if (std::holds_alternative<SolveNonUnique>(res))
      throw NoCircumsphereError(
          "circumsphere is not unique (points do not affinely span)");
    z = std::get<SolveUnique>(res).x;
  }
  QVec diff(m);
  for (int c = 0; c < m; ++c) diff[c] = p0q[c] - z[c];
  Rat r2 = f(diff);
  return !cvp_min(f, z, r2, true).has_value();
}

}  // namespace hycone
