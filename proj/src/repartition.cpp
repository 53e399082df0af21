#include "hycone/repartition.hpp"

#include <algorithm>

#include "hycone/mat.hpp"

namespace hycone {

Int simplex_volume(const std::vector<IVec>& points) {
  if (points.empty()) throw hy_error("simplex_volume: no points");
  int n = static_cast<int>(points[0].size());
  if (static_cast<int>(points.size()) != n + 1)
    throw hy_error("simplex_volume: need n+1 points in Z^n");
  Mat m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m.at(r, c) = Rat(points[r + 1][c] - points[0][c]);
  Rat d = det(m);
  Int v = rat_num(d);
  return v < 0 ? Int(-v) : v;
}

IVec affine_relation(const std::vector<IVec>& points) {
  if (points.empty()) throw hy_error("affine_relation: no points");
  int n = static_cast<int>(points[0].size());
  if (static_cast<int>(points.size()) != n + 2)
    throw hy_error("affine_relation: need n+2 points in Z^n");
  // rows: each coordinate equation plus the sum-zero row
  Mat m(n + 1, n + 2);
  for (int c = 0; c < n + 2; ++c) {
    for (int r = 0; r < n; ++r) m.at(r, c) = Rat(points[c][r]);
    m.at(n, c) = 1;
  }
  auto ker = kernel(m);
  if (ker.size() != 1)
    throw hy_error("affine_relation: points do not affinely span");
  return primitive_signed(integral_multiple(ker[0]));
}

RepartitionConfig make_config(const std::vector<IVec>& points) {
  RepartitionConfig cfg;
  cfg.points = points;
  cfg.n = static_cast<int>(points[0].size());
  cfg.alpha = affine_relation(points);
  for (size_t i = 0; i < cfg.alpha.size(); ++i) {
    if (cfg.alpha[i] > 0) cfg.s_plus.push_back(static_cast<int>(i));
    else if (cfg.alpha[i] < 0) cfg.s_minus.push_back(static_cast<int>(i));
    else cfg.degenerate = true;
  }
  return cfg;
}

std::pair<Triangulation, Triangulation> two_triangulations(
    const RepartitionConfig& config) {
  auto build = [&](const std::vector<int>& side) {
    Triangulation t;
    for (int omit : side) {
      std::vector<IVec> pts;
      for (size_t i = 0; i < config.points.size(); ++i)
        if (static_cast<int>(i) != omit) pts.push_back(config.points[i]);
      Int vol = simplex_volume(pts);
      if (vol == 0)
        throw hy_error("two_triangulations: degenerate simplex in declared side");
      t.omitted.push_back(omit);
      t.volumes.push_back(vol);
    }
    return t;
  };
  return {build(config.s_plus), build(config.s_minus)};
}

CandidateBox cofactor_forms(const std::vector<IVec>& fixed_points) {
  if (fixed_points.empty()) throw hy_error("cofactor_forms: no points");
  int n = static_cast<int>(fixed_points[0].size());
  if (static_cast<int>(fixed_points.size()) != n + 1)
    throw hy_error("cofactor_forms: need n+1 points");
  CandidateBox box;
  box.n = n;
  box.fixed = fixed_points;
  box.fixed_volume = simplex_volume(fixed_points);
  if (box.fixed_volume == 0)
    throw hy_error("cofactor_forms: fixed points affinely dependent");
  for (int omit = 0; omit <= n; ++omit) {
    // Remaining n points q_0..q_{n-1}; the volume of {q_*, v} is
    // |det(q_1-q_0, ..., q_{n-1}-q_0, v-q_0)|, affine in v.
    std::vector<const IVec*> q;
    for (int i = 0; i <= n; ++i)
      if (i != omit) q.push_back(&fixed_points[i]);
    IVec w(n, Int(0));
    for (int c = 0; c < n; ++c) {
      // cofactor of the v-column at coordinate c
      Mat minor(n - 1, n - 1);
      int rr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == c) continue;
        for (int k = 0; k + 1 < n; ++k)
          minor.at(rr, k) = Rat((*q[k + 1])[r] - (*q[0])[r]);
        ++rr;
      }
      Rat dm = n >= 2 ? det(minor) : Rat(1);
      Int sign = ((n - 1 + c) % 2 == 0) ? 1 : -1;
      w[c] = sign * rat_num(dm);
    }
    Int kappa = -dot(w, *q[0]);
    box.forms.emplace_back(std::move(w), kappa);
  }
  return box;
}

std::vector<IVec> enum_candidates(const CandidateBox& box, const Int& max_vol) {
  std::vector<IVec> out;
  if (max_vol <= 0) return out;
  if (box.fixed_volume != max_vol) return out;  // designated maximum not met
  int n = box.n;
  // Pick n linearly independent forms; their |.| <= max_vol region is a
  // parallelepiped whose vertices bound the search box.
  std::vector<IVec> sel;
  std::vector<int> idx;
  for (size_t i = 0; i < box.forms.size() && static_cast<int>(sel.size()) < n; ++i) {
    sel.push_back(box.forms[i].first);
    if (rank(Mat::from_int_rows(sel)) == static_cast<int>(sel.size()))
      idx.push_back(static_cast<int>(i));
    else
      sel.pop_back();
  }
  if (static_cast<int>(sel.size()) < n)
    throw hy_error("enum_candidates: forms do not bound a finite region");
  Mat w = Mat::from_int_rows(sel);
  IVec lo(n), hi(n);
  bool first = true;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    QVec rhs(n);
    for (int i = 0; i < n; ++i) {
      Int target = ((mask >> i) & 1u) ? max_vol : -max_vol;
      rhs[i] = Rat(target - box.forms[idx[i]].second);
    }
    auto res = solve(w, rhs);
    const QVec& x = std::get<SolveUnique>(res).x;
    for (int c = 0; c < n; ++c) {
      Int f = floor_rat(x[c]), g = ceil_rat(x[c]);
      if (first || f < lo[c]) lo[c] = f;
      if (first || g > hi[c]) hi[c] = g;
    }
    first = false;
  }
  IVec v(n);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      for (const auto& [wf, kappa] : box.forms) {
        Int val = dot(wf, v) + kappa;
        if (val > max_vol || val < -max_vol) return;
      }
      if (std::find(box.fixed.begin(), box.fixed.end(), v) != box.fixed.end())
        return;
      out.push_back(v);
      return;
    }
    for (Int u = lo[i]; u <= hi[i]; ++u) {
      v[i] = u;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(),
            [](const IVec& a, const IVec& b) { return lex_less(a, b); });
  return out;
}

}  // namespace hycone
