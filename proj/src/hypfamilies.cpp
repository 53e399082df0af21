#include "hycone/hypfamilies.hpp"

#include <algorithm>

#include "hycone/mat.hpp"

namespace hycone {

DistVec::DistVec(int n_, QVec d_) : n(n_), d(std::move(d_)) {
  if (static_cast<long long>(d.size()) != pair_count(n))
    throw hy_error("distance vector length != C(n,2)");
}

BVec CutVec::delta() const {
  BVec v(pair_count(n));
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      v[k++] = ((s_mask >> i) ^ (s_mask >> j)) & 1u;
  return v;
}

DistVec CutVec::dist() const {
  BVec v = delta();
  QVec q(v.size());
  for (size_t i = 0; i < v.size(); ++i) q[i] = v[i];
  return DistVec(n, std::move(q));
}

uint32_t CutVec::normalize(uint32_t mask, int n) {
  uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  mask &= full;
  if (mask & 1u) mask = full & ~mask;
  return mask;
}

std::vector<CutVec> cuts(int n, bool include_zero) {
  if (n < 2) throw hy_error("cuts: need n >= 2");
  std::vector<CutVec> out;
  if (include_zero) out.push_back(CutVec{n, 0});
  for (uint32_t m = 1; m < (1u << (n - 1)); ++m)
    out.push_back(CutVec{n, m << 1});
  return out;
}

BInequality::BInequality(BVec b_) : b(std::move(b_)) {
  long long sum = 0;
  for (int x : b) sum += x;
  if ((sum % 2 + 2) % 2 != 1) throw hy_error("b has even coordinate sum");
  s = (sum - 1) / 2;
}

bool BInequality::trivial() const {
  int nz = 0;
  for (int x : b) nz += (x != 0);
  return nz <= 1;
}

int BInequality::gonal_k() const {
  int ones = 0, minus = 0;
  for (int x : b) {
    if (x == 1) ++ones;
    else if (x == -1) ++minus;
    else if (x != 0) return -1;
  }
  if (ones == minus + 1) return minus;
  return -1;
}

Rat eval_hyp(const BInequality& q, const DistVec& d) {
  if (q.n() != d.n) throw hy_error("eval_hyp: size mismatch");
  Rat v = 0;
  int k = 0;
  for (int i = 0; i < d.n; ++i)
    for (int j = i + 1; j < d.n; ++j, ++k) {
      long long c = 1LL * q.b[i] * q.b[j];
      if (c != 0 && d.d[k] != 0) v += Rat(c) * d.d[k];
    }
  return v;
}

long long eval_on_cut(const BInequality& q, const CutVec& cut) {
  if (q.n() != cut.n) throw hy_error("eval_on_cut: size mismatch");
  long long t = 0;
  for (int i = 0; i < cut.n; ++i)
    if ((cut.s_mask >> i) & 1u) t += q.b[i];
  return t * (2 * q.s + 1 - t);
}

long long cut_incidence_count(const BInequality& q, bool include_zero) {
  long long cnt = 0;
  for (const CutVec& c : cuts(q.n(), include_zero)) {
    long long t = 0;
    for (int i = 0; i < q.n(); ++i)
      if ((c.s_mask >> i) & 1u) t += q.b[i];
    if (t == q.s || t == q.s + 1) ++cnt;
  }
  return cnt;
}

int cut_rank(const BInequality& q, int n) {
  if (q.n() != n) throw hy_error("cut_rank: size mismatch");
  std::vector<QVec> rows;
  for (const CutVec& c : cuts(n, true)) {
    long long t = 0;
    for (int i = 0; i < n; ++i)
      if ((c.s_mask >> i) & 1u) t += q.b[i];
    if (t == q.s || t == q.s + 1) {
      BVec delta = c.delta();
      QVec r(delta.size());
      for (size_t i = 0; i < delta.size(); ++i) r[i] = delta[i];
      rows.push_back(std::move(r));
    }
  }
  if (rows.empty()) return 0;
  return rank(Mat::from_rows(rows));
}

void gen_b(int n, int max_abs, BTarget target, bool per_switching_class,
           const std::function<void(const GenB&)>& emit) {
  if (max_abs < 1) throw hy_error("gen_b: max_abs >= 1 required");
  BVec b(n);
  std::vector<BVec> seen_abs;  // switching-class signatures already emitted
  auto rec = [&](auto&& self, int pos, int lo, long long sum) -> void {
    if (pos == n) {
      bool ok = (target == BTarget::Cone) ? (sum == 1)
                                          : (sum >= 1 && sum % 2 == 1);
      if (!ok) return;
      if (per_switching_class) {
        BVec sig(b);
        for (int& x : sig) x = std::abs(x);
        std::sort(sig.begin(), sig.end());
        if (std::find(seen_abs.begin(), seen_abs.end(), sig) != seen_abs.end())
          return;
        seen_abs.push_back(sig);
      }
      BInequality q(b);
      emit(GenB{q, q.trivial(), q.gonal_k()});
      return;
    }
    // Coordinates ascend, so remaining entries are >= v; prune on the
    // reachable sum range.
    for (int v = lo; v <= max_abs; ++v) {
      long long rest = n - pos - 1;
      long long lo_sum = sum + v + rest * v;
      long long hi_sum = sum + v + rest * max_abs;
      long long goal_max = (target == BTarget::Cone) ? 1 : 2LL * n * max_abs;
      if (lo_sum > goal_max || hi_sum < 1) continue;
      b[pos] = v;
      self(self, pos + 1, v, sum + v);
    }
  };
  rec(rec, 0, -max_abs, 0);
}

std::vector<GenB> gen_b_list(int n, int max_abs, BTarget target,
                             bool per_switching_class) {
  std::vector<GenB> out;
  gen_b(n, max_abs, target, per_switching_class,
        [&](const GenB& g) { out.push_back(g); });
  return out;
}

std::vector<BInequality> met_family(int n) {
  if (n < 3) throw hy_error("met_family: need n >= 3");
  std::vector<BInequality> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        BVec b(n, 0);
        b[i] = 1;
        b[j] = 1;
        b[k] = -1;
        out.emplace_back(std::move(b));
      }
  return out;
}

std::vector<BInequality> metp_family(int n) {
  std::vector<BInequality> out = met_family(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        BVec b(n, 0);
        b[i] = 1;
        b[j] = 1;
        b[k] = 1;
        out.emplace_back(std::move(b));
      }
  return out;
}

DistVec switch_dist(const DistVec& d, uint32_t s_mask) {
  DistVec out = d;
  int k = 0;
  for (int i = 0; i < d.n; ++i)
    for (int j = i + 1; j < d.n; ++j, ++k)
      if (((s_mask >> i) ^ (s_mask >> j)) & 1u) out.d[k] = 1 - d.d[k];
  return out;
}

BInequality switch_ineq(const BInequality& q, uint32_t s_mask) {
  BVec b = q.b;
  for (int i = 0; i < q.n(); ++i)
    if ((s_mask >> i) & 1u) b[i] = -b[i];
  return BInequality(std::move(b));
}

}  // namespace hycone
