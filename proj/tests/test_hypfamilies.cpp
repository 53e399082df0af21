#include <random>

#include "doctest.h"
#include "hycone/hypfamilies.hpp"

using namespace hycone;

namespace {

DistVec all_ones(int n) { return DistVec(n, QVec(pair_count(n), Rat(1))); }

// Path metric of K_{2,3}: points 0,1,2 form the 3-side, 3,4 the 2-side;
// distance 1 across, 2 within a side.
DistVec k23_metric() {
  DistVec d(5, QVec(10, Rat(0)));
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      d.at(i, j) = ((i < 3) == (j < 3)) ? 2 : 1;
  return d;
}

// Brute-force max of eval_hyp over all b with |b_i| <= bound, sum(b) = 1.
Rat max_violation(const DistVec& d, int bound) {
  int n = d.n;
  BVec b(n, -bound);
  Rat best = 0;
  bool first = true;
  while (true) {
    long long sum = 0;
    for (int x : b) sum += x;
    if (sum == 1) {
      Rat v = eval_hyp(BInequality(b), d);
      if (first || v > best) best = v, first = false;
    }
    int i = 0;
    while (i < n && b[i] == bound) b[i++] = -bound;
    if (i == n) break;
    ++b[i];
  }
  return best;
}

DistVec random_dist(std::mt19937_64& rng, int n) {
  QVec d(pair_count(n));
  std::uniform_int_distribution<int> num(-2, 8), den(1, 4);
  for (auto& x : d) x = Rat(num(rng), den(rng));
  return DistVec(n, std::move(d));
}

}  // namespace

TEST_SUITE_BEGIN("hypfamilies");

TEST_CASE("cut families") {
  CHECK(cuts(4, false).size() == 7);
  CHECK(cuts(4, true).size() == 8);
  CHECK(cuts(2, true).size() == 2);
  CHECK(met_family(8).size() == 168);
  CHECK(met_family(4).size() == 12);
  CHECK(metp_family(3).size() == 4);
  // delta_S(x,y) = 1 iff the cut separates x and y
  CutVec c{3, CutVec::normalize(0b001, 3)};  // S = {1} normalized to {2,3}
  CHECK(c.delta() == BVec{1, 1, 0});
}

TEST_CASE("eval_hyp examples") {
  CHECK(eval_hyp(BInequality({1, 1, -1}), all_ones(3)) == -1);
  BInequality penta({1, 1, 1, -1, -1});
  CHECK(eval_hyp(penta, k23_metric()) == 2);
  // maximal violation over |b_i| <= 1 is exactly 2
  CHECK(max_violation(k23_metric(), 1) == 2);
  // incidence: delta_{{7}} is tight on (0,0,0,0,0,-1,1,1); delta_{{6}} hits
  // the negative coordinate and evaluates to t(1-t) = -2
  BInequality f11({0, 0, 0, 0, 0, -1, 1, 1});
  CutVec d7{8, CutVec::normalize(1u << 6, 8)};
  CHECK(eval_hyp(f11, d7.dist()) == 0);
  CutVec d6{8, CutVec::normalize(1u << 5, 8)};
  CHECK(eval_hyp(f11, d6.dist()) == -2);
}

TEST_CASE("eval_on_cut closed form") {
  BInequality tri({1, 1, -1});
  CHECK(eval_on_cut(tri, CutVec{3, CutVec::normalize(0b001, 3)}) == 0);
  CHECK(eval_on_cut(tri, CutVec{3, CutVec::normalize(0b100, 3)}) == -2);
  BInequality f1({0, 0, 0, 0, 0, 1, 1, 1});
  CHECK(f1.s == 1);
  CHECK(eval_on_cut(f1, CutVec{8, CutVec::normalize((1u << 5) | (1u << 6), 8)}) == 2);
}

TEST_CASE("closed form equals eval_hyp, validity and tightness on all cuts") {
  for (int n = 3; n <= 6; ++n) {
    auto all = cuts(n, true);
    for (const GenB& g : gen_b_list(n, 2, BTarget::Polytope)) {
      const BInequality& q = g.ineq;
      for (const CutVec& c : all) {
        long long v = eval_on_cut(q, c);
        CHECK(Rat(v) == eval_hyp(q, c.dist()));
        CHECK(v <= q.rhs());  // every cut satisfies every b-inequality
        long long t = 0;
        for (int i = 0; i < n; ++i)
          if ((c.s_mask >> i) & 1u) t += q.b[i];
        CHECK((v == q.rhs()) == (t == q.s || t == q.s + 1));
      }
    }
  }
}

TEST_CASE("cut incidence counts") {
  CHECK(cut_incidence_count(BInequality({1, 1, -1}), false) == 2);
  CHECK(cut_incidence_count(BInequality({0, 0, 0, 0, 0, -1, 1, 1}), false) == 95);
  CHECK(cut_incidence_count(BInequality({0, 0, 0, 0, 0, 1, 1, 1}), true) == 96);
}

TEST_CASE("cut rank") {
  CHECK(cut_rank(BInequality({0, 0, 0, 0, 0, -1, 1, 1}), 8) == 27);
  BInequality f91({-1, -1, -1, -1, -1, 1, 1, 4});
  CHECK(cut_incidence_count(f91, false) == 27);
  CHECK(cut_rank(f91, 8) == 27);
  CHECK_THROWS_AS(BInequality({1, 1, -1, 0, 0, 0, 0, 1}), hy_error);  // even sum
}

TEST_CASE("gen_b enumeration") {
  auto g3 = gen_b_list(3, 1, BTarget::Cone);
  REQUIRE(g3.size() == 2);
  CHECK(g3[0].ineq.b == BVec{-1, 1, 1});
  CHECK(g3[0].gonal_k == 1);
  CHECK(!g3[0].trivial);
  CHECK(g3[1].ineq.b == BVec{0, 0, 1});
  CHECK(g3[1].trivial);

  auto g5 = gen_b_list(5, 1, BTarget::Cone);
  int nontrivial = 0;
  for (auto& g : g5) nontrivial += !g.trivial;
  CHECK(nontrivial == 2);  // triangle and pentagonal classes

  // polytope target keeps only odd positive sums
  auto g4 = gen_b_list(4, 1, BTarget::Polytope, true);
  for (auto& g : g4) {
    long long sum = 0;
    for (int x : g.ineq.b) sum += x;
    CHECK(sum % 2 == 1);
    CHECK(sum >= 1);
  }
}

TEST_CASE("switch_dist") {
  CutVec c1{3, CutVec::normalize(0b001, 3)};
  DistVec zero(3, QVec(3, Rat(0)));
  CHECK(switch_dist(c1.dist(), 0b001).d == zero.d);
  CHECK(switch_dist(zero, 0b001).d == c1.dist().d);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 20; ++it) {
    int n = 3 + static_cast<int>(rng() % 4);
    DistVec d = random_dist(rng, n);
    uint32_t s = static_cast<uint32_t>(rng()) & ((1u << n) - 1);
    CHECK(switch_dist(switch_dist(d, s), s).d == d.d);
  }
}

TEST_CASE("switch_ineq") {
  BInequality tri({1, 1, -1});
  BInequality peri = switch_ineq(tri, 0b100);
  CHECK(peri.b == BVec{1, 1, 1});
  CHECK(peri.rhs() == 2);
  CHECK(switch_ineq(peri, 0b100).b == tri.b);
  BInequality f = switch_ineq(BInequality({0, 0, 0, 0, 0, -1, 1, 1}), 1u << 5);
  CHECK(f.b == BVec{0, 0, 0, 0, 0, 1, 1, 1});
  CHECK(f.rhs() == 2);
}

TEST_CASE("switching compatibility between distances and inequalities") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 60; ++it) {
    int n = 3 + static_cast<int>(rng() % 5);  // up to 7
    DistVec d = random_dist(rng, n);
    uint32_t s = static_cast<uint32_t>(rng()) & ((1u << n) - 1);
    BVec b(n);
    long long sum = 0;
    for (int& x : b) sum += (x = static_cast<int>(rng() % 5) - 2);
    if (sum % 2 == 0) b[0] += 1;
    BInequality q(b);
    BInequality qs = switch_ineq(q, s);
    CHECK(eval_hyp(q, switch_dist(d, s)) - q.rhs() ==
          eval_hyp(qs, d) - qs.rhs());
  }
}

TEST_SUITE_END();
