#include <doctest.h>

#include "parkfn/oracle.hpp"
#include "parkfn/recurrences.hpp"
#include "parkfn/trees.hpp"

using namespace pf;

namespace {
Polynomial V(Var v, int e = 1) { return Polynomial::variable(v, e); }
Polynomial c(long v) { return Polynomial::constant(v); }
const std::vector<std::pair<Var, Stat>> kQuad = {
    {Var::x, Stat::unl}, {Var::y, Stat::dis}, {Var::z, Stat::des}, {Var::w, Stat::rlm}};
}  // namespace

TEST_CASE("P_rec base cases and small values") {
  CHECK(P_rec(0) == c(1));
  CHECK(Q_rec(0) == c(1));
  CHECK(P_rec(1) == V(Var::w));
  CHECK(P_rec(2) == V(Var::w) + V(Var::x) * V(Var::y) * V(Var::w) + V(Var::z) * V(Var::w, 2));
}

TEST_CASE("P_rec equals both oracles up to n = 6") {
  for (int n = 1; n <= 6; ++n) CHECK(P_rec(n) == gf_over(Domain::pf(n), kQuad));
  for (int n = 0; n <= 5; ++n) CHECK(Q_rec(n) == tree_quad_gf(n));
  for (int n = 0; n <= 8; ++n) CHECK(P_rec(n) == Q_rec(n));
}

TEST_CASE("probabilistic recurrence") {
  CHECK(Pp_rec(0) == c(1));
  CHECK(Pp_rec(1) == V(Var::w));
  for (int n = 1; n <= 4; ++n) CHECK(Pp_rec(n) == gf_over_prob(Domain::pf(n), kQuad));
  for (int n = 0; n <= 6; ++n) {
    CHECK(Pp_rec(n).subst(std::map<Var, Rat>{{Var::p, Rat(1)}}) == P_rec(n));
    Polynomial xy =
        Pp_rec(n).subst(std::map<Var, Rat>{{Var::z, Rat(1)}, {Var::w, Rat(1)}});
    CHECK(xy.degree_in(Var::p) == 0);
    CHECK(xy == Pp_xy_rec(n));
  }
  CHECK(Pp_xy_rec(0) == c(1));
  CHECK(Pp_xy_rec(2) == c(2) + V(Var::x) * V(Var::y));
}

TEST_CASE("m cars, n spots") {
  CHECK(P_mn_rec(2, 2) == P_rec(2));
  CHECK(P_mn_rec(1, 2) == c(2) * V(Var::w));
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= n; ++m) {
      CHECK(P_mn_rec(m, n) == gf_over(Domain::pf_mn(m, n), kQuad));
    }
  CHECK(Pp_mn_rec(2, 3) == gf_over_prob(Domain::pf_mn(2, 3), kQuad));
}

TEST_CASE("kreweras displacement recurrence") {
  CHECK(kreweras_dis(0) == c(1));
  CHECK(kreweras_dis(1) == c(1));
  CHECK(kreweras_dis(2) == c(1) + V(Var::q));
  for (int n = 1; n <= 6; ++n)
    CHECK(kreweras_dis(n) == gf_over(Domain::pf(n), {{Var::q, Stat::dis}}));
}

TEST_CASE("pair recurrences agree with each other and with the oracle") {
  CHECK(pair_rec_lel(1) == V(Var::y));
  CHECK(pair_rec_one(1) == V(Var::y));
  CHECK(pair_rec_lel(2) == c(2) * V(Var::y) + V(Var::x) * V(Var::y, 2));
  for (int n = 0; n <= 6; ++n) CHECK(pair_rec_lel(n) == pair_rec_one(n));
  for (int n = 1; n <= 6; ++n) {
    CHECK(pair_rec_lel(n) ==
          gf_over(Domain::pf(n), {{Var::x, Stat::unl}, {Var::y, Stat::lel}}));
    CHECK(pair_rec_one(n) ==
          gf_over(Domain::pf(n), {{Var::x, Stat::unl}, {Var::y, Stat::one}}));
  }
}

TEST_CASE("unit interval recurrence") {
  CHECK(upf_rec(0) == c(1));
  CHECK(upf_rec(1) == c(1));
  CHECK(upf_rec(2) == V(Var::y) + c(2));
  long fubini[] = {1, 1, 3, 13, 75, 541};
  for (int n = 1; n <= 5; ++n) {
    Rat total = upf_rec(n).subst(std::map<Var, Rat>{{Var::y, Rat(1)}}).constant_value();
    CHECK(total == fubini[n]);
  }
  for (int n = 1; n <= 6; ++n)
    CHECK(upf_rec(n) == gf_over(Domain::upf(n), {{Var::y, Stat::unl}}));
}

TEST_CASE("u-parking recurrences") {
  CHECK(u_rec_A({}) == c(1));
  CHECK(u_rec_A({1}) == c(1));
  CHECK(u_rec_B({1}) == V(Var::y));
  CHECK(u_rec_C({1}) == V(Var::z));
  CHECK(u_rec_A({1, 2}) == V(Var::x) + c(2));
  CHECK(u_rec_A({2, 5}) == c(2) * V(Var::x) + c(14));  // the paper's example count 2x+14
  for (auto u : std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {1, 2, 4}, {2, 4, 5}}) {
    Domain d = Domain::u_family(u);
    CHECK(u_rec_A(u) == gf_over(d, {{Var::x, Stat::unl}}));
    CHECK(u_rec_B(u) == gf_over(d, {{Var::y, Stat::one}}));
    CHECK(u_rec_C(u) == gf_over(d, {{Var::z, Stat::lel}}));
  }
  CHECK_THROWS(u_rec_A({3, 2}));
}
