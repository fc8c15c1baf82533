#include <doctest.h>

#include "parkfn/oracle.hpp"

#include <cstdlib>

using namespace pf;

namespace {
Polynomial V(Var v, int e = 1) { return Polynomial::variable(v, e); }
const std::vector<std::pair<Var, Stat>> kQuad = {
    {Var::x, Stat::unl}, {Var::y, Stat::dis}, {Var::z, Stat::des}, {Var::w, Stat::rlm}};
}  // namespace

TEST_CASE("hand-enumerated generating polynomials") {
  // PF(2): (1,1) -> xyw, (1,2) -> w, (2,1) -> zw^2
  CHECK(gf_over(Domain::pf(2), kQuad) ==
        V(Var::w) + V(Var::x) * V(Var::y) * V(Var::w) + V(Var::z) * V(Var::w, 2));
  CHECK(gf_over(Domain::pf(1), kQuad) == V(Var::w));
  // PPF(3) with (unl, rep): x^2y^2 + x^2y + xy + x
  CHECK(gf_over(Domain::ppf(3), {{Var::x, Stat::unl}, {Var::y, Stat::rep}}) ==
        V(Var::x, 2) * V(Var::y, 2) + V(Var::x, 2) * V(Var::y) +
            V(Var::x) * V(Var::y) + V(Var::x));
}

TEST_CASE("counts") {
  CHECK(count_over(Domain::pf(4)) == 125);
  CHECK(count_over(Domain::ppf(4)) == 27);
  CHECK(count_over(Domain::pf_mn(2, 4)) == 15);   // (4-2+1) 5^1
  CHECK(count_over(Domain::upf(3)) == 13);
  CHECK(count_over(Domain::u_family({2, 5})) == 16);  // the paper's u=(2,5) example
  CHECK(count_over(Domain::rk(2, 1, 1)) == 3);
}

TEST_CASE("count_by tables") {
  auto table = count_by(Domain::pf(2), {Stat::lel, Stat::one});
  REQUIRE(table.size() == 2);
  CHECK(table.at({1, 1}) == 2);
  CHECK(table.at({2, 2}) == 1);
  auto single = count_by(Domain::pf(1), {Stat::lel, Stat::one});
  CHECK(single.at({1, 1}) == 1);
}

TEST_CASE("statistic list order does not matter") {
  Polynomial a = gf_over(Domain::pf(3), {{Var::x, Stat::unl}, {Var::y, Stat::dis}});
  Polynomial b = gf_over(Domain::pf(3), {{Var::y, Stat::dis}, {Var::x, Stat::unl}});
  CHECK(a == b);
}

TEST_CASE("parallel and sequential enumeration agree") {
  setenv("PARKFN_THREADS", "1", 1);
  Polynomial seq = gf_over(Domain::pf(5), kQuad);
  Int seq_count = count_over(Domain::pf(6));
  setenv("PARKFN_THREADS", "4", 1);
  Polynomial par = gf_over(Domain::pf(5), kQuad);
  Int par_count = count_over(Domain::pf(6));
  unsetenv("PARKFN_THREADS");
  CHECK(seq == par);
  CHECK(seq_count == par_count);
}

TEST_CASE("gf_over_prob basics") {
  CHECK(gf_over_prob(Domain::pf(1), kQuad) == V(Var::w));
  Polynomial n2 = gf_over_prob(Domain::pf(2), kQuad)
                      .subst(std::map<Var, Rat>{{Var::z, Rat(1)}, {Var::w, Rat(1)}});
  CHECK(n2 == Polynomial::constant(2) + V(Var::x) * V(Var::y));
  CHECK(n2.degree_in(Var::p) == 0);
  CHECK_THROWS_AS(gf_over_prob(Domain::ppf(3), kQuad), std::invalid_argument);
  CHECK_THROWS_AS(gf_over_prob(Domain::upf(3), kQuad), std::invalid_argument);
}

TEST_CASE("domain guard") {
  CHECK_THROWS_AS(count_over(Domain::pf(10)), DomainGuardError);  // 10^10 > guard
  CHECK_THROWS_AS(gf_over(Domain::pf_mn(9, 9), kQuad), DomainGuardError);
}

TEST_CASE("domain validation") {
  CHECK_THROWS(Domain::pf(0));
  CHECK_THROWS(Domain::pf_mn(3, 2));
  CHECK_THROWS(Domain::u_family({2, 2}));
  CHECK_THROWS(Domain::u_family({}));
  CHECK_THROWS(Domain::rk(0, 1, 1));
}
