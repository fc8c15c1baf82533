#include <doctest.h>

#include "parkfn/prob.hpp"

using namespace pf;

namespace {
Polynomial P() { return Polynomial::variable(Var::p); }
Polynomial c(long v) { return Polynomial::constant(v); }
}  // namespace

TEST_CASE("worked example (2,2,2)") {
  auto branches = park_probabilistic({{2, 2, 2}, 3});
  CHECK(branches.size() == 4);  // HH, HT, TH, TT roots after car 2's flip
  Polynomial success, total;
  int successes = 0;
  for (const auto& b : branches) {
    total += b.weight();
    if (b.success) {
      ++successes;
      success += b.weight();
      CHECK(b.flips.size() == 2);
    }
  }
  CHECK(successes == 2);
  CHECK(total == c(1));
  CHECK(success == c(2) * P() * (c(1) - P()));
  CHECK(prob_pf({{2, 2, 2}, 3}) == c(2) * P() * (c(1) - P()));
}

TEST_CASE("no collision means a single unanimous branch") {
  auto branches = park_probabilistic({{1, 2, 3}, 3});
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].success);
  CHECK(branches[0].flips.empty());
  CHECK(branches[0].weight() == c(1));
  CHECK(branches[0].outcome.spot_of_car == std::vector<int>{1, 2, 3});
}

TEST_CASE("(3,3) in PF_2(2,2) with probability 1-p") {
  CHECK(prob_rk({3, 3}, 2, 2) == c(1) - P());
}

TEST_CASE("deterministic parking functions with distinct prefs have probability 1") {
  CHECK(prob_pf({{3, 1, 2}, 3}) == c(1));
  CHECK(prob_pf_mn({2, 4}, 2, 4) == c(1));
}

TEST_CASE("backward scan below spot 1 fails the branch") {
  // (1,1): car 2 blocked at 1; backward leaves the street, forward parks at 2
  auto branches = park_probabilistic({{1, 1}, 2});
  REQUIRE(branches.size() == 2);
  int fails = 0;
  for (const auto& b : branches) {
    if (!b.success) {
      ++fails;
      CHECK(b.failed_car == 2);
      CHECK(b.tails == 1);
    }
  }
  CHECK(fails == 1);
  CHECK(prob_pf({{1, 1}, 2}) == P());
}

TEST_CASE("per-branch statistics feed the weighted gf") {
  // weighted_branch_gf over one vector: (2,2) on 2 spots, only backward parks
  Polynomial gf = weighted_branch_gf({{2, 2}, 2}, {{Var::x, Stat::unl}, {Var::y, Stat::dis}});
  // backward branch: car 2 parks at 1, displacement |1-2| = 1, unlucky
  CHECK(gf == (c(1) - P()) * Polynomial::variable(Var::x) * Polynomial::variable(Var::y));
}

TEST_CASE("weight conservation with longer scans") {
  for (auto prefs : {std::vector<int>{2, 2, 2, 2}, {3, 3, 3, 1}, {4, 4, 2, 2}}) {
    Polynomial total;
    for_each_branch({prefs, 4}, [&](const BranchTrace& t) { total += t.weight(); });
    CHECK(total == c(1));
  }
}
