#include <doctest.h>

#include "parkfn/parking.hpp"

using namespace pf;

namespace {
PrefVector pv(std::vector<int> prefs, int spots) { return {std::move(prefs), spots}; }
}  // namespace

TEST_CASE("deterministic protocol") {
  // the paper's running example: oc((2,2,1,3)) = 2314
  ParkResult r = park_deterministic(pv({2, 2, 1, 3}, 4));
  REQUIRE(r.success);
  CHECK(r.outcome.spot_of_car == std::vector<int>{2, 3, 1, 4});

  ParkResult one = park_deterministic(pv({1}, 1));
  REQUIRE(one.success);
  CHECK(one.outcome.spot_of_car == std::vector<int>{1});

  ParkResult fail = park_deterministic(pv({2, 2, 2}, 3));
  CHECK_FALSE(fail.success);
  CHECK(fail.failed_car == 3);
}

TEST_CASE("membership predicates") {
  CHECK(is_parking_function(pv({2, 2, 1, 3}, 4)));
  CHECK(is_parking_function(pv({1, 1, 1, 1}, 4)));
  CHECK_FALSE(is_parking_function(pv({2, 2, 2}, 3)));

  // count over [4]^4 = 125
  int count = 0;
  PrefVector v = pv({1, 1, 1, 1}, 4);
  while (true) {
    if (is_parking_function(v)) ++count;
    int pos = 3;
    while (pos >= 0 && v.prefs[pos] == 4) v.prefs[pos--] = 1;
    if (pos < 0) break;
    ++v.prefs[pos];
  }
  CHECK(count == 125);

  CHECK(is_u_parking(pv({1, 2}, 2), {1, 2}));
  CHECK_FALSE(is_u_parking(pv({1, 3}, 3), {1, 2}));
  CHECK(is_rk_parking(pv({2, 3}, 4), 2, 2));   // u = (2,4)
  CHECK_FALSE(is_rk_parking(pv({3, 4}, 4), 2, 2));

  // 4 = 2^2 prime parking functions of length 3
  int primes = 0;
  v = pv({1, 1, 1}, 3);
  while (true) {
    if (is_prime_parking(v)) ++primes;
    int pos = 2;
    while (pos >= 0 && v.prefs[pos] == 3) v.prefs[pos--] = 1;
    if (pos < 0) break;
    ++v.prefs[pos];
  }
  CHECK(primes == 4);
  CHECK(is_prime_parking(pv({1}, 1)));

  // the paper's unit-interval example
  CHECK(is_unit_interval_parking(pv({4, 1, 1, 2, 6, 4}, 6)));
  CHECK_FALSE(is_unit_interval_parking(pv({1, 1, 1}, 3)));
  CHECK(is_unit_interval_parking(pv({1, 1, 2}, 3)));
}

TEST_CASE("statistics of (2,2,1,3)") {
  PrefVector v = pv({2, 2, 1, 3}, 4);
  StatRecord st = compute_stats(v, park_deterministic(v).outcome);
  // oc^{-1} = 3124
  CHECK(st.des == 1);
  CHECK(st.rlm == 1);
  CHECK(st.unl == 1);
  CHECK(st.dis == 1);
  CHECK(st.rep == 1);
  CHECK(st.lel == 2);
  CHECK(st.one == 1);
  CHECK(st.nlel == 2);
}

TEST_CASE("statistics of the identity and of (1,1)") {
  PrefVector id = pv({1, 2, 3, 4, 5}, 5);
  StatRecord st = compute_stats(id, park_deterministic(id).outcome);
  CHECK(st.unl == 0);
  CHECK(st.dis == 0);
  CHECK(st.rep == 0);
  CHECK(st.lel == 1);
  CHECK(st.one == 1);
  CHECK(st.lucky == 5);

  PrefVector two = pv({1, 1}, 2);
  StatRecord st2 = compute_stats(two, park_deterministic(two).outcome);
  CHECK(st2.unl == 1);
  CHECK(st2.dis == 1);
  CHECK(st2.rep == 1);
  CHECK(st2.lel == 2);
  CHECK(st2.one == 2);
  CHECK(st2.des == 0);
  CHECK(st2.rlm == 1);
  CHECK(st2.per_car_displacement == std::vector<int>{0, 1});
}

TEST_CASE("segment-wise des/rlm for m < n") {
  // (1,3) on 3 spots: two singleton runs, each ending in a right-to-left max
  PrefVector v = pv({1, 3}, 3);
  StatRecord st = compute_stats(v, park_deterministic(v).outcome);
  CHECK(st.des == 0);
  CHECK(st.rlm == 2);
  // (3,1): still two runs
  PrefVector w = pv({3, 1}, 3);
  StatRecord stw = compute_stats(w, park_deterministic(w).outcome);
  CHECK(stw.des == 0);
  CHECK(stw.rlm == 2);
  // (2,1): one run of two spots, descending car order
  PrefVector u = pv({2, 1}, 3);
  StatRecord stu = compute_stats(u, park_deterministic(u).outcome);
  CHECK(stu.des == 1);
  CHECK(stu.rlm == 2);
}

TEST_CASE("single-car conventions") {
  PrefVector v = pv({1}, 1);
  StatRecord st = compute_stats(v, park_deterministic(v).outcome);
  CHECK(st.lel == 1);
  CHECK(st.nlel == 1);  // treated as lel when there is no second car
  CHECK(st.rlm == 1);
  CHECK(st.des == 0);
}

TEST_CASE("invalid vectors") {
  CHECK_FALSE(pv({0, 1}, 2).valid());
  CHECK_FALSE(pv({1, 3}, 2).valid());
  CHECK_FALSE(is_parking_function(pv({1, 3}, 2)));
  CHECK(rk_to_u(3, 2, 1) == std::vector<int>{1, 3, 5});
  CHECK_THROWS(rk_to_u(3, 0, 1));
}
