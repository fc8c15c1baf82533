#include "parkfn/prob.hpp"

#include <algorithm>
#include <stdexcept>

namespace pf {

Polynomial BranchTrace::weight() const {
  Polynomial one_minus_p = Polynomial::constant(1) - Polynomial::variable(Var::p);
  return Polynomial::variable(Var::p, heads) *
         one_minus_p.pow(static_cast<unsigned>(tails));
}

namespace {

struct BranchState {
  const PrefVector* v = nullptr;
  const std::function<void(const BranchTrace&)>* fn = nullptr;
  std::vector<char> taken;
  BranchTrace trace;

  void run(int car) {
    const PrefVector& pv = *v;
    if (car == pv.cars()) {
      trace.success = true;
      trace.failed_car = -1;
      (*fn)(trace);
      return;
    }
    int want = pv.prefs[car];
    if (!taken[want]) {
      taken[want] = 1;
      trace.outcome.spot_of_car.push_back(want);
      run(car + 1);
      trace.outcome.spot_of_car.pop_back();
      taken[want] = 0;
      return;
    }
    // Blocked: one coin flip fixes the direction for this car's whole scan.
    scan(car, want, +1);
    scan(car, want, -1);
  }

  void scan(int car, int want, int dir) {
    bool heads = dir > 0;
    trace.flips.push_back({car + 1, heads});
    heads ? ++trace.heads : ++trace.tails;
    int s = want + dir;
    while (s >= 1 && s <= v->spots && taken[s]) s += dir;
    if (s < 1 || s > v->spots) {
      trace.success = false;
      trace.failed_car = car + 1;
      (*fn)(trace);
      trace.failed_car = -1;
    } else {
      taken[s] = 1;
      trace.outcome.spot_of_car.push_back(s);
      run(car + 1);
      trace.outcome.spot_of_car.pop_back();
      taken[s] = 0;
    }
    heads ? --trace.heads : --trace.tails;
    trace.flips.pop_back();
  }
};

}  // namespace

void for_each_branch(const PrefVector& v, const std::function<void(const BranchTrace&)>& fn) {
  if (!v.valid()) throw std::invalid_argument("for_each_branch: invalid preference vector");
  BranchState st;
  st.v = &v;
  st.fn = &fn;
  st.taken.assign(static_cast<size_t>(v.spots) + 1, 0);
  st.trace.outcome.spot_of_car.reserve(v.prefs.size());
  st.run(0);
}

std::vector<BranchTrace> park_probabilistic(const PrefVector& v) {
  std::vector<BranchTrace> out;
  for_each_branch(v, [&](const BranchTrace& t) { out.push_back(t); });
  return out;
}

namespace {

// Accumulates weight polynomials bucketed by (heads, tails) so the p-expansion
// happens once per bucket instead of once per branch.
Polynomial expand_buckets(const std::map<std::pair<int, int>, Polynomial>& buckets) {
  Polynomial total;
  Polynomial one_minus_p = Polynomial::constant(1) - Polynomial::variable(Var::p);
  for (const auto& [ht, poly] : buckets) {
    Polynomial w = Polynomial::variable(Var::p, ht.first) *
                   one_minus_p.pow(static_cast<unsigned>(ht.second));
    total += w * poly;
  }
  return total;
}

}  // namespace

Polynomial weighted_branch_gf(const PrefVector& v,
                              const std::vector<std::pair<Var, Stat>>& weights,
                              const std::function<bool(const Outcome&)>& event) {
  std::map<std::pair<int, int>, Polynomial> buckets;
  for_each_branch(v, [&](const BranchTrace& t) {
    if (!t.success) return;
    if (event && !event(t.outcome)) return;
    ExpVec e = kZeroExp;
    if (!weights.empty()) {
      StatRecord stats = compute_stats(v, t.outcome);
      for (const auto& [var, st] : weights)
        e[static_cast<int>(var)] += stat_value(stats, st);
    }
    buckets[{t.heads, t.tails}].add_term(e, Rat(1));
  });
  return expand_buckets(buckets);
}

Polynomial prob_pf(const PrefVector& v) { return weighted_branch_gf(v, {}); }

Polynomial prob_pf_mn(const std::vector<int>& prefs, int m, int n) {
  if (static_cast<int>(prefs.size()) != m || m > n)
    throw std::invalid_argument("prob_pf_mn: need |prefs| = m <= n");
  return prob_pf({prefs, n});
}

Polynomial prob_u(const std::vector<int>& prefs, const std::vector<int>& u) {
  if (prefs.size() != u.size())
    throw std::invalid_argument("prob_u: |prefs| != |u|");
  PrefVector v{prefs, u.empty() ? 1 : u.back()};
  return weighted_branch_gf(v, {}, [&u](const Outcome& out) {
    std::vector<int> s = out.spot_of_car;
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i)
      if (s[i] > u[i]) return false;
    return true;
  });
}

Polynomial prob_rk(const std::vector<int>& prefs, int r, int k) {
  return prob_u(prefs, rk_to_u(static_cast<int>(prefs.size()), r, k));
}

}  // namespace pf
