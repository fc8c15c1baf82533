#pragma once

#include "parkfn/parking.hpp"
#include "parkfn/polynomial.hpp"

#include <functional>
#include <vector>

namespace pf {

struct CoinFlip {
  int car;     // 1-based
  bool heads;  // heads = forward (weight p), tails = backward (weight 1-p)
};

// One fully resolved branch of the probabilistic protocol. The branch
// weight is p^heads (1-p)^tails; over all branches of a vector the weights
// sum to 1 identically in p.
struct BranchTrace {
  std::vector<CoinFlip> flips;
  int heads = 0;
  int tails = 0;
  bool success = false;
  int failed_car = -1;
  Outcome outcome;  // meaningful only on success

  Polynomial weight() const;
};

// Depth-first expansion of every coin-flip sequence. A car whose preferred
// spot is free parks without a flip; otherwise one flip fixes its scan
// direction for the whole traversal. Leaving the street (past `spots`
// forward, below 1 backward) fails that branch.
void for_each_branch(const PrefVector& v, const std::function<void(const BranchTrace&)>& fn);
std::vector<BranchTrace> park_probabilistic(const PrefVector& v);

// Success-probability polynomials in p.
Polynomial prob_pf(const PrefVector& v);                         // all cars park; spots from v
Polynomial prob_pf_mn(const std::vector<int>& prefs, int m, int n);
Polynomial prob_u(const std::vector<int>& prefs, const std::vector<int>& u);
Polynomial prob_rk(const std::vector<int>& prefs, int r, int k);

// Per-vector weighted statistic sum: sum over qualifying branches of
// weight * prod var^stat. `event` additionally filters successful branches
// (the (r,k) sorted-outcome condition); null means plain success.
Polynomial weighted_branch_gf(
    const PrefVector& v, const std::vector<std::pair<Var, Stat>>& weights,
    const std::function<bool(const Outcome&)>& event = nullptr);

}  // namespace pf
