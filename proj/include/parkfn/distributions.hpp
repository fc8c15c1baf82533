#pragma once

#include "parkfn/polynomial.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pf {

// Exact probability mass function on consecutive integer outcomes.
struct Pmf {
  int lo = 0;              // support is lo, lo+1, ..., lo+probs.size()-1
  std::vector<Rat> probs;  // exact, sums to 1

  Rat at(int outcome) const;
  Rat mean() const;
  Rat variance() const;
  bool is_normalized() const;
};

// Proposition-style displacement law of the (i+1)-th car given that the
// cars park, street length n. Independent of m and of p.
Pmf displacement_pmf(int n, int i);
Rat displacement_prob(int n, int i, int k);            // simplified (p-free) form
Polynomial displacement_prob_pform(int n, int i, int k);  // two-sum form, var p
Rat unlucky_prob(int n, int i);                        // i/(n+1)
Rat avg_displacement(int m, int n);                    // (1/m) sum_i D_i

// Joint law of (U, R) = sum of m-1 independent coupled Bernoulli pairs with
// P(U_i=1, R_i=1) = 1/N, P(U_i=1, R_i=0) = (i-1)/N, N = k+mr.
struct JointPmf {
  std::map<std::pair<int, int>, Rat> probs;
  Pmf marginal_first() const;
  Pmf marginal_second() const;
};

JointPmf exact_ur_law(int m, int r, int k);
JointPmf exact_ur_law_ppf(int n);  // denominators n-1

// Poisson binomial: sum of independent Bernoulli(ps[i]).
Pmf poisson_binomial(const std::vector<Rat>& ps);

// Distances; floating point is confined to these final computations.
double tv_to_poisson(const Pmf& pmf, double lambda);
double ks_to_normal(const Pmf& pmf, double mu, double sigma);

struct LimitReport {
  int m = 0;
  double lambda = 0;           // Poisson parameter 1/(c+r) (1 for PPF)
  double tv_repeats = 0;       // TV(R law, Poisson(lambda))
  double tv_same_as_car_s = 0; // TV(L_s - 1 law, Poisson(lambda))
  double ks_unlucky = 0;       // KS of exactly standardized U vs Phi
  double ks_unlucky_asymptotic = 0;  // standardized with the asymptotic constants
};

LimitReport limit_checks(int m, int c, int r);  // (r,k)-family, k = c m + r
LimitReport limit_checks_ppf(int n);

std::string pmf_csv(const Pmf& pmf);
std::string limit_csv(const std::vector<LimitReport>& reports);

}  // namespace pf
