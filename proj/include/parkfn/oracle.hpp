#pragma once

#include "parkfn/parking.hpp"
#include "parkfn/polynomial.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pf {

// Brute-force enumeration domain: a preference box [base]^cars plus a
// membership predicate. Exceeding the guard raises DomainGuardError.
struct Domain {
  enum class Family { pf, pf_mn, rk, ppf, upf, u };

  Family family;
  int cars = 0;
  int spots = 0;       // street length; also the enumeration base
  std::vector<int> u;  // rk / u families

  static Domain pf(int n);
  static Domain pf_mn(int m, int n);
  static Domain rk(int m, int r, int k);
  static Domain ppf(int n);
  static Domain upf(int n);
  static Domain u_family(std::vector<int> u);

  Int size() const;  // spots^cars
  bool member(const PrefVector& v) const;
  bool supports_probabilistic() const;
  std::string describe() const;
};

class DomainGuardError : public std::runtime_error {
 public:
  explicit DomainGuardError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long kDomainGuard = 100'000'000;

// Workers for parallel enumeration: PARKFN_THREADS if set, else hardware
// parallelism. Results never depend on the worker count.
int worker_count();

Int count_over(const Domain& d);

// Exact sum over members of prod var^stat (deterministic protocol).
Polynomial gf_over(const Domain& d, const std::vector<std::pair<Var, Stat>>& weights);

// Probability-weighted sum over the whole preference box: for each vector,
// sum over qualifying probabilistic branches of weight * prod var^stat.
Polynomial gf_over_prob(const Domain& d, const std::vector<std::pair<Var, Stat>>& weights);

// Contingency table of member counts by a statistic tuple.
std::map<std::vector<int>, Int> count_by(const Domain& d, const std::vector<Stat>& stats);

// Generalized variants taking an arbitrary monomial per vector/branch, for
// statistics outside the named list (e.g. #\{i: pref_i = pref_s\}).
using MonomialFn = std::function<ExpVec(const PrefVector&, const StatRecord&)>;
Polynomial gf_over_custom(const Domain& d, const MonomialFn& monomial);
Polynomial gf_over_prob_custom(const Domain& d, const MonomialFn& monomial);

}  // namespace pf
