#pragma once

#include "parkfn/polynomial.hpp"

#include <vector>

namespace pf {

// Four-variable recurrence for P_n(x,y,z,w) = sum x^unl y^dis z^des w^rlm
// over PF(n); P_0 = 1.
Polynomial P_rec(int n);
// Tree-side recurrence for Q_n over rooted trees on {0..n} with statistics
// (nld, inv, lev-1, deg0); literally the same recurrence as P_rec.
Polynomial Q_rec(int n);

// Probabilistic version P'_n (variable p appears until specialized).
Polynomial Pp_rec(int n);
// P'_n(x,y) = P'_n(x,y,1,1); the p dependence cancels.
Polynomial Pp_xy_rec(int n);

// m cars, n spots, via compositions of m into n-m+1 parts.
Polynomial P_mn_rec(int m, int n);
Polynomial Pp_mn_rec(int m, int n);

// Displacement enumerator P_n(q), Kreweras recurrence.
Polynomial kreweras_dis(int n);

// Pair recurrences for (unl, lel) and (unl, one); equal for every n.
Polynomial pair_rec_lel(int n);
Polynomial pair_rec_one(int n);

// Unit-interval P_n(y).
Polynomial upf_rec(int n);

// Generic u-parking recurrences: A (x^unl), B (y^one), C (z^lel).
Polynomial u_rec_A(const std::vector<int>& u);
Polynomial u_rec_B(const std::vector<int>& u);
Polynomial u_rec_C(const std::vector<int>& u);

}  // namespace pf
