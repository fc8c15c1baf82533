#pragma once

#include "parkfn/polynomial.hpp"
#include "parkfn/series.hpp"

namespace pf {

// q-statistics on PF(n)
Polynomial lucky_gf(int n);  // q prod_{i=1}^{n-1} (i + (n-i+1) q)
Polynomial rep_gf(int n);    // (q + n)^{n-1}
Polynomial unl_gf(int n);    // prod_{i=1}^{n-1} (i x + (n-i+1)), in x

// (r,k)-parking closed forms, k prod_{i=1}^{m-1}(xy + (i-1)x + k+mr-i)
Polynomial rk_unl_rep_gf(int m, int r, int k);
Polynomial rk_unl_lel_gf(int m, int r, int k);      // k y prod(...)
Polynomial rk_lel_any_gf(int m, int r, int k);      // k y (y + k+mr-1)^{m-1}
Polynomial gs_unl_mn_gf(int m, int n);              // (n-m+1) prod(i x + (n-i+1))

// Three-variable formulas on PF(n); x^lel y^one z^unl (and x^nlel for the
// correspondence, x^lel y^nlel for the contrast). Product forms hold for
// n >= 2; n = 1 is pinned to the oracle value xy.
Polynomial master_gf(int n);
Polynomial correspondence_gf(int n);
Polynomial contrast_gf(int n);
Polynomial ones_gf(int n);  // y (y + n)^{n-1}

// Gessel-Seo tree pair gf y prod(i x + (n-i+y)) — the counterexample side.
Polynomial gs_tree_nld_deg0_gf(int n);

// #\{lel = s+1, one = t+1\} and #\{lel = s+1, nlel = t+1\}
Int master_count(int n, int s, int t);
Int contrast_count(int n, int s, int t);

// Prime parking functions
Polynomial ppf_unl_rep_gf(int n);   // prod_{i=1}^{n-1}(xy + (i-1)x + n-1-i)
Polynomial ppf_unl_lel_gf(int n);   // y prod(...)
Polynomial ppf_rep_any_gf(int n);   // y (y + n-2)^{n-1}
Polynomial ppf_lel_one_gf(int len); // x^lel y^one over PPF(len), len >= 1

// Unit-interval parking functions
Int stirling2(int n, int k);
Polynomial upf_closed(int n);  // sum_k S(n,k) k! y^{n-k}

// EGF checks. upf_egf_series expands y/(y+1-exp(yt)); coefficient of t^n
// times n! must equal upf_rec(n).
TruncatedSeries upf_egf_series(int order);
bool verify_upf_egf(int order);
bool verify_fubini_egf(int order);   // y = 1 specialization vs UPF counts
bool verify_dis_log_egf(int order);  // sum P_n(q)(q-1)^{n-1} t^n/n! = log sum q^C(n,2) t^n/n!

}  // namespace pf
