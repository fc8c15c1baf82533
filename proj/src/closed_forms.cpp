#include "parkfn/closed_forms.hpp"

#include "parkfn/recurrences.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace pf {

namespace {

const Polynomial kOne = Polynomial::constant(1);
Polynomial var(Var v, int e = 1) { return Polynomial::variable(v, e); }
Polynomial cnst(const Int& c) { return Polynomial::constant(Rat(c)); }
Polynomial cnst(long c) { return Polynomial::constant(c); }

}  // namespace

Polynomial lucky_gf(int n) {
  if (n < 1) throw std::invalid_argument("lucky_gf: n >= 1");
  Polynomial r = var(Var::q);
  for (int i = 1; i <= n - 1; ++i) r = r * (cnst(i) + cnst(n - i + 1) * var(Var::q));
  return r;
}

Polynomial rep_gf(int n) {
  if (n < 1) throw std::invalid_argument("rep_gf: n >= 1");
  return (var(Var::q) + cnst(n)).pow(static_cast<unsigned>(n - 1));
}

Polynomial unl_gf(int n) {
  if (n < 1) throw std::invalid_argument("unl_gf: n >= 1");
  Polynomial r = kOne;
  for (int i = 1; i <= n - 1; ++i) r = r * (cnst(i) * var(Var::x) + cnst(n - i + 1));
  return r;
}

namespace {

Polynomial rk_product(int m, int r, int k) {
  Polynomial prod = kOne;
  for (int i = 1; i <= m - 1; ++i) {
    prod = prod * (var(Var::x) * var(Var::y) + cnst(i - 1) * var(Var::x) +
                   cnst(k + static_cast<long>(m) * r - i));
  }
  return prod;
}

}  // namespace

Polynomial rk_unl_rep_gf(int m, int r, int k) {
  if (m < 1 || r < 1 || k < 1) throw std::invalid_argument("rk_unl_rep_gf: m,r,k >= 1");
  return cnst(k) * rk_product(m, r, k);
}

Polynomial rk_unl_lel_gf(int m, int r, int k) {
  if (m < 1 || r < 1 || k < 1) throw std::invalid_argument("rk_unl_lel_gf: m,r,k >= 1");
  return cnst(k) * var(Var::y) * rk_product(m, r, k);
}

Polynomial rk_lel_any_gf(int m, int r, int k) {
  if (m < 1 || r < 1 || k < 1) throw std::invalid_argument("rk_lel_any_gf: m,r,k >= 1");
  return cnst(k) * var(Var::y) *
         (var(Var::y) + cnst(k + static_cast<long>(m) * r - 1)).pow(static_cast<unsigned>(m - 1));
}

Polynomial gs_unl_mn_gf(int m, int n) {
  if (m < 1 || m > n) throw std::invalid_argument("gs_unl_mn_gf: 1 <= m <= n");
  Polynomial r = cnst(n - m + 1);
  for (int i = 1; i <= m - 1; ++i) r = r * (cnst(i) * var(Var::x) + cnst(n - i + 1));
  return r;
}

namespace {

// (n-1) prod(xz+yz+(i-1)z+n-i) and (xyz+1) prod(xyz+iz+n-i) share their
// product shells between the master and contrast formulas.
Polynomial mixed_product(int n) {
  Polynomial prod = kOne;
  for (int i = 1; i <= n - 2; ++i) {
    prod = prod * (var(Var::x) * var(Var::z) + var(Var::y) * var(Var::z) +
                   cnst(i - 1) * var(Var::z) + cnst(n - i));
  }
  return prod;
}

Polynomial diagonal_product(int n) {
  Polynomial xyz = var(Var::x) * var(Var::y) * var(Var::z);
  Polynomial prod = kOne;
  for (int i = 1; i <= n - 2; ++i)
    prod = prod * (xyz + cnst(i) * var(Var::z) + cnst(n - i));
  return prod;
}

}  // namespace

Polynomial master_gf(int n) {
  if (n < 1) throw std::invalid_argument("master_gf: n >= 1");
  Polynomial xy = var(Var::x) * var(Var::y);
  if (n == 1) return xy;  // product form starts at n = 2; PF(1) gives xy
  Polynomial xyz = var(Var::x) * var(Var::y) * var(Var::z);
  return xy * (cnst(n - 1) * mixed_product(n) + (xyz + kOne) * diagonal_product(n));
}

Polynomial correspondence_gf(int n) { return master_gf(n); }

Polynomial contrast_gf(int n) {
  if (n < 1) throw std::invalid_argument("contrast_gf: n >= 1");
  Polynomial xy = var(Var::x) * var(Var::y);
  if (n == 1) return xy;
  Polynomial xyz = var(Var::x) * var(Var::y) * var(Var::z);
  return xy * (cnst(n) * mixed_product(n) + xyz * diagonal_product(n));
}

Polynomial ones_gf(int n) {
  if (n < 1) throw std::invalid_argument("ones_gf: n >= 1");
  return var(Var::y) * (var(Var::y) + cnst(n)).pow(static_cast<unsigned>(n - 1));
}

Polynomial gs_tree_nld_deg0_gf(int n) {
  if (n < 1) throw std::invalid_argument("gs_tree_nld_deg0_gf: n >= 1");
  Polynomial r = var(Var::y);
  for (int i = 1; i <= n - 1; ++i)
    r = r * (cnst(i) * var(Var::x) + cnst(n - i) + var(Var::y));
  return r;
}

namespace {

Int trinomial(int n, int a, int b) {
  // n! / (a! b! (n-a-b)!) with out-of-range => 0
  if (a < 0 || b < 0 || a + b > n) return Int(0);
  return multinomial(n, {a, b, n - a - b});
}

}  // namespace

Int master_count(int n, int s, int t) {
  if (n < 2) throw std::invalid_argument("master_count: n >= 2");
  if (s < 0 || t < 0) return Int(0);
  if (s != t)
    return trinomial(n - 2, s, t) * int_pow(n - 1, static_cast<unsigned long>(
                                                       std::max(n - s - t - 1, 0)));
  Int total(0);
  if (n - 2 * s - 2 >= 0)
    total += trinomial(n - 2, s, s) *
             int_pow(n - 1, static_cast<unsigned long>(n - 2 * s - 1));
  if (s <= n - 2 && n - s - 2 >= 0)
    total += binom(n - 2, s) * int_pow(n, static_cast<unsigned long>(n - s - 2));
  if (s >= 1 && s - 1 <= n - 2)
    total += binom(n - 2, s - 1) * int_pow(n, static_cast<unsigned long>(n - s - 1));
  return total;
}

Int contrast_count(int n, int s, int t) {
  if (n < 2) throw std::invalid_argument("contrast_count: n >= 2");
  if (s < 0 || t < 0) return Int(0);
  if (s != t)
    return trinomial(n - 2, s, t) * Int(n) *
           int_pow(n - 1, static_cast<unsigned long>(std::max(n - s - t - 2, 0)));
  Int total(0);
  if (n - 2 * s - 2 >= 0)
    total += trinomial(n - 2, s, s) * Int(n) *
             int_pow(n - 1, static_cast<unsigned long>(n - 2 * s - 2));
  if (s >= 1 && s - 1 <= n - 2)
    total += binom(n - 2, s - 1) * int_pow(n, static_cast<unsigned long>(n - s - 1));
  return total;
}

namespace {

Polynomial ppf_product(int n) {
  Polynomial prod = kOne;
  for (int i = 1; i <= n - 1; ++i) {
    prod = prod * (var(Var::x) * var(Var::y) + cnst(i - 1) * var(Var::x) +
                   cnst(n - 1 - i));
  }
  return prod;
}

}  // namespace

Polynomial ppf_unl_rep_gf(int n) {
  if (n < 1) throw std::invalid_argument("ppf_unl_rep_gf: n >= 1");
  return ppf_product(n);
}

Polynomial ppf_unl_lel_gf(int n) {
  if (n < 1) throw std::invalid_argument("ppf_unl_lel_gf: n >= 1");
  return var(Var::y) * ppf_product(n);
}

Polynomial ppf_rep_any_gf(int n) {
  if (n < 2) throw std::invalid_argument("ppf_rep_any_gf: n >= 2");
  return var(Var::y) * (var(Var::y) + cnst(n - 2)).pow(static_cast<unsigned>(n - 1));
}

Polynomial ppf_lel_one_gf(int len) {
  if (len < 1) throw std::invalid_argument("ppf_lel_one_gf: len >= 1");
  Polynomial x = var(Var::x), y = var(Var::y);
  if (len == 1) return x * y;  // PPF(1) = {(1)}
  const int n = len - 1;       // formula indexes PPF(n+1)
  Polynomial base = cnst(n - 1) + x + y;
  Polynomial first = x * base.pow(static_cast<unsigned>(n - 1)) *
                     (cnst(n - 1) * y - x - cnst(n - 1));
  Polynomial second = x * (cnst(n - 1) + x).pow(static_cast<unsigned>(n));
  Polynomial third =
      x.pow(2) * y.pow(2) * (cnst(n) + x * y).pow(static_cast<unsigned>(n - 1));
  return first + second + third;
}

Int stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  std::vector<std::vector<Int>> s(n + 1);
  for (int i = 0; i <= n; ++i) s[i].assign(i + 1, Int(0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j)
      s[i][j] = (j < i ? s[i - 1][j] * j : Int(0)) + (j - 1 <= i - 1 ? s[i - 1][j - 1] : Int(0));
  return s[n][k];
}

Polynomial upf_closed(int n) {
  if (n < 0) throw std::invalid_argument("upf_closed: n >= 0");
  if (n == 0) return kOne;
  Polynomial r;
  for (int k = 1; k <= n; ++k)
    r += cnst(stirling2(n, k) * factorial(static_cast<unsigned long>(k))) *
         var(Var::y, n - k);
  return r;
}

TruncatedSeries upf_egf_series(int order) {
  // y/(y+1-exp(yt)) = 1/(1 - sum_{k>=1} y^{k-1} t^k / k!), coefficient-exact.
  TruncatedSeries denom(order);
  denom.set_coeff(0, kOne);
  for (int k = 1; k <= order; ++k) {
    denom.set_coeff(k, (-Polynomial::variable(Var::y, k - 1))
                           .scaled(Rat(Int(1), factorial(static_cast<unsigned long>(k)))));
  }
  return denom.inverse();
}

bool verify_upf_egf(int order) {
  TruncatedSeries q = upf_egf_series(order);
  for (int n = 0; n <= order; ++n) {
    Polynomial from_series =
        q.coeff(n).scaled(Rat(factorial(static_cast<unsigned long>(n))));
    if (from_series != upf_rec(n)) return false;
  }
  return true;
}

bool verify_fubini_egf(int order) {
  // 1/(2 - exp(t)) against the unit-interval counts upf_rec(n)|_{y=1}
  TruncatedSeries expt(order);
  for (int k = 0; k <= order; ++k)
    expt.set_coeff(k, kOne.scaled(Rat(Int(1), factorial(static_cast<unsigned long>(k)))));
  TruncatedSeries denom(order);
  denom.set_coeff(0, cnst(2));
  denom -= expt;
  TruncatedSeries fub = denom.inverse();
  for (int n = 0; n <= order; ++n) {
    Rat count = fub.coeff(n).constant_value() * Rat(factorial(static_cast<unsigned long>(n)));
    Polynomial expected = upf_rec(n).subst(std::map<Var, Rat>{{Var::y, Rat(1)}});
    if (Polynomial::constant(count) != expected) return false;
  }
  return true;
}

bool verify_dis_log_egf(int order) {
  // LHS: sum_{n>=1} I_n(q) (q-1)^{n-1} t^n / n! where I_n is the inversion
  // enumerator of labelled trees on n vertices, i.e. the displacement
  // enumerator of PF(n-1).
  TruncatedSeries lhs(order);
  Polynomial qm1 = var(Var::q) - kOne;
  for (int n = 1; n <= order; ++n) {
    Polynomial c = kreweras_dis(n - 1) * qm1.pow(static_cast<unsigned>(n - 1));
    lhs.set_coeff(n, c.scaled(Rat(Int(1), factorial(static_cast<unsigned long>(n)))));
  }
  // RHS: log sum_{n>=0} q^binom(n,2) t^n / n!
  TruncatedSeries inner(order);
  for (int n = 0; n <= order; ++n) {
    inner.set_coeff(n, var(Var::q, static_cast<int>(n) * (n - 1) / 2)
                           .scaled(Rat(Int(1), factorial(static_cast<unsigned long>(n)))));
  }
  return lhs == inner.log();
}

}  // namespace pf
