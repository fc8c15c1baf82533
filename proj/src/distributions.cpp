#include "parkfn/distributions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace pf {

Rat Pmf::at(int outcome) const {
  int idx = outcome - lo;
  if (idx < 0 || idx >= static_cast<int>(probs.size())) return Rat(0);
  return probs[idx];
}

Rat Pmf::mean() const {
  Rat m(0);
  for (size_t i = 0; i < probs.size(); ++i) m += Rat(lo + static_cast<long>(i)) * probs[i];
  return m;
}

Rat Pmf::variance() const {
  Rat m = mean(), s(0);
  for (size_t i = 0; i < probs.size(); ++i) {
    Rat d = Rat(lo + static_cast<long>(i)) - m;
    s += d * d * probs[i];
  }
  return s;
}

bool Pmf::is_normalized() const {
  Rat s(0);
  for (const Rat& p : probs) {
    if (p < 0) return false;
    s += p;
  }
  return s == 1;
}

namespace {

// integer power with a possibly negative exponent, as a rational
Rat ipow_rat(long base, long e) { return rat_pow(Rat(base), e); }

}  // namespace

Rat displacement_prob(int n, int i, int k) {
  if (i < 0 || i > n - 1) throw std::invalid_argument("displacement_prob: 0 <= i <= n-1");
  if (k < 0 || k > i) return Rat(0);
  // (n-i)/(n+1)^i sum_{s=k}^i C(i,s) (s+1)^{s-1} (n-s)^{i-s-1}
  Rat sum(0);
  for (int s = k; s <= i; ++s)
    sum += Rat(binom(i, s)) * ipow_rat(s + 1, s - 1) * ipow_rat(n - s, i - s - 1);
  return Rat(n - i) * ipow_rat(n + 1, -static_cast<long>(i)) * sum;
}

Polynomial displacement_prob_pform(int n, int i, int k) {
  if (i < 0 || i > n - 1)
    throw std::invalid_argument("displacement_prob_pform: 0 <= i <= n-1");
  if (k < 0 || k > i) return Polynomial();
  Rat forward(0);
  for (int j = k + 1; j <= i + 1; ++j)
    forward += Rat(binom(i, j - 1)) * ipow_rat(j, j - 2) * ipow_rat(n - j + 1, i - j);
  Rat backward(0);
  for (int j = n - i; j <= n - k; ++j)
    backward +=
        Rat(binom(i, n - j)) * ipow_rat(n - j + 1, n - j - 1) * ipow_rat(j, i - n + j - 1);
  Rat scale = Rat(n - i) * ipow_rat(n + 1, -static_cast<long>(i));
  Polynomial p = Polynomial::variable(Var::p);
  Polynomial one_minus_p = Polynomial::constant(1) - p;
  return (p.scaled(forward) + one_minus_p.scaled(backward)).scaled(scale);
}

Pmf displacement_pmf(int n, int i) {
  Pmf pmf;
  pmf.lo = 0;
  pmf.probs.resize(i + 1);
  for (int k = 0; k <= i; ++k) pmf.probs[k] = displacement_prob(n, i, k);
  return pmf;
}

Rat unlucky_prob(int n, int i) {
  if (i < 0 || i > n - 1) throw std::invalid_argument("unlucky_prob: 0 <= i <= n-1");
  return make_rat(i, n + 1);
}

Rat avg_displacement(int m, int n) {
  if (m < 1 || m > n) throw std::invalid_argument("avg_displacement: 1 <= m <= n");
  Rat total(0);
  for (int i = 0; i <= m - 1; ++i) {
    Pmf pmf = displacement_pmf(n, i);
    total += pmf.mean();
  }
  return total / Rat(m);
}

Pmf JointPmf::marginal_first() const {
  int hi = 0;
  for (const auto& [uv, p] : probs) hi = std::max(hi, uv.first);
  Pmf m;
  m.lo = 0;
  m.probs.assign(hi + 1, Rat(0));
  for (const auto& [uv, p] : probs) m.probs[uv.first] += p;
  return m;
}

Pmf JointPmf::marginal_second() const {
  int hi = 0;
  for (const auto& [uv, p] : probs) hi = std::max(hi, uv.second);
  Pmf m;
  m.lo = 0;
  m.probs.assign(hi + 1, Rat(0));
  for (const auto& [uv, p] : probs) m.probs[uv.second] += p;
  return m;
}

namespace {

JointPmf ur_convolution(int count, long denominator) {
  JointPmf law;
  law.probs[{0, 0}] = Rat(1);
  for (int i = 1; i <= count; ++i) {
    Rat p_rep = make_rat(1, denominator);
    Rat p_unl_only = make_rat(i - 1, denominator);
    Rat p_lucky = make_rat(denominator - i, denominator);
    std::map<std::pair<int, int>, Rat> next;
    for (const auto& [uv, pr] : law.probs) {
      next[{uv.first, uv.second}] += pr * p_lucky;
      next[{uv.first + 1, uv.second}] += pr * p_unl_only;
      next[{uv.first + 1, uv.second + 1}] += pr * p_rep;
    }
    law.probs = std::move(next);
  }
  return law;
}

}  // namespace

JointPmf exact_ur_law(int m, int r, int k) {
  if (m < 1 || r < 1 || k < 1) throw std::invalid_argument("exact_ur_law: m,r,k >= 1");
  return ur_convolution(m - 1, static_cast<long>(k) + static_cast<long>(m) * r);
}

JointPmf exact_ur_law_ppf(int n) {
  if (n < 2) throw std::invalid_argument("exact_ur_law_ppf: n >= 2");
  return ur_convolution(n - 1, n - 1);
}

Pmf poisson_binomial(const std::vector<Rat>& ps) {
  Pmf pmf;
  pmf.lo = 0;
  pmf.probs.assign(1, Rat(1));
  for (const Rat& p : ps) {
    std::vector<Rat> next(pmf.probs.size() + 1, Rat(0));
    for (size_t j = 0; j < pmf.probs.size(); ++j) {
      next[j] += pmf.probs[j] * (Rat(1) - p);
      next[j + 1] += pmf.probs[j] * p;
    }
    pmf.probs = std::move(next);
  }
  return pmf;
}

double tv_to_poisson(const Pmf& pmf, double lambda) {
  // TV = 1/2 sum_{j>=0} |pmf(j) - pois(j)|; the Poisson tail beyond the
  // pmf support contributes its full mass.
  const int hi = pmf.lo + static_cast<int>(pmf.probs.size()) - 1;
  double acc = 0;
  double pois = std::exp(-lambda);
  double covered = 0;
  for (int j = 0; j <= hi; ++j) {
    acc += std::abs(pmf.at(j).get_d() - pois);
    covered += pois;
    pois *= lambda / (j + 1);
  }
  acc += std::max(0.0, 1.0 - covered);
  return acc / 2;
}

namespace {

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace

double ks_to_normal(const Pmf& pmf, double mu, double sigma) {
  double ks = 0;
  Rat cum(0);
  for (size_t j = 0; j < pmf.probs.size(); ++j) {
    double x = (pmf.lo + static_cast<double>(j) - mu) / sigma;
    double phi = normal_cdf(x);
    double before = cum.get_d();
    cum += pmf.probs[j];
    double after = cum.get_d();
    ks = std::max(ks, std::abs(before - phi));
    ks = std::max(ks, std::abs(after - phi));
  }
  return ks;
}

LimitReport limit_checks(int m, int c, int r) {
  if (m < 2 || c < 0 || r < 1) throw std::invalid_argument("limit_checks: m >= 2, c >= 0, r >= 1");
  const long k = static_cast<long>(c) * m + r;
  const long N = k + static_cast<long>(m) * r;
  LimitReport rep;
  rep.m = m;
  rep.lambda = 1.0 / (c + r);

  std::vector<Rat> rep_ps(m - 1, make_rat(1, N));
  Pmf law_R = poisson_binomial(rep_ps);
  rep.tv_repeats = tv_to_poisson(law_R, rep.lambda);
  rep.tv_same_as_car_s = rep.tv_repeats;  // L_s - 1 has the same Bin(m-1, 1/N) law

  std::vector<Rat> unl_ps;
  unl_ps.reserve(m - 1);
  for (int i = 1; i <= m - 1; ++i) unl_ps.push_back(make_rat(i, N));
  Pmf law_U = poisson_binomial(unl_ps);
  rep.ks_unlucky =
      ks_to_normal(law_U, law_U.mean().get_d(), std::sqrt(law_U.variance().get_d()));
  double cr = c + r;
  rep.ks_unlucky_asymptotic = ks_to_normal(
      law_U, m / (2.0 * cr), std::sqrt((3.0 * cr - 2.0) / (6.0 * cr * cr) * m));
  return rep;
}

LimitReport limit_checks_ppf(int n) {
  if (n < 2) throw std::invalid_argument("limit_checks_ppf: n >= 2");
  LimitReport rep;
  rep.m = n;
  rep.lambda = 1.0;

  std::vector<Rat> rep_ps(n - 1, make_rat(1, n - 1));
  Pmf law_R = poisson_binomial(rep_ps);
  rep.tv_repeats = tv_to_poisson(law_R, 1.0);
  rep.tv_same_as_car_s = rep.tv_repeats;

  std::vector<Rat> unl_ps;
  unl_ps.reserve(n - 1);
  for (int i = 1; i <= n - 1; ++i) unl_ps.push_back(make_rat(i, n - 1));
  Pmf law_U = poisson_binomial(unl_ps);
  rep.ks_unlucky =
      ks_to_normal(law_U, law_U.mean().get_d(), std::sqrt(law_U.variance().get_d()));
  rep.ks_unlucky_asymptotic = ks_to_normal(law_U, n / 2.0, std::sqrt(n / 6.0));
  return rep;
}

std::string pmf_csv(const Pmf& pmf) {
  std::ostringstream os;
  os << "outcome,probability\n";
  for (size_t j = 0; j < pmf.probs.size(); ++j)
    os << pmf.lo + static_cast<long>(j) << "," << rat_str(pmf.probs[j]) << "\n";
  return os.str();
}

std::string limit_csv(const std::vector<LimitReport>& reports) {
  std::ostringstream os;
  os << "m,lambda,tv_repeats,tv_same_pref,ks_unlucky,ks_unlucky_asymptotic\n";
  for (const auto& r : reports) {
    os << r.m << "," << r.lambda << "," << r.tv_repeats << "," << r.tv_same_as_car_s
       << "," << r.ks_unlucky << "," << r.ks_unlucky_asymptotic << "\n";
  }
  return os.str();
}

}  // namespace pf
