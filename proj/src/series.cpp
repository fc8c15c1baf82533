#include "parkfn/series.hpp"

#include <stdexcept>

namespace pf {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("series: negative order");
  c_.resize(order + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Polynomial> coeffs)
    : order_(order), c_(std::move(coeffs)) {
  if (order < 0 || c_.size() != static_cast<size_t>(order) + 1)
    throw std::invalid_argument("series: coefficient count != order+1");
}

void TruncatedSeries::check_same_order(const TruncatedSeries& o) const {
  if (order_ != o.order_) throw std::invalid_argument("series: order mismatch");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
  check_same_order(o);
  for (int k = 0; k <= order_; ++k) c_[k] += o.c_[k];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
  check_same_order(o);
  for (int k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  a.check_same_order(b);
  TruncatedSeries r(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

TruncatedSeries TruncatedSeries::exp() const {
  if (!c_[0].is_zero())
    throw std::domain_error("series exp: constant term must be 0");
  TruncatedSeries g(order_);
  g.c_[0] = Polynomial::constant(1);
  // g' = f' g  =>  n g_n = sum_{k=1..n} k f_k g_{n-k}
  for (int n = 1; n <= order_; ++n) {
    Polynomial s;
    for (int k = 1; k <= n; ++k) s += (c_[k] * Rat(k)) * g.c_[n - k];
    g.c_[n] = s.scaled(Rat(1, n));
  }
  return g;
}

TruncatedSeries TruncatedSeries::log() const {
  if (!(c_[0] == Polynomial::constant(1)))
    throw std::domain_error("series log: constant term must be 1");
  TruncatedSeries g(order_);
  // f g' = f'  =>  n g_n = n f_n - sum_{k=1..n-1} k g_k f_{n-k}
  for (int n = 1; n <= order_; ++n) {
    Polynomial s = c_[n] * Rat(n);
    for (int k = 1; k < n; ++k) s -= (g.c_[k] * Rat(k)) * c_[n - k];
    g.c_[n] = s.scaled(Rat(1, n));
  }
  return g;
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (!c_[0].is_constant() || c_[0].is_zero())
    throw std::domain_error("series inverse: constant term must be an invertible constant");
  Rat inv0 = 1 / c_[0].constant_value();
  TruncatedSeries g(order_);
  g.c_[0] = Polynomial::constant(inv0);
  for (int n = 1; n <= order_; ++n) {
    Polynomial s;
    for (int k = 1; k <= n; ++k) s += c_[k] * g.c_[n - k];
    g.c_[n] = (-s).scaled(inv0);
  }
  return g;
}

}  // namespace pf
