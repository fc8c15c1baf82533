#pragma once

#include "parkfn/polynomial.hpp"

#include <vector>

namespace pf {

// Formal power series in t, truncated at a fixed order, with Polynomial
// coefficients. coeff(k) is the coefficient of t^k; arithmetic truncates
// consistently at the common order.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<Polynomial> coeffs);

  int order() const { return order_; }
  const Polynomial& coeff(int k) const { return c_.at(k); }
  void set_coeff(int k, Polynomial p) { c_.at(k) = std::move(p); }

  TruncatedSeries& operator+=(const TruncatedSeries& o);
  TruncatedSeries& operator-=(const TruncatedSeries& o);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

  TruncatedSeries exp() const;      // requires coeff(0) == 0
  TruncatedSeries log() const;      // requires coeff(0) == 1
  TruncatedSeries inverse() const;  // requires coeff(0) a nonzero constant

  bool operator==(const TruncatedSeries& o) const = default;

 private:
  void check_same_order(const TruncatedSeries& o) const;
  int order_;
  std::vector<Polynomial> c_;  // size order_ + 1
};

}  // namespace pf
