#pragma once

#include "parkfn/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace pf {

// The fixed variable alphabet, in canonical order. Every generating
// polynomial in the library lives in this one ring.
enum class Var : int { x = 0, y = 1, z = 2, w = 3, p = 4, q = 5, t = 6 };
inline constexpr int kNumVars = 7;
inline constexpr std::array<const char*, kNumVars> kVarNames = {
    "x", "y", "z", "w", "p", "q", "t"};
std::optional<Var> var_from_name(std::string_view name);

using ExpVec = std::array<int, kNumVars>;
inline constexpr ExpVec kZeroExp = {0, 0, 0, 0, 0, 0, 0};

// Graded lexicographic: total degree first, ties by lexicographic
// comparison in the fixed variable order.
struct GrlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse exact multivariate polynomial. Invariant: no zero coefficients
// stored, so equality is term-map equality.
class Polynomial {
 public:
  using TermMap = std::map<ExpVec, Rat, GrlexLess>;

  Polynomial() = default;  // zero
  static Polynomial constant(Rat c);
  static Polynomial constant(long c);
  static Polynomial variable(Var v, int e = 1);
  static Polynomial monomial(const ExpVec& e, Rat coef);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;  // 0 for the zero polynomial
  int degree_in(Var v) const;
  const TermMap& terms() const { return terms_; }
  Rat coeff(const ExpVec& e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const Rat& c) const;
  Polynomial pow(unsigned e) const;

  // Replace each bound variable; unbound variables stay.
  Polynomial subst(const std::map<Var, Polynomial>& bindings) const;
  Polynomial subst(const std::map<Var, Rat>& bindings) const;
  Rat eval(const std::array<Rat, kNumVars>& point) const;

  void add_term(const ExpVec& e, const Rat& c);  // merges, drops zeros

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str() const;  // human-readable, canonical term order

  // Canonical JSON codec:
  // {"vars":["x",...,"t"],"terms":[{"coef":"num/den","exps":[e0..e6]},...]}
  // with terms in graded-lex order. Bit-exact round-trip.
  std::string to_json() const;
  static Polynomial from_json(const std::string& text);

 private:
  TermMap terms_;
};

inline Polynomial operator*(Polynomial a, const Rat& c) { return a.scaled(c); }
inline Polynomial operator*(const Rat& c, Polynomial a) { return a.scaled(c); }

}  // namespace pf
