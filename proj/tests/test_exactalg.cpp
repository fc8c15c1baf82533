#include <doctest.h>

#include "parkfn/polynomial.hpp"
#include "parkfn/series.hpp"

#include <random>

using namespace pf;

namespace {

Polynomial V(Var v, int e = 1) { return Polynomial::variable(v, e); }
Polynomial c(long v) { return Polynomial::constant(v); }

Polynomial random_poly(std::mt19937& rng, int max_terms = 4, int max_exp = 3) {
  Polynomial p;
  int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    ExpVec e = kZeroExp;
    for (int i = 0; i < 3; ++i)
      e[rng() % kNumVars] = static_cast<int>(rng() % (max_exp + 1));
    long num = static_cast<long>(rng() % 9) - 4;
    long den = 1 + static_cast<long>(rng() % 3);
    p.add_term(e, make_rat(num, den));
  }
  return p;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(rat_str(make_rat(2, 4)) == "1/2");
  CHECK(rat_str(make_rat(-2, 4)) == "-1/2");
  CHECK(rat_parse("6/4") == make_rat(3, 2));
  CHECK(rat_parse("7") == Rat(7));
  CHECK_THROWS(rat_parse("1/0"));
  CHECK_THROWS(rat_parse("zebra"));
  CHECK(rat_pow(make_rat(2, 3), -2) == make_rat(9, 4));
  CHECK(int_pow(8, 7) == Int("2097152"));
  CHECK(binom(5, 2) == 10);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(3, 7) == 0);
  CHECK(multinomial(4, {2, 1, 1}) == 12);
}

TEST_CASE("polynomial basics") {
  // x + (-x) = 0
  CHECK((V(Var::x) + (-V(Var::x))).is_zero());
  // (xy+2) + (xy) = 2xy + 2
  Polynomial xy = V(Var::x) * V(Var::y);
  CHECK(xy + c(2) + xy == xy.scaled(Rat(2)) + c(2));
  // (xy+1)(xy+x) = x^2y^2 + x^2y + xy + x
  Polynomial lhs = (xy + c(1)) * (xy + V(Var::x));
  Polynomial want = V(Var::x, 2) * V(Var::y, 2) + V(Var::x, 2) * V(Var::y) + xy + V(Var::x);
  CHECK(lhs == want);
  // 1 * P = P, (x+1)(x-1) = x^2 - 1
  CHECK(c(1) * want == want);
  CHECK((V(Var::x) + c(1)) * (V(Var::x) - c(1)) == V(Var::x, 2) - c(1));
  CHECK(want.degree_in(Var::x) == 2);
  CHECK(want.degree_in(Var::t) == 0);
}

TEST_CASE("P_2 = w + xyw + zw^2 as a plain value") {
  Polynomial p2 = V(Var::w) + V(Var::x) * V(Var::y) * V(Var::w) + V(Var::z) * V(Var::w, 2);
  CHECK(p2 + Polynomial() == p2);
  CHECK(p2.str() == "w + z*w^2 + x*y*w");
}

TEST_CASE("substitution") {
  // subst(w + xyw + zw^2, {z:1, w:1}) = 2 + xy
  Polynomial p2 = V(Var::w) + V(Var::x) * V(Var::y) * V(Var::w) + V(Var::z) * V(Var::w, 2);
  Polynomial got = p2.subst(std::map<Var, Rat>{{Var::z, Rat(1)}, {Var::w, Rat(1)}});
  CHECK(got == c(2) + V(Var::x) * V(Var::y));
  // empty binding is the identity
  CHECK(p2.subst(std::map<Var, Polynomial>{}) == p2);
  // subst(2p(1-p), {p:1}) = 0
  Polynomial prob = c(2) * V(Var::p) * (c(1) - V(Var::p));
  CHECK(prob.subst(std::map<Var, Rat>{{Var::p, Rat(1)}}).is_zero());
  // polynomial substitution: y := q in x y^2
  Polynomial sub = (V(Var::x) * V(Var::y, 2)).subst(std::map<Var, Polynomial>{{Var::y, V(Var::q)}});
  CHECK(sub == V(Var::x) * V(Var::q, 2));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Polynomial a = random_poly(rng), b = random_poly(rng), cc = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + cc == a + (b + cc));
    CHECK(a * b == b * a);
    CHECK((a * b) * cc == a * (b * cc));
    CHECK(a * (b + cc) == a * b + a * cc);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("iterated substitution is simultaneous substitution for constants") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Polynomial p = random_poly(rng);
    Rat a = make_rat(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    Rat b = make_rat(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 3));
    Polynomial both = p.subst(std::map<Var, Rat>{{Var::x, a}, {Var::y, b}});
    Polynomial oneatatime = p.subst(std::map<Var, Rat>{{Var::x, a}})
                                .subst(std::map<Var, Rat>{{Var::y, b}});
    CHECK(both == oneatatime);
  }
}

TEST_CASE("json round trip is canonical and bit-exact") {
  Polynomial p = V(Var::w) + V(Var::x) * V(Var::y) * V(Var::w) + V(Var::z) * V(Var::w, 2);
  std::string json = p.to_json();
  CHECK(json ==
        R"({"vars":["x","y","z","w","p","q","t"],"terms":[{"coef":"1/1","exps":[0,0,0,1,0,0,0]},{"coef":"1/1","exps":[0,0,1,2,0,0,0]},{"coef":"1/1","exps":[1,1,0,1,0,0,0]}]})");
  CHECK(Polynomial::from_json(json) == p);
  CHECK(Polynomial::from_json(json).to_json() == json);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial q = random_poly(rng);
    CHECK(Polynomial::from_json(q.to_json()) == q);
  }
  CHECK(Polynomial().to_json() ==
        R"({"vars":["x","y","z","w","p","q","t"],"terms":[]})");
}

TEST_CASE("series basics") {
  // exp(0) = 1
  TruncatedSeries zero(5);
  TruncatedSeries one = zero.exp();
  CHECK(one.coeff(0) == c(1));
  for (int k = 1; k <= 5; ++k) CHECK(one.coeff(k).is_zero());

  // inverse(1 - t) = 1 + t + t^2 + t^3
  TruncatedSeries f(3);
  f.set_coeff(0, c(1));
  f.set_coeff(1, c(-1));
  TruncatedSeries g = f.inverse();
  for (int k = 0; k <= 3; ++k) CHECK(g.coeff(k) == c(1));
}

TEST_CASE("series log/exp are mutually inverse") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedSeries s(5);
    for (int k = 1; k <= 5; ++k) s.set_coeff(k, random_poly(rng, 2, 2));
    CHECK(s.exp().log() == s);
  }
}

TEST_CASE("series preconditions are domain errors") {
  TruncatedSeries s(3);
  s.set_coeff(0, c(1));
  CHECK_THROWS_AS(s.exp(), std::domain_error);
  TruncatedSeries z(3);
  CHECK_THROWS_AS(z.log(), std::domain_error);
  CHECK_THROWS_AS(z.inverse(), std::domain_error);
  TruncatedSeries nonconst(3);
  nonconst.set_coeff(0, V(Var::y));
  CHECK_THROWS_AS(nonconst.inverse(), std::domain_error);
}
