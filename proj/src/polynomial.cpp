#include "parkfn/polynomial.hpp"

#include <json.hpp>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pf {

std::optional<Var> var_from_name(std::string_view name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::constant(Rat c) {
  Polynomial r;
  r.add_term(kZeroExp, c);
  return r;
}

Polynomial Polynomial::constant(long c) { return constant(Rat(c)); }

Polynomial Polynomial::variable(Var v, int e) {
  if (e < 0) throw std::invalid_argument("variable: negative exponent");
  if (e == 0) return constant(1);
  ExpVec ev = kZeroExp;
  ev[static_cast<int>(v)] = e;
  return monomial(ev, Rat(1));
}

Polynomial Polynomial::monomial(const ExpVec& e, Rat coef) {
  Polynomial r;
  r.add_term(e, coef);
  return r;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == kZeroExp);
}

Rat Polynomial::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("constant_value: not a constant");
  return terms_.begin()->second;
}

int Polynomial::degree_in(Var v) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
  return d;
}

Rat Polynomial::coeff(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Polynomial::add_term(const ExpVec& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ExpVec e;
      for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial r;
  if (c == 0) return r;
  for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

Polynomial Polynomial::subst(const std::map<Var, Polynomial>& bindings) const {
  Polynomial result;
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(c);
    ExpVec rest = kZeroExp;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      auto it = bindings.find(static_cast<Var>(i));
      if (it == bindings.end())
        rest[i] = e[i];
      else
        term = term * it->second.pow(static_cast<unsigned>(e[i]));
    }
    result += term * monomial(rest, Rat(1));
  }
  return result;
}

Polynomial Polynomial::subst(const std::map<Var, Rat>& bindings) const {
  std::map<Var, Polynomial> b;
  for (const auto& [v, r] : bindings) b.emplace(v, constant(r));
  return subst(b);
}

Rat Polynomial::eval(const std::array<Rat, kNumVars>& point) const {
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat m = c;
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] != 0) m *= rat_pow(point[i], e[i]);
    total += m;
  }
  return total;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = e != kZeroExp;
    bool coef_shown = !has_vars || a != 1;
    if (coef_shown) {
      os << a.get_num().get_str();
      if (a.get_den() != 1) os << "/" << a.get_den().get_str();
    }
    bool first_var = true;
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      if (!first_var || coef_shown) os << "*";
      os << kVarNames[i];
      if (e[i] > 1) os << "^" << e[i];
      first_var = false;
    }
  }
  return os.str();
}

std::string Polynomial::to_json() const {
  nlohmann::ordered_json j;
  j["vars"] = nlohmann::ordered_json::array();
  for (const char* v : kVarNames) j["vars"].push_back(v);
  j["terms"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json term;
    term["coef"] = rat_str(c);
    term["exps"] = e;
    j["terms"].push_back(std::move(term));
  }
  return j.dump();
}

Polynomial Polynomial::from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  const auto& vars = j.at("vars");
  if (vars.size() != kNumVars)
    throw std::invalid_argument("polynomial json: wrong variable count");
  for (int i = 0; i < kNumVars; ++i)
    if (vars.at(i).get<std::string>() != kVarNames[i])
      throw std::invalid_argument("polynomial json: unexpected variable order");
  Polynomial r;
  for (const auto& term : j.at("terms")) {
    const auto& exps = term.at("exps");
    if (exps.size() != kNumVars)
      throw std::invalid_argument("polynomial json: bad exponent vector");
    ExpVec e;
    for (int i = 0; i < kNumVars; ++i) {
      e[i] = exps.at(i).get<int>();
      if (e[i] < 0) throw std::invalid_argument("polynomial json: negative exponent");
    }
    r.add_term(e, rat_parse(term.at("coef").get<std::string>()));
  }
  return r;
}

}  // namespace pf
