#include "parkfn/recurrences.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>

namespace pf {

namespace {

std::mutex memo_mutex;

const Polynomial kOne = Polynomial::constant(1);
Polynomial var(Var v, int e = 1) { return Polynomial::variable(v, e); }
Polynomial C(long n, long k) { return Polynomial::constant(Rat(binom(n, k))); }

// 1 + x(y + y^2 + ... + y^top); just 1 when top <= 0.
Polynomial one_plus_xy_geom(int top) {
  Polynomial s = kOne;
  for (int j = 1; j <= top; ++j) s += var(Var::x) * var(Var::y, j);
  return s;
}

// x(y + ... + y^top); zero when top <= 0.
Polynomial xy_geom(int top) {
  Polynomial s;
  for (int j = 1; j <= top; ++j) s += var(Var::x) * var(Var::y, j);
  return s;
}

// Cache lookup is locked; the compute step runs unlocked so recursive
// fills don't deadlock (a rare double-compute is harmless).
template <typename Key, typename Fn>
Polynomial memoized(std::map<Key, Polynomial>& cache, const Key& key, Fn&& fn) {
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Polynomial value = fn();
  std::lock_guard<std::mutex> lock(memo_mutex);
  return cache.emplace(key, std::move(value)).first->second;
}

std::map<Var, Polynomial> bind1(Var v) { return {{v, kOne}}; }

}  // namespace

Polynomial P_rec(int n) {
  static std::map<int, Polynomial> cache;
  if (n < 0) throw std::invalid_argument("P_rec: n >= 0");
  if (n == 0) return kOne;
  return memoized(cache, n, [n] {
    Polynomial r = one_plus_xy_geom(n - 1) * var(Var::w) * P_rec(n - 1).subst(bind1(Var::w));
    for (int i = 0; i <= n - 2; ++i) {
      r += C(n - 1, i) * one_plus_xy_geom(i) * var(Var::z) * var(Var::w) *
           P_rec(i).subst(bind1(Var::w)) * P_rec(n - i - 1);
    }
    return r;
  });
}

Polynomial Q_rec(int n) { return P_rec(n); }

Polynomial Pp_rec(int n) {
  static std::map<int, Polynomial> cache;
  if (n < 0) throw std::invalid_argument("Pp_rec: n >= 0");
  if (n == 0) return kOne;
  return memoized(cache, n, [n] {
    Polynomial p = var(Var::p);
    Polynomial one_minus_p = kOne - p;
    Polynomial r =
        (kOne + p * xy_geom(n - 1)) * var(Var::w) * Pp_rec(n - 1).subst(bind1(Var::w));
    for (int i = 0; i <= n - 2; ++i) {
      Polynomial factor = kOne + p * xy_geom(i) + one_minus_p * xy_geom(n - i - 1);
      r += C(n - 1, i) * factor * var(Var::z) * var(Var::w) *
           Pp_rec(i).subst(bind1(Var::w)) * Pp_rec(n - i - 1);
    }
    return r;
  });
}

Polynomial Pp_xy_rec(int n) {
  static std::map<int, Polynomial> cache;
  if (n < 0) throw std::invalid_argument("Pp_xy_rec: n >= 0");
  if (n == 0) return kOne;
  return memoized(cache, n, [n] {
    Polynomial r;
    for (int i = 0; i <= n - 1; ++i)
      r += C(n - 1, i) * one_plus_xy_geom(i) * Pp_xy_rec(i) * Pp_xy_rec(n - i - 1);
    return r;
  });
}

namespace {

// sum over compositions of m into `parts` non-negative parts of
// multinomial(m; s) * prod base(s_i)
Polynomial composition_sum(int m, int parts, const std::function<Polynomial(int)>& base) {
  if (parts <= 0) throw std::invalid_argument("composition_sum: parts >= 1");
  Polynomial total;
  std::vector<int> s(parts, 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == parts - 1) {
      s[idx] = left;
      Polynomial term = Polynomial::constant(Rat(multinomial(m, s)));
      for (int part : s) term = term * base(part);
      total += term;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      s[idx] = v;
      rec(idx + 1, left - v);
    }
  };
  rec(0, m);
  return total;
}

}  // namespace

Polynomial P_mn_rec(int m, int n) {
  if (m < 0 || m > n) throw std::invalid_argument("P_mn_rec: 0 <= m <= n");
  return composition_sum(m, n - m + 1, [](int s) { return P_rec(s); });
}

Polynomial Pp_mn_rec(int m, int n) {
  if (m < 0 || m > n) throw std::invalid_argument("Pp_mn_rec: 0 <= m <= n");
  return composition_sum(m, n - m + 1, [](int s) { return Pp_rec(s); });
}

Polynomial kreweras_dis(int n) {
  static std::map<int, Polynomial> cache;
  if (n < 0) throw std::invalid_argument("kreweras_dis: n >= 0");
  if (n <= 1) return kOne;
  return memoized(cache, n, [n] {
    // P_n = sum_{i=0}^{n-1} C(n-1,i) (q^i + ... + 1) P_i P_{n-1-i}
    Polynomial r;
    for (int i = 0; i <= n - 1; ++i) {
      Polynomial geom;
      for (int j = 0; j <= i; ++j) geom += var(Var::q, j);
      r += C(n - 1, i) * geom * kreweras_dis(i) * kreweras_dis(n - 1 - i);
    }
    return r;
  });
}

Polynomial pair_rec_lel(int n) {
  static std::map<int, Polynomial> cache;
  if (n < 0) throw std::invalid_argument("pair_rec_lel: n >= 0");
  if (n == 0) return kOne;
  if (n == 1) return var(Var::y);
  return memoized(cache, n, [n] {
    Polynomial r;
    for (int i = 0; i <= n - 1; ++i) {
      Polynomial a = C(n - 2, i - 1) *
                     (var(Var::x) * var(Var::y) + Polynomial::constant(i - 1) * var(Var::x) + kOne) *
                     pair_rec_lel(i) * pair_rec_lel(n - i - 1).subst(bind1(Var::y));
      Polynomial b = C(n - 2, i) * (Polynomial::constant(i) * var(Var::x) + kOne) *
                     pair_rec_lel(i).subst(bind1(Var::y)) * pair_rec_lel(n - i - 1);
      r += a + b;
    }
    return r;
  });
}

Polynomial pair_rec_one(int n) {
  static std::map<int, Polynomial> cache;
  if (n < 0) throw std::invalid_argument("pair_rec_one: n >= 0");
  if (n == 0) return kOne;
  return memoized(cache, n, [n] {
    Polynomial r = var(Var::y) * pair_rec_one(n - 1).subst(bind1(Var::y));
    for (int i = 1; i <= n - 1; ++i) {
      r += C(n - 1, i) *
           (var(Var::x) * var(Var::y) + Polynomial::constant(i - 1) * var(Var::x) + kOne) *
           pair_rec_one(i) * pair_rec_one(n - i - 1).subst(bind1(Var::y));
    }
    return r;
  });
}

Polynomial upf_rec(int n) {
  static std::map<int, Polynomial> cache;
  if (n < 0) throw std::invalid_argument("upf_rec: n >= 0");
  if (n == 0) return kOne;
  return memoized(cache, n, [n] {
    Polynomial s;
    for (int i = 0; i <= n - 1; ++i) s += C(n - 1, i) * upf_rec(i) * upf_rec(n - i - 1);
    return (var(Var::y) + kOne) * s - var(Var::y) * upf_rec(n - 1);
  });
}

namespace {

void check_u(const std::vector<int>& u) {
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] < 1 || (i > 0 && u[i] <= u[i - 1]))
      throw std::invalid_argument("u recurrence: u must be strictly increasing and positive");
  }
}

std::vector<int> u_head(const std::vector<int>& u, int i) {
  return {u.begin(), u.begin() + i};
}

// (u_{i+2} - u_{i+1}, ..., u_m - u_{i+1}), 0-based: drop entries 0..i,
// subtract u[i].
std::vector<int> u_tail(const std::vector<int>& u, int i) {
  std::vector<int> t;
  for (size_t j = i + 1; j < u.size(); ++j) t.push_back(u[j] - u[i]);
  return t;
}

}  // namespace

Polynomial u_rec_A(const std::vector<int>& u) {
  static std::map<std::vector<int>, Polynomial> cache;
  check_u(u);
  if (u.empty()) return kOne;
  return memoized(cache, u, [&u] {
    const int m = static_cast<int>(u.size());
    Polynomial r;
    for (int i = 0; i <= m - 1; ++i) {
      Polynomial factor =
          Polynomial::constant(i) * var(Var::x) + Polynomial::constant(u[i] - i);
      r += C(m - 1, i) * factor * u_rec_A(u_head(u, i)) * u_rec_A(u_tail(u, i));
    }
    return r;
  });
}

Polynomial u_rec_B(const std::vector<int>& u) {
  static std::map<std::vector<int>, Polynomial> cache;
  check_u(u);
  if (u.empty()) return kOne;
  return memoized(cache, u, [&u] {
    const int m = static_cast<int>(u.size());
    Polynomial r;
    for (int i = 0; i <= m - 1; ++i) {
      Polynomial factor = var(Var::y) + Polynomial::constant(u[i] - 1);
      r += C(m - 1, i) * factor * u_rec_B(u_head(u, i)) *
           u_rec_B(u_tail(u, i)).subst(bind1(Var::y));
    }
    return r;
  });
}

Polynomial u_rec_C(const std::vector<int>& u) {
  static std::map<std::vector<int>, Polynomial> cache;
  check_u(u);
  if (u.empty()) return kOne;
  if (u.size() == 1) return Polynomial::constant(u[0]) * var(Var::z);
  return memoized(cache, u, [&u] {
    const int m = static_cast<int>(u.size());
    Polynomial r;
    for (int i = 0; i <= m - 1; ++i) {
      Polynomial a = C(m - 2, i - 1) * (var(Var::z) + Polynomial::constant(u[i] - 1)) *
                     u_rec_C(u_head(u, i)) * u_rec_C(u_tail(u, i)).subst(bind1(Var::z));
      Polynomial b = C(m - 2, i) * Polynomial::constant(u[i]) *
                     u_rec_C(u_head(u, i)).subst(bind1(Var::z)) * u_rec_C(u_tail(u, i));
      r += a + b;
    }
    return r;
  });
}

}  // namespace pf
