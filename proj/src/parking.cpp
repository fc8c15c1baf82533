#include "parkfn/parking.hpp"

#include <algorithm>
#include <stdexcept>

namespace pf {

bool PrefVector::valid() const {
  if (spots <= 0) return false;
  for (int a : prefs)
    if (a < 1 || a > spots) return false;
  return true;
}

ParkResult park_deterministic(const PrefVector& v) {
  ParkResult r;
  std::vector<char> taken(static_cast<size_t>(v.spots) + 1, 0);
  r.outcome.spot_of_car.resize(v.prefs.size());
  for (int i = 0; i < v.cars(); ++i) {
    int s = v.prefs[i];
    while (s <= v.spots && taken[s]) ++s;
    if (s > v.spots) {
      r.success = false;
      r.failed_car = i + 1;
      r.outcome.spot_of_car.clear();
      return r;
    }
    taken[s] = 1;
    r.outcome.spot_of_car[i] = s;
  }
  r.success = true;
  return r;
}

bool is_parking_function(const PrefVector& v) {
  if (!v.valid()) return false;
  std::vector<int> b = v.prefs;
  std::sort(b.begin(), b.end());
  for (int i = 0; i < static_cast<int>(b.size()); ++i)
    if (b[i] > i + 1) return false;
  return true;
}

bool is_u_parking(const PrefVector& v, const std::vector<int>& u) {
  if (v.prefs.size() != u.size()) return false;
  std::vector<int> b = v.prefs;
  std::sort(b.begin(), b.end());
  for (size_t i = 0; i < b.size(); ++i)
    if (b[i] > u[i]) return false;
  return true;
}

std::vector<int> rk_to_u(int m, int r, int k) {
  if (m < 0 || r < 1 || k < 1) throw std::invalid_argument("rk_to_u: need m>=0, r,k>=1");
  std::vector<int> u(m);
  for (int i = 0; i < m; ++i) u[i] = k + i * r;
  return u;
}

bool is_rk_parking(const PrefVector& v, int r, int k) {
  return is_u_parking(v, rk_to_u(v.cars(), r, k));
}

bool is_prime_parking(const PrefVector& v) {
  int n = v.cars();
  if (n != v.spots || !v.valid()) return false;
  std::vector<int> le(n + 1, 0);  // le[j] = #entries <= j
  for (int a : v.prefs) ++le[a];
  for (int j = 1; j <= n; ++j) le[j] += le[j - 1];
  for (int j = 1; j <= n - 1; ++j)
    if (le[j] < j + 1) return false;
  return true;
}

bool is_unit_interval_parking(const PrefVector& v) {
  if (v.cars() != v.spots || !v.valid()) return false;
  ParkResult r = park_deterministic(v);
  if (!r.success) return false;
  for (int i = 0; i < v.cars(); ++i)
    if (r.outcome.spot_of_car[i] - v.prefs[i] > 1) return false;
  return true;
}

StatRecord compute_stats(const PrefVector& v, const Outcome& out) {
  const int m = v.cars();
  if (static_cast<int>(out.spot_of_car.size()) != m)
    throw std::invalid_argument("compute_stats: outcome size mismatch");
  StatRecord r;
  r.per_car_displacement.resize(m);
  for (int i = 0; i < m; ++i) {
    int d = std::abs(out.spot_of_car[i] - v.prefs[i]);
    r.per_car_displacement[i] = d;
    r.dis += d;
    if (d != 0)
      ++r.unl;
    else
      ++r.lucky;
    if (i > 0 && v.prefs[i] == v.prefs[i - 1]) ++r.rep;
    if (v.prefs[i] == v.prefs[0]) ++r.lel;
    if (v.prefs[i] == 1) ++r.one;
  }
  if (m >= 2) {
    for (int i = 0; i < m; ++i)
      if (v.prefs[i] == v.prefs[1]) ++r.nlel;
  } else {
    r.nlel = r.lel;
  }

  // des and rlm live on the inverse outcome. Occupied spots are read in
  // increasing order within each maximal consecutive run; runs do not
  // interact (matches the P_{m,n} forest decomposition).
  std::vector<int> car_at(static_cast<size_t>(v.spots) + 2, 0);
  for (int i = 0; i < m; ++i) car_at[out.spot_of_car[i]] = i + 1;
  int spot = 1;
  while (spot <= v.spots) {
    if (car_at[spot] == 0) {
      ++spot;
      continue;
    }
    int start = spot;
    while (spot <= v.spots && car_at[spot] != 0) ++spot;
    // run [start, spot)
    int run_max = 0;
    for (int s = spot - 1; s >= start; --s) {
      if (car_at[s] > run_max) {
        run_max = car_at[s];
        ++r.rlm;
      }
      if (s + 1 < spot && car_at[s] > car_at[s + 1]) ++r.des;
    }
  }
  return r;
}

int stat_value(const StatRecord& r, Stat s) {
  switch (s) {
    case Stat::unl: return r.unl;
    case Stat::lucky: return r.lucky;
    case Stat::dis: return r.dis;
    case Stat::des: return r.des;
    case Stat::rlm: return r.rlm;
    case Stat::rep: return r.rep;
    case Stat::lel: return r.lel;
    case Stat::one: return r.one;
    case Stat::nlel: return r.nlel;
  }
  throw std::logic_error("stat_value: bad stat");
}

namespace {
constexpr std::pair<std::string_view, Stat> kStatNames[] = {
    {"unl", Stat::unl}, {"lucky", Stat::lucky}, {"dis", Stat::dis},
    {"des", Stat::des}, {"rlm", Stat::rlm},     {"rep", Stat::rep},
    {"lel", Stat::lel}, {"one", Stat::one},     {"nlel", Stat::nlel},
};
}  // namespace

std::optional<Stat> stat_from_name(std::string_view name) {
  for (const auto& [n, s] : kStatNames)
    if (n == name) return s;
  return std::nullopt;
}

std::string_view stat_name(Stat s) {
  for (const auto& [n, st] : kStatNames)
    if (st == s) return n;
  return "?";
}

}  // namespace pf
