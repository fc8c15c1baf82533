#include "parkfn/oracle.hpp"

#include "parkfn/prob.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

namespace pf {

Domain Domain::pf(int n) {
  if (n < 1) throw std::invalid_argument("Domain::pf: n >= 1");
  return {Family::pf, n, n, {}};
}

Domain Domain::pf_mn(int m, int n) {
  if (m < 1 || m > n) throw std::invalid_argument("Domain::pf_mn: 1 <= m <= n");
  return {Family::pf_mn, m, n, {}};
}

Domain Domain::rk(int m, int r, int k) {
  if (m < 1) throw std::invalid_argument("Domain::rk: m >= 1");
  auto u = rk_to_u(m, r, k);
  return {Family::rk, m, u.back(), u};
}

Domain Domain::ppf(int n) {
  if (n < 1) throw std::invalid_argument("Domain::ppf: n >= 1");
  return {Family::ppf, n, n, {}};
}

Domain Domain::upf(int n) {
  if (n < 1) throw std::invalid_argument("Domain::upf: n >= 1");
  return {Family::upf, n, n, {}};
}

Domain Domain::u_family(std::vector<int> u) {
  if (u.empty()) throw std::invalid_argument("Domain::u: empty u");
  for (size_t i = 0; i + 1 < u.size(); ++i)
    if (u[i] >= u[i + 1]) throw std::invalid_argument("Domain::u: u must be strictly increasing");
  if (u[0] < 1) throw std::invalid_argument("Domain::u: entries >= 1");
  int m = static_cast<int>(u.size());
  int spots = u.back();
  return {Family::u, m, spots, std::move(u)};
}

Int Domain::size() const { return int_pow(spots, static_cast<unsigned long>(cars)); }

bool Domain::member(const PrefVector& v) const {
  switch (family) {
    case Family::pf: return is_parking_function(v);
    case Family::pf_mn: return park_deterministic(v).success;
    case Family::rk:
    case Family::u: return is_u_parking(v, u);
    case Family::ppf: return is_prime_parking(v);
    case Family::upf: return is_unit_interval_parking(v);
  }
  return false;
}

bool Domain::supports_probabilistic() const {
  return family == Family::pf || family == Family::pf_mn || family == Family::rk ||
         family == Family::u;
}

std::string Domain::describe() const {
  std::ostringstream os;
  switch (family) {
    case Family::pf: os << "PF(" << cars << ")"; break;
    case Family::pf_mn: os << "PF(" << cars << "," << spots << ")"; break;
    case Family::rk: os << "PF_" << cars << "(r,k) over [" << spots << "]^" << cars; break;
    case Family::ppf: os << "PPF(" << cars << ")"; break;
    case Family::upf: os << "UPF(" << cars << ")"; break;
    case Family::u: {
      os << "PF(u), u=(";
      for (size_t i = 0; i < u.size(); ++i) os << (i ? "," : "") << u[i];
      os << ")";
      break;
    }
  }
  return os.str();
}

int worker_count() {
  if (const char* env = std::getenv("PARKFN_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

void check_guard(const Domain& d) {
  if (d.size() > kDomainGuard)
    throw DomainGuardError("domain " + d.describe() + " exceeds the enumeration guard");
}

// Enumerate the preference box in blocks keyed by the leading coordinates;
// block results are combined in block order, so the outcome is independent
// of thread scheduling (and combination is commutative anyway).
template <typename Result>
Result map_reduce_box(const Domain& d,
                      const std::function<void(const PrefVector&, Result&)>& visit,
                      const std::function<void(Result&, Result&&)>& merge) {
  const int base = d.spots;
  const int cars = d.cars;
  int prefix_len = cars >= 2 && base >= 2 ? 2 : (cars >= 1 ? 1 : 0);
  long long nblocks = 1;
  for (int i = 0; i < prefix_len; ++i) nblocks *= base;

  auto run_block = [&](long long block, Result& acc) {
    PrefVector v;
    v.spots = d.spots;
    v.prefs.assign(cars, 1);
    long long b = block;
    for (int i = prefix_len - 1; i >= 0; --i) {
      v.prefs[i] = static_cast<int>(b % base) + 1;
      b /= base;
    }
    int pos = cars - 1;
    if (prefix_len == cars) {
      visit(v, acc);
      return;
    }
    // odometer over coordinates prefix_len..cars-1
    while (true) {
      visit(v, acc);
      pos = cars - 1;
      while (pos >= prefix_len && v.prefs[pos] == base) v.prefs[pos--] = 1;
      if (pos < prefix_len) break;
      ++v.prefs[pos];
    }
  };

  int workers = std::min<long long>(worker_count(), nblocks);
  std::vector<Result> block_results(static_cast<size_t>(nblocks));
  if (workers <= 1) {
    for (long long blk = 0; blk < nblocks; ++blk) run_block(blk, block_results[blk]);
  } else {
    std::atomic<long long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        while (true) {
          long long blk = next.fetch_add(1);
          if (blk >= nblocks) break;
          run_block(blk, block_results[blk]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  Result total{};
  for (auto& r : block_results) merge(total, std::move(r));
  return total;
}

ExpVec stat_monomial(const StatRecord& stats, const std::vector<std::pair<Var, Stat>>& weights) {
  ExpVec e = kZeroExp;
  for (const auto& [var, st] : weights) e[static_cast<int>(var)] += stat_value(stats, st);
  return e;
}

}  // namespace

Int count_over(const Domain& d) {
  check_guard(d);
  long total = map_reduce_box<long>(
      d,
      [&](const PrefVector& v, long& acc) {
        if (d.member(v)) ++acc;
      },
      [](long& a, long&& b) { a += b; });
  return Int(total);
}

Polynomial gf_over_custom(const Domain& d, const MonomialFn& monomial) {
  check_guard(d);
  return map_reduce_box<Polynomial>(
      d,
      [&](const PrefVector& v, Polynomial& acc) {
        if (!d.member(v)) return;
        ParkResult pr = park_deterministic(v);
        StatRecord stats = compute_stats(v, pr.outcome);
        acc.add_term(monomial(v, stats), Rat(1));
      },
      [](Polynomial& a, Polynomial&& b) { a += b; });
}

Polynomial gf_over(const Domain& d, const std::vector<std::pair<Var, Stat>>& weights) {
  return gf_over_custom(
      d, [&weights](const PrefVector&, const StatRecord& stats) {
        return stat_monomial(stats, weights);
      });
}

Polynomial gf_over_prob_custom(const Domain& d, const MonomialFn& monomial) {
  check_guard(d);
  if (!d.supports_probabilistic())
    throw std::invalid_argument("gf_over_prob: " + d.describe() +
                                " admits only the deterministic protocol");
  const bool sorted_event = d.family == Domain::Family::rk || d.family == Domain::Family::u;

  // Accumulate integer-count monomials per (heads, tails) bucket; expand the
  // p-polynomials once per block.
  using Buckets = std::map<std::pair<int, int>, Polynomial>;
  Buckets buckets = map_reduce_box<Buckets>(
      d,
      [&](const PrefVector& v, Buckets& acc) {
        for_each_branch(v, [&](const BranchTrace& t) {
          if (!t.success) return;
          if (sorted_event) {
            std::vector<int> s = t.outcome.spot_of_car;
            std::sort(s.begin(), s.end());
            for (size_t i = 0; i < s.size(); ++i)
              if (s[i] > d.u[i]) return;
          }
          StatRecord stats = compute_stats(v, t.outcome);
          acc[{t.heads, t.tails}].add_term(monomial(v, stats), Rat(1));
        });
      },
      [](Buckets& a, Buckets&& b) {
        for (auto& [ht, poly] : b) a[ht] += poly;
      });

  Polynomial total;
  Polynomial one_minus_p = Polynomial::constant(1) - Polynomial::variable(Var::p);
  for (const auto& [ht, poly] : buckets)
    total += Polynomial::variable(Var::p, ht.first) *
             one_minus_p.pow(static_cast<unsigned>(ht.second)) * poly;
  return total;
}

Polynomial gf_over_prob(const Domain& d, const std::vector<std::pair<Var, Stat>>& weights) {
  return gf_over_prob_custom(
      d, [&weights](const PrefVector&, const StatRecord& stats) {
        return stat_monomial(stats, weights);
      });
}

std::map<std::vector<int>, Int> count_by(const Domain& d, const std::vector<Stat>& stats) {
  check_guard(d);
  using Table = std::map<std::vector<int>, long>;
  Table table = map_reduce_box<Table>(
      d,
      [&](const PrefVector& v, Table& acc) {
        if (!d.member(v)) return;
        ParkResult pr = park_deterministic(v);
        StatRecord sr = compute_stats(v, pr.outcome);
        std::vector<int> key;
        key.reserve(stats.size());
        for (Stat s : stats) key.push_back(stat_value(sr, s));
        ++acc[key];
      },
      [](Table& a, Table&& b) {
        for (auto& [k, c] : b) a[k] += c;
      });
  std::map<std::vector<int>, Int> out;
  for (auto& [k, c] : table) out.emplace(k, Int(c));
  return out;
}

}  // namespace pf
