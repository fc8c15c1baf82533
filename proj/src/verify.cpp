#include "parkfn/verify.hpp"

#include "parkfn/closed_forms.hpp"
#include "parkfn/distributions.hpp"
#include "parkfn/oracle.hpp"
#include "parkfn/prob.hpp"
#include "parkfn/recurrences.hpp"
#include "parkfn/trees.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace pf::verify {

namespace {

Polynomial var(Var v, int e = 1) { return Polynomial::variable(v, e); }

const std::vector<std::pair<Var, Stat>> kQuad = {
    {Var::x, Stat::unl}, {Var::y, Stat::dis}, {Var::z, Stat::des}, {Var::w, Stat::rlm}};

void check_eq(Suite& s, const std::string& name, const Polynomial& got,
              const Polynomial& want) {
  if (got == want) {
    s.push_back({name, true, ""});
  } else {
    s.push_back({name, false, "got " + got.str() + ", want " + want.str()});
  }
}

void check(Suite& s, const std::string& name, bool ok, const std::string& detail = "") {
  s.push_back({name, ok, ok ? "" : detail});
}

std::string ivec(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// #\{i: pref_i = pref_s\} attached to variable `attach` (1-based s <= cars).
Polynomial same_as_car_gf(const Domain& d, int s, Var attach, bool with_unl,
                          bool probabilistic) {
  MonomialFn mono = [s, attach, with_unl](const PrefVector& v, const StatRecord& st) {
    int count = 0;
    for (int a : v.prefs)
      if (a == v.prefs[s - 1]) ++count;
    ExpVec e = kZeroExp;
    e[static_cast<int>(attach)] = count;
    if (with_unl) e[static_cast<int>(Var::x)] = st.unl;
    return e;
  };
  return probabilistic ? gf_over_prob_custom(d, mono) : gf_over_custom(d, mono);
}

// ---------------------------------------------------------------------------
// Appendix Table 1, the contract fixture: Prüfer code, parent array,
// parking functions for (repeats | leading elements | 1's).
struct Table1Row {
  const char* prufer;
  std::array<int, 3> parent;  // parent of 1, 2, 3
  const char* rep_pf;
  const char* lel_pf;
  const char* ones_pf;
};

constexpr Table1Row kTable1[] = {
    {"00", {0, 0, 0}, "111", "111", "111"},
    {"01", {0, 0, 1}, "112", "112", "112"},
    {"02", {0, 0, 2}, "113", "113", "113"},
    {"03", {0, 3, 0}, "221", "221", "131"},
    {"10", {0, 1, 0}, "122", "121", "121"},
    {"11", {0, 1, 1}, "123", "122", "122"},
    {"12", {0, 1, 2}, "231", "123", "123"},
    {"13", {0, 3, 1}, "121", "231", "132"},
    {"20", {2, 0, 0}, "311", "131", "211"},
    {"21", {2, 0, 1}, "312", "132", "213"},
    {"22", {2, 0, 2}, "131", "311", "212"},
    {"23", {3, 0, 2}, "132", "312", "312"},
    {"30", {3, 0, 0}, "211", "212", "311"},
    {"31", {3, 1, 0}, "212", "213", "231"},
    {"32", {2, 3, 0}, "213", "321", "321"},
    {"33", {3, 3, 0}, "321", "211", "221"},
};

std::vector<int> digits(const char* s) {
  std::vector<int> v;
  for (const char* c = s; *c; ++c) v.push_back(*c - '0');
  return v;
}

Suite suite_table1(int) {
  Suite s;
  for (const Table1Row& row : kTable1) {
    std::string tag = "table1 row " + std::string(row.prufer);
    PruferCode code = digits(row.prufer);
    RootedTree want_tree;
    want_tree.parent = {-1, row.parent[0], row.parent[1], row.parent[2]};

    RootedTree decoded = prufer_decode(code);
    bool tree_ok = decoded.parent == want_tree.parent;
    bool encode_ok = prufer_encode(want_tree) == code;
    bool circ_ok = prufer_to_pf_circular(code).prefs == digits(row.lel_pf);
    bool bfs_ok = tree_to_pf_bfs(want_tree).prefs == digits(row.ones_pf);

    int zeros = static_cast<int>(std::count(code.begin(), code.end(), 0));
    PrefVector rep_v{digits(row.rep_pf), 3};
    PrefVector lel_v{digits(row.lel_pf), 3};
    PrefVector ones_v{digits(row.ones_pf), 3};
    StatRecord rep_st = compute_stats(rep_v, park_deterministic(rep_v).outcome);
    StatRecord lel_st = compute_stats(lel_v, park_deterministic(lel_v).outcome);
    StatRecord ones_st = compute_stats(ones_v, park_deterministic(ones_v).outcome);
    TreeStats ts = tree_stats(want_tree);
    bool narration_ok = rep_st.rep == zeros && lel_st.lel == zeros + 1 &&
                        ts.deg0 == zeros + 1 && ones_st.one == ts.deg0;

    check(s, tag, tree_ok && encode_ok && circ_ok && bfs_ok && narration_ok,
          std::string(!tree_ok ? "decode " : "") + (!encode_ok ? "encode " : "") +
              (!circ_ok ? "circular " : "") + (!bfs_ok ? "bfs " : "") +
              (!narration_ok ? "statistic-count " : "") + "mismatch");
  }
  // column 3 carries the repeats statistic; its distribution across the
  // fixture must match (q+3)^2
  std::map<int, int> rep_hist;
  for (const Table1Row& row : kTable1) {
    PrefVector v{digits(row.rep_pf), 3};
    ++rep_hist[compute_stats(v, park_deterministic(v).outcome).rep];
  }
  Polynomial rep_poly;
  for (auto [r, c] : rep_hist) rep_poly += Polynomial::variable(Var::q, r).scaled(Rat(c));
  check_eq(s, "table1 rep column distribution = (q+3)^2", rep_poly, rep_gf(3));
  return s;
}

// ---------------------------------------------------------------------------

Suite suite_counting(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 7;
  for (int n = 1; n <= top; ++n) {
    Int got = count_over(Domain::pf(n));
    Int want = int_pow(n + 1, static_cast<unsigned long>(n - 1));
    check(s, "|PF(" + std::to_string(n) + ")| = (n+1)^(n-1)", got == want,
          got.get_str() + " != " + want.get_str());
  }
  for (int n = 1; n <= std::min(top, 6); ++n) {
    Int got = count_over(Domain::ppf(n));
    Int want = n == 1 ? Int(1) : int_pow(n - 1, static_cast<unsigned long>(n - 1));
    check(s, "|PPF(" + std::to_string(n) + ")| = (n-1)^(n-1)", got == want,
          got.get_str() + " != " + want.get_str());
  }
  for (int n = 1; n <= std::min(top, 6); ++n) {
    for (int m = 1; m <= n; ++m) {
      Int got = count_over(Domain::pf_mn(m, n));
      Int want = Int(n - m + 1) * int_pow(n + 1, static_cast<unsigned long>(m - 1));
      check(s,
            "|PF(" + std::to_string(m) + "," + std::to_string(n) +
                ")| = (n-m+1)(n+1)^(m-1)",
            got == want, got.get_str() + " != " + want.get_str());
    }
  }
  for (int n = 2; n <= std::min(top, 6); ++n) {
    // Lemma: #\{pi_1 = 1\} = 2 (n+1)^{n-2}
    Int got(0);
    Domain d = Domain::pf(n);
    // count via an indicator exponent through gf_over_custom
    Polynomial ind = gf_over_custom(d, [](const PrefVector& v, const StatRecord&) {
      ExpVec e = kZeroExp;
      e[static_cast<int>(Var::q)] = v.prefs[0] == 1 ? 1 : 0;
      return e;
    });
    got = ind.coeff([] {
             ExpVec e = kZeroExp;
             e[static_cast<int>(Var::q)] = 1;
             return e;
           }())
              .get_num();
    Int want = Int(2) * int_pow(n + 1, static_cast<unsigned long>(n - 2));
    check(s, "#(pi in PF(" + std::to_string(n) + "): pi_1 = 1) = 2(n+1)^(n-2)",
          got == want, got.get_str() + " != " + want.get_str());
    for (int k = 1; k <= n; ++k) {
      Polynomial eq = gf_over_custom(d, [k](const PrefVector& v, const StatRecord&) {
        bool all_eq = true;
        for (int i = 1; i < k; ++i) all_eq = all_eq && v.prefs[i] == v.prefs[0];
        ExpVec e = kZeroExp;
        e[static_cast<int>(Var::q)] = all_eq ? 1 : 0;
        return e;
      });
      Int gotk = eq.coeff([] {
                     ExpVec e = kZeroExp;
                     e[static_cast<int>(Var::q)] = 1;
                     return e;
                   }())
                     .get_num();
      Int wantk = int_pow(n + 1, static_cast<unsigned long>(n - k));
      check(s,
            "#(pi_1=...=pi_" + std::to_string(k) + ") over PF(" + std::to_string(n) +
                ") = (n+1)^(n-k)",
            gotk == wantk, gotk.get_str() + " != " + wantk.get_str());
    }
  }
  for (int n = 0; n <= 5; ++n) {
    long trees = 0;
    for_each_tree(n, [&](const RootedTree&) { ++trees; });
    check(s, "#trees on (0.." + std::to_string(n) + ") = (n+1)^(n-1)",
          Int(trees) == count_trees(n), std::to_string(trees));
  }
  {
    // forests with marked roots: k N^{N-k-1}
    bool ok = true;
    std::string detail;
    for (int N = 2; N <= 5 && ok; ++N) {
      for (int k = 1; k < N && ok; ++k) {
        std::vector<int> roots;
        for (int r = 0; r < k; ++r) roots.push_back(r);
        long cnt = 0;
        for_each_forest(N, roots, [&](const Forest&) { ++cnt; });
        if (Int(cnt) != count_forests(N, k)) {
          ok = false;
          detail = "N=" + std::to_string(N) + " k=" + std::to_string(k) + ": " +
                   std::to_string(cnt);
        }
      }
    }
    check(s, "#forests(N, k marked roots) = k N^(N-k-1), N <= 5", ok, detail);
  }
  return s;
}

Suite suite_thm21(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 5;
  for (int n = 0; n <= top; ++n) {
    Polynomial rec = P_rec(n);
    check_eq(s, "P_rec(" + std::to_string(n) + ") = Q_rec(n)", rec, Q_rec(n));
    if (n >= 1)
      check_eq(s, "P_rec(" + std::to_string(n) + ") = oracle over PF(n)", rec,
               gf_over(Domain::pf(n), kQuad));
    check_eq(s, "Q_rec(" + std::to_string(n) + ") = tree statistic sum", rec,
             tree_quad_gf(n));
  }
  return s;
}

Suite suite_thm22(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 4;
  for (int n = 1; n <= top; ++n)
    check_eq(s, "P'_rec(" + std::to_string(n) + ") = branch oracle", Pp_rec(n),
             gf_over_prob(Domain::pf(n), kQuad));
  // the paper's worked examples
  Polynomial p = var(Var::p);
  Polynomial want222 = (Polynomial::constant(2) * p) * (Polynomial::constant(1) - p);
  check_eq(s, "P((2,2,2) in PF(3)) = 2p(1-p)", prob_pf({{2, 2, 2}, 3}), want222);
  check_eq(s, "P((3,3) in PF_2(2,2)) = 1-p", prob_rk({3, 3}, 2, 2),
           Polynomial::constant(1) - p);
  check_eq(s, "P((1,2,3) in PF(3)) = 1", prob_pf({{1, 2, 3}, 3}), Polynomial::constant(1));
  return s;
}

Suite suite_cor23(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 5;
  for (int n = 0; n <= top; ++n) {
    Polynomial specialized =
        Pp_rec(n).subst(std::map<Var, Polynomial>{{Var::z, Polynomial::constant(1)},
                                                  {Var::w, Polynomial::constant(1)}});
    check(s, "P'_" + std::to_string(n) + "(x,y,1,1) has no p dependence",
          specialized.degree_in(Var::p) == 0, specialized.str());
    check_eq(s, "P'_" + std::to_string(n) + "(x,y) recurrence match", specialized,
             Pp_xy_rec(n));
  }
  return s;
}

Suite suite_prop25(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  for (int n = 1; n <= top; ++n)
    for (int m = 1; m <= n; ++m)
      check_eq(s, "P_(" + std::to_string(m) + "," + std::to_string(n) + ") = oracle",
               P_mn_rec(m, n), gf_over(Domain::pf_mn(m, n), kQuad));
  int ptop = std::min(top, 4);
  for (int n = 1; n <= ptop; ++n)
    for (int m = 1; m <= n; ++m)
      check_eq(s,
               "P'_(" + std::to_string(m) + "," + std::to_string(n) + ") = branch oracle",
               Pp_mn_rec(m, n), gf_over_prob(Domain::pf_mn(m, n), kQuad));
  return s;
}

Suite suite_kreweras(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  for (int n = 1; n <= top; ++n) {
    check_eq(s, "Kreweras P_" + std::to_string(n) + "(q) = oracle q^dis",
             kreweras_dis(n), gf_over(Domain::pf(n), {{Var::q, Stat::dis}}));
    check_eq(s, "P_rec(" + std::to_string(n) + ") dis marginal = Kreweras",
             P_rec(n).subst(std::map<Var, Polynomial>{{Var::x, Polynomial::constant(1)},
                                                      {Var::z, Polynomial::constant(1)},
                                                      {Var::w, Polynomial::constant(1)},
                                                      {Var::y, var(Var::q)}}),
             kreweras_dis(n));
  }
  return s;
}

// (m, r, k) triples with (k+mr)^m below the bound
std::vector<std::array<int, 3>> rk_triples(long long bound, int max_m = 6, int max_rk = 4) {
  std::vector<std::array<int, 3>> out;
  for (int m = 1; m <= max_m; ++m)
    for (int r = 1; r <= max_rk; ++r)
      for (int k = 1; k <= max_rk; ++k) {
        long double size = powl(static_cast<long double>(k) + static_cast<long double>(m) * r,
                                static_cast<long double>(m));
        if (size <= static_cast<long double>(bound)) out.push_back({m, r, k});
      }
  return out;
}

Suite suite_thm33(int max_n) {
  Suite s;
  long long bound = max_n > 0 ? max_n : 1'000'000;
  for (auto [m, r, k] : rk_triples(bound)) {
    std::string tag = "(m,r,k)=(" + std::to_string(m) + "," + std::to_string(r) + "," +
                      std::to_string(k) + ")";
    Polynomial want = rk_unl_rep_gf(m, r, k);
    check_eq(s, "thm3.3 det oracle " + tag,
             gf_over(Domain::rk(m, r, k), {{Var::x, Stat::unl}, {Var::y, Stat::rep}}),
             want);
  }
  // symbolic p on the smaller triples: the theorem's sum is p-free
  for (auto [m, r, k] : rk_triples(std::min<long long>(bound, 200'000))) {
    std::string tag = "(m,r,k)=(" + std::to_string(m) + "," + std::to_string(r) + "," +
                      std::to_string(k) + ")";
    check_eq(s, "thm3.3 branch oracle " + tag,
             gf_over_prob(Domain::rk(m, r, k), {{Var::x, Stat::unl}, {Var::y, Stat::rep}}),
             rk_unl_rep_gf(m, r, k));
  }
  // specializations: y=1 recovers Gessel-Seo unluckiness, x=1 recovers (y+m)^{m-1}
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= n; ++m) {
      check_eq(s,
               "thm3.3 y:=1, (m,n)=(" + std::to_string(m) + "," + std::to_string(n) + ")",
               rk_unl_rep_gf(m, 1, n - m + 1)
                   .subst(std::map<Var, Rat>{{Var::y, Rat(1)}}),
               gs_unl_mn_gf(m, n));
    }
    Polynomial repm = rk_unl_rep_gf(n, 1, 1).subst(std::map<Var, Rat>{{Var::x, Rat(1)}});
    check_eq(s, "thm3.3 x:=1, m=" + std::to_string(n), repm,
             rep_gf(n).subst(std::map<Var, Polynomial>{{Var::q, var(Var::y)}}));
  }
  return s;
}

Suite suite_thm35(int max_n) {
  Suite s;
  long long bound = max_n > 0 ? max_n : 1'000'000;
  for (auto [m, r, k] : rk_triples(bound)) {
    std::string tag = "(m,r,k)=(" + std::to_string(m) + "," + std::to_string(r) + "," +
                      std::to_string(k) + ")";
    check_eq(s, "thm3.5 det oracle " + tag,
             gf_over(Domain::rk(m, r, k), {{Var::x, Stat::unl}, {Var::y, Stat::lel}}),
             rk_unl_lel_gf(m, r, k));
  }
  for (auto [m, r, k] : rk_triples(std::min<long long>(bound, 200'000))) {
    std::string tag = "(m,r,k)=(" + std::to_string(m) + "," + std::to_string(r) + "," +
                      std::to_string(k) + ")";
    check_eq(s, "thm3.5 branch oracle " + tag,
             gf_over_prob(Domain::rk(m, r, k), {{Var::x, Stat::unl}, {Var::y, Stat::lel}}),
             rk_unl_lel_gf(m, r, k));
  }
  return s;
}

Suite suite_prop36(int max_n) {
  Suite s;
  long long bound = max_n > 0 ? max_n : 1'000'000;
  for (auto [m, r, k] : rk_triples(bound)) {
    if (m < 2) continue;  // the statistic needs a second car
    std::string tag = "(m,r,k)=(" + std::to_string(m) + "," + std::to_string(r) + "," +
                      std::to_string(k) + ")";
    check_eq(s, "prop3.6 det oracle " + tag,
             gf_over(Domain::rk(m, r, k), {{Var::x, Stat::unl}, {Var::y, Stat::nlel}}),
             rk_unl_lel_gf(m, r, k));
  }
  // s >= 3 analogue fails, first at m = 3
  bool found = false;
  std::string witness;
  for (int r = 1; r <= 2 && !found; ++r)
    for (int k = 1; k <= 2 && !found; ++k) {
      Polynomial got = same_as_car_gf(Domain::rk(3, r, k), 3, Var::y, true, false);
      if (got != rk_unl_lel_gf(3, r, k)) {
        found = true;
        witness = "(m,r,k)=(3," + std::to_string(r) + "," + std::to_string(k) + ")";
      }
    }
  check(s, "prop3.6 s=3 counterexample exists at m=3", found,
        "no witness among r,k <= 2");
  if (found) check(s, "prop3.6 witness " + witness, true, "");
  return s;
}

Suite suite_rmk37(int max_n) {
  Suite s;
  long long bound = max_n > 0 ? max_n : 50'000;
  for (auto [m, r, k] : rk_triples(bound, 5, 3)) {
    for (int cs = 1; cs <= std::min(m, 3); ++cs) {
      std::string tag = "(m,r,k,s)=(" + std::to_string(m) + "," + std::to_string(r) +
                        "," + std::to_string(k) + "," + std::to_string(cs) + ")";
      check_eq(s, "rmk3.7 det oracle " + tag,
               same_as_car_gf(Domain::rk(m, r, k), cs, Var::y, false, false),
               rk_lel_any_gf(m, r, k));
    }
  }
  for (auto [m, r, k] : rk_triples(std::min<long long>(bound, 5'000), 4, 2)) {
    for (int cs = 1; cs <= std::min(m, 3); ++cs) {
      std::string tag = "(m,r,k,s)=(" + std::to_string(m) + "," + std::to_string(r) +
                        "," + std::to_string(k) + "," + std::to_string(cs) + ")";
      check_eq(s, "rmk3.7 branch oracle " + tag,
               same_as_car_gf(Domain::rk(m, r, k), cs, Var::y, false, true),
               rk_lel_any_gf(m, r, k));
    }
  }
  return s;
}

Suite suite_prob_invariants(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 4;
  // weight conservation over every vector of a few boxes
  for (int n = 1; n <= top; ++n) {
    bool ok = true;
    std::string detail;
    Domain d = Domain::pf(n);
    PrefVector v;
    v.spots = n;
    v.prefs.assign(n, 1);
    while (true) {
      Polynomial total;
      for_each_branch(v, [&](const BranchTrace& t) { total += t.weight(); });
      if (total != Polynomial::constant(1)) {
        ok = false;
        detail = "weights of (" + ivec(v.prefs) + ") sum to " + total.str();
        break;
      }
      int pos = n - 1;
      while (pos >= 0 && v.prefs[pos] == n) v.prefs[pos--] = 1;
      if (pos < 0) break;
      ++v.prefs[pos];
    }
    check(s, "branch weights sum to 1 over [" + std::to_string(n) + "]^n", ok, detail);
  }
  // p := 1 reduces to the classical protocol
  for (int n = 1; n <= top; ++n) {
    bool ok = true;
    std::string detail;
    PrefVector v;
    v.spots = n;
    v.prefs.assign(n, 1);
    while (true) {
      Rat at1 = prob_pf(v).subst(std::map<Var, Rat>{{Var::p, Rat(1)}}).constant_value();
      bool classical = is_parking_function(v);
      if (at1 != (classical ? 1 : 0)) {
        ok = false;
        detail = "(" + ivec(v.prefs) + "): P|p=1 = " + rat_str(at1);
        break;
      }
      int pos = n - 1;
      while (pos >= 0 && v.prefs[pos] == n) v.prefs[pos--] = 1;
      if (pos < 0) break;
      ++v.prefs[pos];
    }
    check(s, "prob_pf at p=1 agrees with the classical test, n=" + std::to_string(n), ok,
          detail);
  }
  // total probability masses
  for (int n = 1; n <= top; ++n) {
    Polynomial total = gf_over_prob(Domain::pf(n), {});
    Int want = int_pow(n + 1, static_cast<unsigned long>(n - 1));
    check_eq(s, "sum of P(pi in PF(" + std::to_string(n) + ")) = (n+1)^(n-1)", total,
             Polynomial::constant(Rat(want)));
  }
  for (auto [m, r, k] : std::vector<std::array<int, 3>>{{2, 1, 1}, {2, 2, 2}, {3, 1, 2}}) {
    Polynomial total = gf_over_prob(Domain::rk(m, r, k), {});
    Int want = Int(k) * int_pow(k + m * r, static_cast<unsigned long>(m - 1));
    check_eq(s,
             "sum of P(pi in PF_" + std::to_string(m) + "(" + std::to_string(r) + "," +
                 std::to_string(k) + ")) = k(k+mr)^(m-1)",
             total, Polynomial::constant(Rat(want)));
  }
  for (int n = 2; n <= std::min(top + 1, 5); ++n)
    for (int m = 1; m < n; ++m) {
      Polynomial total = gf_over_prob(Domain::pf_mn(m, n), {});
      Int want = Int(n - m + 1) * int_pow(n + 1, static_cast<unsigned long>(m - 1));
      check_eq(s,
               "sum of P(pi in PF(" + std::to_string(m) + "," + std::to_string(n) +
                   ")) = (n-m+1)(n+1)^(m-1)",
               total, Polynomial::constant(Rat(want)));
    }
  return s;
}

Suite suite_parking_invariants(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 5;
  // sorted test == simulation, permutation closure, dis identity, lucky+unl
  for (int n = 1; n <= top; ++n) {
    bool agree = true, closure = true, dis_id = true, lucky_id = true;
    std::string detail;
    PrefVector v;
    v.spots = n;
    v.prefs.assign(n, 1);
    while (true) {
      ParkResult pr = park_deterministic(v);
      if (pr.success != is_parking_function(v)) {
        agree = false;
        detail = "(" + ivec(v.prefs) + ")";
      }
      if (pr.success) {
        StatRecord st = compute_stats(v, pr.outcome);
        long sum_a = 0;
        for (int a : v.prefs) sum_a += a;
        if (st.dis != n * (n + 1) / 2 - sum_a) dis_id = false;
        if (st.lucky + st.unl != n) lucky_id = false;
        if (n <= 4) {
          std::vector<int> perm = v.prefs;
          std::sort(perm.begin(), perm.end());
          do {
            if (!is_parking_function({perm, n})) closure = false;
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
      }
      int pos = n - 1;
      while (pos >= 0 && v.prefs[pos] == n) v.prefs[pos--] = 1;
      if (pos < 0) break;
      ++v.prefs[pos];
    }
    check(s, "sorted test = simulation on [" + std::to_string(n) + "]^n", agree, detail);
    check(s, "dis = C(n+1,2) - sum(a_i), n=" + std::to_string(n), dis_id, "");
    check(s, "lucky + unl = n, n=" + std::to_string(n), lucky_id, "");
    if (n <= 4)
      check(s, "permutation closure, n=" + std::to_string(n), closure, "");
  }
  return s;
}

Suite suite_lemma45(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 5;
  for (int n = 2; n <= top; ++n) {
    bool ok = true;
    std::string detail;
    PrefVector v;
    v.spots = n;
    v.prefs.assign(n, 1);
    while (ok) {
      if (is_parking_function(v)) {
        for (int k = 1; k <= n && ok; ++k) {
          // need all of 1..k present
          std::vector<char> present(k + 1, 0);
          int cnt_le = 0;
          for (int a : v.prefs) {
            if (a <= k) {
              ++cnt_le;
              present[a] = 1;
            }
          }
          bool all_present = true;
          for (int j = 1; j <= k; ++j) all_present = all_present && present[j];
          if (!all_present || cnt_le >= n) continue;
          // rotate entries > k through the cycle (k+1, ..., n+1)
          int period = n + 1 - k;
          int pf_count = 0;
          for (int j = 0; j < period; ++j) {
            PrefVector rot = v;
            bool in_range = true;
            for (int& a : rot.prefs) {
              if (a > k) {
                a = k + 1 + (a - (k + 1) + j) % period;
                if (a > n) in_range = false;
              }
            }
            if (in_range && is_parking_function(rot)) ++pf_count;
          }
          if (pf_count != cnt_le - k + 1) {
            ok = false;
            detail = "(" + ivec(v.prefs) + "), k=" + std::to_string(k) + ": " +
                     std::to_string(pf_count) + " rotations";
          }
        }
      }
      int pos = n - 1;
      while (pos >= 0 && v.prefs[pos] == n) v.prefs[pos--] = 1;
      if (pos < 0) break;
      ++v.prefs[pos];
    }
    check(s, "lemma4.5 rotations, n=" + std::to_string(n), ok, detail);
  }
  return s;
}

Suite suite_thm42(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  const std::vector<std::pair<Var, Stat>> stats = {
      {Var::x, Stat::lel}, {Var::y, Stat::one}, {Var::z, Stat::unl}};
  for (int n = 1; n <= top; ++n)
    check_eq(s, "master formula, n=" + std::to_string(n), master_gf(n),
             gf_over(Domain::pf(n), stats));
  return s;
}

Suite suite_thm48(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 5;
  const std::vector<std::pair<Var, Stat>> stats = {
      {Var::x, Stat::nlel}, {Var::y, Stat::one}, {Var::z, Stat::unl}};
  for (int n = 1; n <= top; ++n)
    check_eq(s, "correspondence formula, n=" + std::to_string(n), correspondence_gf(n),
             gf_over(Domain::pf(n), stats));
  return s;
}

Suite suite_thm410(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  const std::vector<std::pair<Var, Stat>> stats = {
      {Var::x, Stat::lel}, {Var::y, Stat::nlel}, {Var::z, Stat::unl}};
  for (int n = 1; n <= top; ++n)
    check_eq(s, "contrast formula, n=" + std::to_string(n), contrast_gf(n),
             gf_over(Domain::pf(n), stats));
  return s;
}

Suite suite_prop46(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  for (int n = 2; n <= top; ++n) {
    auto table = count_by(Domain::pf(n), {Stat::lel, Stat::one});
    bool ok = true;
    std::string detail;
    for (int sv = 0; sv <= n - 1 && ok; ++sv)
      for (int tv = 0; tv <= n - 1 && ok; ++tv) {
        auto it = table.find({sv + 1, tv + 1});
        Int got = it == table.end() ? Int(0) : it->second;
        if (got != master_count(n, sv, tv)) {
          ok = false;
          detail = "(s,t)=(" + std::to_string(sv) + "," + std::to_string(tv) + "): " +
                   got.get_str() + " != " + master_count(n, sv, tv).get_str();
        }
      }
    check(s, "prop4.6 count table, n=" + std::to_string(n), ok, detail);
  }
  return s;
}

Suite suite_prop411(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  for (int n = 2; n <= top; ++n) {
    auto table = count_by(Domain::pf(n), {Stat::lel, Stat::nlel});
    bool ok = true;
    std::string detail;
    for (int sv = 0; sv <= n - 1 && ok; ++sv)
      for (int tv = 0; tv <= n - 1 && ok; ++tv) {
        auto it = table.find({sv + 1, tv + 1});
        Int got = it == table.end() ? Int(0) : it->second;
        if (got != contrast_count(n, sv, tv)) {
          ok = false;
          detail = "(s,t)=(" + std::to_string(sv) + "," + std::to_string(tv) + "): " +
                   got.get_str() + " != " + contrast_count(n, sv, tv).get_str();
        }
      }
    check(s, "prop4.11 count table, n=" + std::to_string(n), ok, detail);
  }
  return s;
}

Suite suite_cor43(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  for (int n = 1; n <= top; ++n)
    check_eq(s, "sum y^one = y(y+n)^(n-1), n=" + std::to_string(n), ones_gf(n),
             gf_over(Domain::pf(n), {{Var::y, Stat::one}}));
  return s;
}

Suite suite_gessel_seo(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  for (int n = 1; n <= top; ++n) {
    check_eq(s, "lucky product, n=" + std::to_string(n), lucky_gf(n),
             gf_over(Domain::pf(n), {{Var::q, Stat::lucky}}));
    check_eq(s, "(q+n)^(n-1) repeats, n=" + std::to_string(n), rep_gf(n),
             gf_over(Domain::pf(n), {{Var::q, Stat::rep}}));
    check_eq(s, "unluckiness product, n=" + std::to_string(n), unl_gf(n),
             gf_over(Domain::pf(n), {{Var::x, Stat::unl}}));
  }
  int ttop = std::min(top, 5);
  for (int n = 1; n <= ttop; ++n) {
    check_eq(s, "tree leaders = lucky product, n=" + std::to_string(n),
             tree_gf(n, {{Var::q, TreeStat::ldr}}), lucky_gf(n));
    check_eq(s, "tree non-leaders = unluckiness product, n=" + std::to_string(n),
             tree_gf(n, {{Var::x, TreeStat::nld}}), unl_gf(n));
    check_eq(s, "tree edge descents = unluckiness marginal, n=" + std::to_string(n),
             tree_gf(n, {{Var::x, TreeStat::edes}}),
             gf_over(Domain::pf(n), {{Var::x, Stat::unl}}));
    check_eq(s, "tree root degree = 1's marginal, n=" + std::to_string(n),
             tree_gf(n, {{Var::y, TreeStat::deg0}}), ones_gf(n));
    check_eq(s, "tree (nld,deg0) = Gessel-Seo product, n=" + std::to_string(n),
             tree_gf(n, {{Var::x, TreeStat::nld}, {Var::y, TreeStat::deg0}}),
             gs_tree_nld_deg0_gf(n));
  }
  return s;
}

Suite suite_counterexamples(int) {
  Suite s;
  // pairs vs trees: equality at n=1, first failure at n=2
  auto pf_pair = [](int n) {
    return gf_over(Domain::pf(n), {{Var::x, Stat::unl}, {Var::y, Stat::lel}});
  };
  auto tree_pair = [](int n) {
    return tree_gf(n, {{Var::x, TreeStat::nld}, {Var::y, TreeStat::deg0}});
  };
  check(s, "(unl,lel) = (nld,deg0) at n=1", pf_pair(1) == tree_pair(1), "");
  check(s, "(unl,lel) != (nld,deg0) first at n=2", pf_pair(2) != tree_pair(2),
        "unexpected equality");
  // (unl,dis) vs (edes,inv): equality through n=3, first failure at n=4
  auto pf_ud = [](int n) {
    return gf_over(Domain::pf(n), {{Var::x, Stat::unl}, {Var::y, Stat::dis}});
  };
  auto tree_ei = [](int n) {
    return tree_gf(n, {{Var::x, TreeStat::edes}, {Var::y, TreeStat::inv}});
  };
  for (int n = 1; n <= 3; ++n)
    check(s, "(unl,dis) = (edes,inv) at n=" + std::to_string(n),
          pf_ud(n) == tree_ei(n), "unexpected inequality");
  check(s, "(unl,dis) != (edes,inv) first at n=4", pf_ud(4) != tree_ei(4),
        "unexpected equality");
  // prop3.6 s>=3: fails first at m=3
  bool found = false;
  for (int r = 1; r <= 2 && !found; ++r)
    for (int k = 1; k <= 2 && !found; ++k)
      if (same_as_car_gf(Domain::rk(3, r, k), 3, Var::y, true, false) !=
          rk_unl_lel_gf(3, r, k))
        found = true;
  check(s, "s=3 analogue of prop3.6 fails at m=3", found, "no witness found");
  return s;
}

Suite suite_thm51(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  for (int n = 2; n <= top; ++n) {
    check_eq(s, "PPF (unl,rep) product, n=" + std::to_string(n), ppf_unl_rep_gf(n),
             gf_over(Domain::ppf(n), {{Var::x, Stat::unl}, {Var::y, Stat::rep}}));
    check_eq(s, "PPF unl marginal, n=" + std::to_string(n),
             ppf_unl_rep_gf(n).subst(std::map<Var, Rat>{{Var::y, Rat(1)}}),
             gf_over(Domain::ppf(n), {{Var::x, Stat::unl}}));
    check_eq(s, "PPF rep marginal = (y+n-2)^(n-1), n=" + std::to_string(n),
             ppf_unl_rep_gf(n).subst(std::map<Var, Rat>{{Var::x, Rat(1)}}),
             gf_over(Domain::ppf(n), {{Var::y, Stat::rep}}));
  }
  return s;
}

Suite suite_thm53(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  for (int n = 2; n <= top; ++n)
    check_eq(s, "PPF (unl,lel) product, n=" + std::to_string(n), ppf_unl_lel_gf(n),
             gf_over(Domain::ppf(n), {{Var::x, Stat::unl}, {Var::y, Stat::lel}}));
  return s;
}

Suite suite_rmk53(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  for (int n = 2; n <= top; ++n)
    for (int cs = 1; cs <= std::min(n, 3); ++cs)
      check_eq(s,
               "PPF same-as-car-" + std::to_string(cs) + " = y(y+n-2)^(n-1), n=" +
                   std::to_string(n),
               same_as_car_gf(Domain::ppf(n), cs, Var::y, false, false),
               ppf_rep_any_gf(n));
  return s;
}

Suite suite_ppf_leading_1(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  for (int len = 1; len <= top; ++len)
    check_eq(s, "PPF (lel,one), length " + std::to_string(len), ppf_lel_one_gf(len),
             gf_over(Domain::ppf(len), {{Var::x, Stat::lel}, {Var::y, Stat::one}}));
  for (int len = 2; len <= top; ++len) {
    int n = len - 1;
    Polynomial lhs = ppf_lel_one_gf(len).subst(std::map<Var, Rat>{{Var::x, Rat(1)}});
    Polynomial want =
        (var(Var::y) + Polynomial::constant(n)).pow(static_cast<unsigned>(n)) *
            (var(Var::y) - Polynomial::constant(1)) +
        Polynomial::constant(Rat(int_pow(n, static_cast<unsigned long>(n))));
    check_eq(s, "PPF 1's corollary, length " + std::to_string(len), lhs, want);
  }
  return s;
}

Suite suite_thm55(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  for (int n = 0; n <= top; ++n) {
    check_eq(s, "UPF recurrence = Stirling closed form, n=" + std::to_string(n),
             upf_rec(n), upf_closed(n));
    if (n >= 1)
      check_eq(s, "UPF recurrence = oracle, n=" + std::to_string(n), upf_rec(n),
               gf_over(Domain::upf(n), {{Var::y, Stat::unl}}));
  }
  const long fubini[] = {1, 1, 3, 13, 75, 541, 4683};
  for (int n = 1; n <= std::min(top, 6); ++n) {
    Rat total = upf_rec(n).subst(std::map<Var, Rat>{{Var::y, Rat(1)}}).constant_value();
    check(s, "|UPF(" + std::to_string(n) + ")| = Fubini number", total == fubini[n],
          rat_str(total));
  }
  return s;
}

Suite suite_upf_egf(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  check(s, "EGF y/(y+1-exp(yt)) matches recurrence to order " + std::to_string(top),
        verify_upf_egf(top), "coefficient mismatch");
  check(s, "Fubini EGF 1/(2-exp(t)) at y=1 to order " + std::to_string(top),
        verify_fubini_egf(top), "coefficient mismatch");
  return s;
}

Suite suite_dis_log_egf(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 5;
  check(s, "displacement log-EGF identity to order " + std::to_string(top),
        verify_dis_log_egf(top), "coefficient mismatch");
  return s;
}

Suite suite_thm56(int max_n) {
  Suite s;
  // fixed small u vectors, then seeded random ones
  std::vector<std::vector<int>> us = {{1}, {2}, {1, 2}, {2, 5}, {1, 3}, {1, 2, 3}, {2, 3, 5}};
  std::mt19937 rng(20240811);
  int extra = max_n > 0 ? max_n : 20;
  while (extra > 0) {
    int m = 1 + static_cast<int>(rng() % 4);
    std::vector<int> pool;
    for (int v = 1; v <= 7; ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> u(pool.begin(), pool.begin() + m);
    std::sort(u.begin(), u.end());
    us.push_back(u);
    --extra;
  }
  for (const auto& u : us) {
    Domain d = Domain::u_family(u);
    check_eq(s, "A_u vs oracle, u=(" + ivec(u) + ")", u_rec_A(u),
             gf_over(d, {{Var::x, Stat::unl}}));
    check_eq(s, "B_u vs oracle, u=(" + ivec(u) + ")", u_rec_B(u),
             gf_over(d, {{Var::y, Stat::one}}));
    check_eq(s, "C_u vs oracle, u=(" + ivec(u) + ")", u_rec_C(u),
             gf_over(d, {{Var::z, Stat::lel}}));
    Polynomial b1 = u_rec_B(u).subst(std::map<Var, Rat>{{Var::y, Rat(1)}});
    Polynomial c1 = u_rec_C(u).subst(std::map<Var, Rat>{{Var::z, Rat(1)}});
    check_eq(s, "B(1) = C(1) = |PF(u)|, u=(" + ivec(u) + ")", b1, c1);
    check_eq(s, "B(1) = count, u=(" + ivec(u) + ")", b1,
             Polynomial::constant(Rat(count_over(d))));
  }
  return s;
}

Suite suite_prop31(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  // the two displayed forms agree symbolically in p
  for (int n = 1; n <= top; ++n) {
    bool ok = true;
    std::string detail;
    for (int i = 0; i <= n - 1 && ok; ++i) {
      Rat total(0);
      for (int k = 0; k <= i && ok; ++k) {
        Polynomial pform = displacement_prob_pform(n, i, k);
        Rat simple = displacement_prob(n, i, k);
        total += simple;
        if (pform != Polynomial::constant(simple)) {
          ok = false;
          detail = "forms differ at (n,i,k)=(" + std::to_string(n) + "," +
                   std::to_string(i) + "," + std::to_string(k) + ")";
        }
      }
      if (ok && total != 1) {
        ok = false;
        detail = "mass " + rat_str(total) + " at i=" + std::to_string(i);
      }
    }
    check(s, "prop3.1 two forms agree and sum to 1, n=" + std::to_string(n), ok, detail);
  }
  // brute-force conditional law over uniform PF(m,n), m = n and m = i+1
  for (int n = 1; n <= std::min(top, 6); ++n) {
    bool ok = true;
    std::string detail;
    for (int m : {n, -1}) {
      for (int i = 0; i <= n - 1 && ok; ++i) {
        int cars = m == -1 ? i + 1 : m;
        if (i > cars - 1) continue;
        std::vector<Int> hits(i + 2, Int(0));
        Int members(0);
        PrefVector v;
        v.spots = n;
        v.prefs.assign(cars, 1);
        while (true) {
          ParkResult pr = park_deterministic(v);
          if (pr.success) {
            ++members;
            ++hits[pr.outcome.spot_of_car[i] - v.prefs[i]];
          }
          int pos = cars - 1;
          while (pos >= 0 && v.prefs[pos] == n) v.prefs[pos--] = 1;
          if (pos < 0) break;
          ++v.prefs[pos];
        }
        for (int k = 0; k <= i && ok; ++k) {
          Rat brute = make_rat(hits[k], members);
          if (brute != displacement_prob(n, i, k)) {
            ok = false;
            detail = "(n,i,k,m)=(" + std::to_string(n) + "," + std::to_string(i) + "," +
                     std::to_string(k) + "," + std::to_string(cars) + ")";
          }
        }
      }
    }
    check(s, "prop3.1 = brute-force conditional law, n=" + std::to_string(n), ok, detail);
  }
  // symbolic-p conditional via branch oracle at small n
  for (int n = 2; n <= std::min(top, 3); ++n) {
    bool ok = true;
    std::string detail;
    for (int i = 0; i <= n - 1 && ok; ++i) {
      // joint (non-normalized) mass of (displacement of car i+1 = k)
      for (int k = 0; k <= i && ok; ++k) {
        Polynomial joint = gf_over_prob_custom(
            Domain::pf(n), [&](const PrefVector&, const StatRecord& st) {
              ExpVec e = kZeroExp;
              e[static_cast<int>(Var::q)] = st.per_car_displacement[i] == k ? 1 : 0;
              return e;
            });
        // coefficient of q^1 over total (n+1)^{n-1}
        ExpVec qe = kZeroExp;
        qe[static_cast<int>(Var::q)] = 1;
        Polynomial cond = Polynomial();
        for (const auto& [e, c] : joint.terms()) {
          if (e[static_cast<int>(Var::q)] == 1) {
            ExpVec rest = e;
            rest[static_cast<int>(Var::q)] = 0;
            cond.add_term(rest, c);
          }
        }
        Rat denom(int_pow(n + 1, static_cast<unsigned long>(n - 1)));
        Polynomial normalized = cond.scaled(1 / denom);
        if (normalized != Polynomial::constant(displacement_prob(n, i, k))) {
          ok = false;
          detail = "(n,i,k)=(" + std::to_string(n) + "," + std::to_string(i) + "," +
                   std::to_string(k) + "): " + normalized.str();
        }
      }
    }
    check(s, "prop3.1 conditional is p-free via branch oracle, n=" + std::to_string(n),
          ok, detail);
  }
  // average displacement against brute force
  for (int n = 2; n <= std::min(top, 5); ++n) {
    Domain d = Domain::pf(n);
    Polynomial disgf = gf_over(d, {{Var::q, Stat::dis}});
    Rat total(0);
    for (const auto& [e, c] : disgf.terms())
      total += c * Rat(e[static_cast<int>(Var::q)]);
    Rat brute = total / Rat(int_pow(n + 1, static_cast<unsigned long>(n - 1))) / Rat(n);
    check(s, "avg displacement matches brute force, (m,n)=(n,n), n=" + std::to_string(n),
          avg_displacement(n, n) == brute,
          rat_str(avg_displacement(n, n)) + " != " + rat_str(brute));
  }
  return s;
}

Suite suite_cor32(int max_n) {
  Suite s;
  int top = max_n > 0 ? max_n : 6;
  for (int n = 1; n <= top; ++n) {
    bool ok = true;
    std::string detail;
    for (int i = 0; i <= n - 1 && ok; ++i) {
      Rat p0 = displacement_prob(n, i, 0);
      if (p0 + unlucky_prob(n, i) != 1) {
        ok = false;
        detail = "i=" + std::to_string(i);
      }
      if (unlucky_prob(n, i) != make_rat(i, n + 1)) ok = false;
    }
    check(s, "cor3.2 P(unlucky) = i/(n+1), n=" + std::to_string(n), ok, detail);
  }
  return s;
}

Suite suite_ur_law(int max_n) {
  Suite s;
  long long bound = max_n > 0 ? max_n : 50'000;
  for (auto [m, r, k] : rk_triples(bound, 5, 3)) {
    JointPmf law = exact_ur_law(m, r, k);
    Rat mass(0);
    for (const auto& [uv, p] : law.probs) mass += p;
    check(s,
          "UR law normalized, (m,r,k)=(" + std::to_string(m) + "," + std::to_string(r) +
              "," + std::to_string(k) + ")",
          mass == 1, rat_str(mass));
    // marginals must match the Theorem 3.3 polynomial coefficients normalized
    // by k(k+mr)^{m-1}
    Polynomial gf = rk_unl_rep_gf(m, r, k);
    Rat total = Rat(Int(k) * int_pow(k + m * r, static_cast<unsigned long>(m - 1)));
    bool umatch = true, rmatch = true;
    Pmf mu = law.marginal_first();
    Pmf mr_ = law.marginal_second();
    Polynomial gfu = gf.subst(std::map<Var, Rat>{{Var::y, Rat(1)}});
    Polynomial gfr = gf.subst(std::map<Var, Rat>{{Var::x, Rat(1)}});
    for (int uvals = 0; uvals < static_cast<int>(mu.probs.size()); ++uvals) {
      ExpVec e = kZeroExp;
      e[static_cast<int>(Var::x)] = uvals;
      if (mu.probs[uvals] != gfu.coeff(e) / total) umatch = false;
    }
    for (int rv = 0; rv < static_cast<int>(mr_.probs.size()); ++rv) {
      ExpVec e = kZeroExp;
      e[static_cast<int>(Var::y)] = rv;
      if (mr_.probs[rv] != gfr.coeff(e) / total) rmatch = false;
    }
    check(s,
          "UR marginals match thm3.3 coefficients, (m,r,k)=(" + std::to_string(m) + "," +
              std::to_string(r) + "," + std::to_string(k) + ")",
          umatch && rmatch, "");
  }
  // PPF analogue against the PPF oracle
  for (int n = 2; n <= 6; ++n) {
    JointPmf law = exact_ur_law_ppf(n);
    Polynomial gf = ppf_unl_rep_gf(n);
    Rat total = Rat(int_pow(n - 1, static_cast<unsigned long>(n - 1)));
    bool ok = true;
    for (const auto& [uv, p] : law.probs) {
      ExpVec e = kZeroExp;
      e[static_cast<int>(Var::x)] = uv.first;
      e[static_cast<int>(Var::y)] = uv.second;
      if (p != gf.coeff(e) / total) ok = false;
    }
    check(s, "PPF UR law matches thm5.1 coefficients, n=" + std::to_string(n), ok, "");
  }
  return s;
}

Suite suite_limits(int max_n) {
  Suite s;
  std::vector<int> ms = {50, 100, 200};
  if (max_n > 0) ms = {max_n / 4, max_n / 2, max_n};
  for (auto [c, r] : std::vector<std::pair<int, int>>{{0, 1}, {1, 1}}) {
    std::vector<LimitReport> reps;
    for (int m : ms) reps.push_back(limit_checks(m, c, r));
    std::string tag = "(c,r)=(" + std::to_string(c) + "," + std::to_string(r) + ")";
    bool tv_mono = reps[0].tv_repeats > reps[1].tv_repeats &&
                   reps[1].tv_repeats > reps[2].tv_repeats;
    bool ks_mono = reps[0].ks_unlucky > reps[1].ks_unlucky &&
                   reps[1].ks_unlucky > reps[2].ks_unlucky;
    bool tvl_mono = reps[0].tv_same_as_car_s > reps[2].tv_same_as_car_s;
    check(s, "TV(R, Poisson) decreasing " + tag, tv_mono,
          std::to_string(reps[0].tv_repeats) + " > " + std::to_string(reps[1].tv_repeats) +
              " > " + std::to_string(reps[2].tv_repeats) + " fails");
    check(s, "KS(U, Phi) decreasing " + tag, ks_mono, "");
    check(s, "TV(L_s, Poisson) decreasing " + tag, tvl_mono, "");
    check(s, "TV < 0.01 at m=" + std::to_string(ms[2]) + " " + tag,
          reps[2].tv_repeats < 0.01, std::to_string(reps[2].tv_repeats));
    check(s, "KS < 0.05 at m=" + std::to_string(ms[2]) + " " + tag,
          reps[2].ks_unlucky < 0.05, std::to_string(reps[2].ks_unlucky));
  }
  {
    std::vector<LimitReport> reps;
    for (int m : ms) reps.push_back(limit_checks_ppf(m));
    bool tv_mono = reps[0].tv_repeats > reps[1].tv_repeats &&
                   reps[1].tv_repeats > reps[2].tv_repeats;
    bool ks_mono = reps[0].ks_unlucky > reps[1].ks_unlucky &&
                   reps[1].ks_unlucky > reps[2].ks_unlucky;
    check(s, "PPF TV(R, Poisson(1)) decreasing", tv_mono, "");
    check(s, "PPF KS(U, Phi) decreasing", ks_mono, "");
    check(s, "PPF TV < 0.01 at n=" + std::to_string(ms[2]),
          reps[2].tv_repeats < 0.01, std::to_string(reps[2].tv_repeats));
    check(s, "PPF KS < 0.05 at n=" + std::to_string(ms[2]),
          reps[2].ks_unlucky < 0.05, std::to_string(reps[2].ks_unlucky));
  }
  return s;
}

using SuiteFn = Suite (*)(int);

const std::vector<std::pair<std::string, SuiteFn>> kSuites = {
    {"table1", suite_table1},
    {"counting", suite_counting},
    {"parking-invariants", suite_parking_invariants},
    {"prob-invariants", suite_prob_invariants},
    {"thm2.1", suite_thm21},
    {"thm2.2", suite_thm22},
    {"cor2.3", suite_cor23},
    {"prop2.5", suite_prop25},
    {"kreweras", suite_kreweras},
    {"thm3.3", suite_thm33},
    {"thm3.5", suite_thm35},
    {"prop3.6", suite_prop36},
    {"rmk3.7", suite_rmk37},
    {"prop3.1", suite_prop31},
    {"cor3.2", suite_cor32},
    {"ur-law", suite_ur_law},
    {"limits", suite_limits},
    {"lemma4.5", suite_lemma45},
    {"thm4.2", suite_thm42},
    {"thm4.8", suite_thm48},
    {"thm4.10", suite_thm410},
    {"prop4.6", suite_prop46},
    {"prop4.11", suite_prop411},
    {"cor4.3", suite_cor43},
    {"gessel-seo", suite_gessel_seo},
    {"counterexamples", suite_counterexamples},
    {"thm5.1", suite_thm51},
    {"thm5.3", suite_thm53},
    {"rmk5.3", suite_rmk53},
    {"eq-ppf-leading-1", suite_ppf_leading_1},
    {"thm5.5", suite_thm55},
    {"upf-egf", suite_upf_egf},
    {"dis-log-egf", suite_dis_log_egf},
    {"thm5.6", suite_thm56},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : kSuites) names.push_back(name);
  return names;
}

Suite run_suite(const std::string& suite, int max_n) {
  for (const auto& [name, fn] : kSuites)
    if (name == suite) return fn(max_n);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

bool all_passed(const Suite& s) {
  for (const Check& c : s)
    if (!c.pass) return false;
  return true;
}

}  // namespace pf::verify
