// parkfn: exact enumeration, closed formulas, recurrences and verification
// suites for parking-function statistics.

#include <CLI11.hpp>

#include "parkfn/closed_forms.hpp"
#include "parkfn/distributions.hpp"
#include "parkfn/oracle.hpp"
#include "parkfn/recurrences.hpp"
#include "parkfn/verify.hpp"

#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct GfOptions {
  std::string family = "pf";
  int n = 0, m = 0, r = 1, k = 1;
  std::vector<int> u;
  std::string stats = "x=unl,y=dis,z=des,w=rlm";
  std::string method = "oracle";
  std::string format = "text";
};

std::vector<std::pair<pf::Var, pf::Stat>> parse_stats(const std::string& spec) {
  std::vector<std::pair<pf::Var, pf::Stat>> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--stats", "expected var=stat");
    auto var = pf::var_from_name(item.substr(0, eq));
    auto stat = pf::stat_from_name(item.substr(eq + 1));
    if (!var) throw CLI::ValidationError("--stats", "unknown variable in '" + item + "'");
    if (!stat) throw CLI::ValidationError("--stats", "unknown statistic in '" + item + "'");
    out.emplace_back(*var, *stat);
  }
  if (out.empty()) throw CLI::ValidationError("--stats", "empty statistic list");
  return out;
}

std::string signature(const std::vector<std::pair<pf::Var, pf::Stat>>& stats) {
  std::set<std::string> parts;
  for (const auto& [v, s] : stats)
    parts.insert(std::string(pf::kVarNames[static_cast<int>(v)]) + "=" +
                 std::string(pf::stat_name(s)));
  std::string sig;
  for (const auto& p : parts) sig += (sig.empty() ? "" : ",") + p;
  return sig;
}

pf::Domain make_domain(const GfOptions& o) {
  if (o.family == "pf") return pf::Domain::pf(o.n);
  if (o.family == "pfmn") return pf::Domain::pf_mn(o.m, o.n);
  if (o.family == "rk") return pf::Domain::rk(o.m, o.r, o.k);
  if (o.family == "ppf") return pf::Domain::ppf(o.n);
  if (o.family == "upf") return pf::Domain::upf(o.n);
  if (o.family == "u") return pf::Domain::u_family(o.u);
  throw CLI::ValidationError("--family", "unknown family '" + o.family + "'");
}

pf::Polynomial compute_gf(const GfOptions& o) {
  auto stats = parse_stats(o.stats);
  if (o.method == "oracle") return pf::gf_over(make_domain(o), stats);
  if (o.method == "prob-oracle") return pf::gf_over_prob(make_domain(o), stats);
  const std::string sig = signature(stats);
  if (o.method == "recurrence") {
    if (o.family == "pf") {
      if (sig == "w=rlm,x=unl,y=dis,z=des") return pf::P_rec(o.n);
      if (sig == "q=dis") return pf::kreweras_dis(o.n);
      if (sig == "x=unl,y=lel") return pf::pair_rec_lel(o.n);
      if (sig == "x=unl,y=one") return pf::pair_rec_one(o.n);
    } else if (o.family == "pfmn") {
      if (sig == "w=rlm,x=unl,y=dis,z=des") return pf::P_mn_rec(o.m, o.n);
    } else if (o.family == "upf") {
      if (sig == "y=unl") return pf::upf_rec(o.n);
    } else if (o.family == "u") {
      if (sig == "x=unl") return pf::u_rec_A(o.u);
      if (sig == "y=one") return pf::u_rec_B(o.u);
      if (sig == "z=lel") return pf::u_rec_C(o.u);
    }
    throw CLI::ValidationError("--method",
                               "no recurrence for family " + o.family + " with stats " + sig);
  }
  if (o.method == "closed") {
    if (o.family == "pf") {
      if (sig == "x=lel,y=one,z=unl") return pf::master_gf(o.n);
      if (sig == "x=nlel,y=one,z=unl") return pf::correspondence_gf(o.n);
      if (sig == "x=lel,y=nlel,z=unl") return pf::contrast_gf(o.n);
      if (sig == "y=one") return pf::ones_gf(o.n);
      if (sig == "q=lucky") return pf::lucky_gf(o.n);
      if (sig == "q=rep") return pf::rep_gf(o.n);
      if (sig == "x=unl") return pf::unl_gf(o.n);
    } else if (o.family == "rk") {
      if (sig == "x=unl,y=rep") return pf::rk_unl_rep_gf(o.m, o.r, o.k);
      if (sig == "x=unl,y=lel") return pf::rk_unl_lel_gf(o.m, o.r, o.k);
      if (sig == "y=lel") return pf::rk_lel_any_gf(o.m, o.r, o.k);
    } else if (o.family == "ppf") {
      if (sig == "x=unl,y=rep") return pf::ppf_unl_rep_gf(o.n);
      if (sig == "x=unl,y=lel") return pf::ppf_unl_lel_gf(o.n);
      if (sig == "x=lel,y=one") return pf::ppf_lel_one_gf(o.n);
      if (sig == "y=rep" || sig == "y=lel") return pf::ppf_rep_any_gf(o.n);
    } else if (o.family == "upf") {
      if (sig == "y=unl") return pf::upf_closed(o.n);
    }
    throw CLI::ValidationError("--method",
                               "no closed form for family " + o.family + " with stats " + sig);
  }
  throw CLI::ValidationError("--method", "unknown method '" + o.method + "'");
}

int run_verify(const std::vector<std::string>& suites, int max_n, bool quiet) {
  bool all_ok = true;
  for (const std::string& name : suites) {
    pf::verify::Suite suite = pf::verify::run_suite(name, max_n);
    int passed = 0;
    for (const auto& c : suite) {
      if (c.pass) {
        ++passed;
        if (!quiet) std::cout << "      ok  " << c.name << "\n";
      } else {
        std::cout << "    FAIL  " << c.name << ": " << c.detail << "\n";
        all_ok = false;
      }
    }
    std::cout << name << ": " << passed << "/" << suite.size() << " checks passed\n";
  }
  return all_ok ? kExitOk : kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact parking-function and labelled-forest enumeration"};
  app.require_subcommand(1);

  GfOptions gf;
  CLI::App* gf_cmd = app.add_subcommand("gf", "print a generating polynomial");
  gf_cmd->add_option("--family", gf.family, "pf|pfmn|rk|ppf|upf|u")->capture_default_str();
  gf_cmd->add_option("--n", gf.n, "length / street size");
  gf_cmd->add_option("--m", gf.m, "number of cars (pfmn, rk)");
  gf_cmd->add_option("--r", gf.r, "(r,k)-parking step");
  gf_cmd->add_option("--k", gf.k, "(r,k)-parking offset");
  gf_cmd->add_option("--u", gf.u, "u-vector, e.g. --u 1 3 5")->expected(-1);
  gf_cmd->add_option("--stats", gf.stats, "comma list var=stat")->capture_default_str();
  gf_cmd->add_option("--method", gf.method, "oracle|prob-oracle|recurrence|closed")
      ->capture_default_str();
  gf_cmd->add_option("--format", gf.format, "text|json")->capture_default_str();

  std::vector<std::string> verify_suites;
  int verify_max_n = -1;
  bool verify_list = false;
  bool verify_quiet = false;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run named identity suites");
  verify_cmd->add_option("suites", verify_suites, "suite names, or 'all'");
  verify_cmd->add_option("--max-n", verify_max_n, "override the suite's default size");
  verify_cmd->add_flag("--list", verify_list, "list available suites");
  verify_cmd->add_flag("--quiet", verify_quiet, "print failures and summaries only");

  std::string dist_pmf;
  bool dist_limits = false;
  std::string dist_family = "rk";
  int dist_n = 0, dist_i = 0, dist_m = 200, dist_c = 0, dist_r = 1;
  CLI::App* dist_cmd = app.add_subcommand("dist", "exact distributions and limit distances");
  dist_cmd->add_option("--pmf", dist_pmf, "displacement");
  dist_cmd->add_flag("--limits", dist_limits, "emit the Poisson/CLT distance table");
  dist_cmd->add_option("--family", dist_family, "rk|ppf (for --limits)")->capture_default_str();
  dist_cmd->add_option("--n", dist_n, "street size (displacement pmf)");
  dist_cmd->add_option("--i", dist_i, "car index i (the (i+1)th car)");
  dist_cmd->add_option("--m", dist_m, "largest car count for --limits")->capture_default_str();
  dist_cmd->add_option("--c", dist_c, "k = c m + r")->capture_default_str();
  dist_cmd->add_option("--r", dist_r, "(r,k) step")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gf_cmd->parsed()) {
      pf::Polynomial poly = compute_gf(gf);
      if (gf.format == "json")
        std::cout << poly.to_json() << "\n";
      else if (gf.format == "text")
        std::cout << poly.str() << "\n";
      else
        throw CLI::ValidationError("--format", "unknown format");
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      if (verify_list) {
        for (const auto& name : pf::verify::suite_names()) std::cout << name << "\n";
        return kExitOk;
      }
      if (verify_suites.empty()) {
        std::cerr << "verify: name at least one suite (or --list)\n";
        return kExitUsage;
      }
      if (verify_suites.size() == 1 && verify_suites[0] == "all")
        verify_suites = pf::verify::suite_names();
      return run_verify(verify_suites, verify_max_n, verify_quiet);
    }
    if (dist_cmd->parsed()) {
      if (dist_limits) {
        std::vector<pf::LimitReport> reports;
        for (int m : {dist_m / 4, dist_m / 2, dist_m}) {
          if (m < 2) continue;
          reports.push_back(dist_family == "ppf" ? pf::limit_checks_ppf(m)
                                                 : pf::limit_checks(m, dist_c, dist_r));
        }
        std::cout << pf::limit_csv(reports);
        return kExitOk;
      }
      if (dist_pmf == "displacement") {
        if (dist_n < 1 || dist_i < 0 || dist_i > dist_n - 1) {
          std::cerr << "dist: need --n >= 1 and 0 <= --i <= n-1\n";
          return kExitUsage;
        }
        std::cout << pf::pmf_csv(pf::displacement_pmf(dist_n, dist_i));
        return kExitOk;
      }
      std::cerr << "dist: choose --pmf displacement or --limits\n";
      return kExitUsage;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const pf::DomainGuardError& e) {
    std::cerr << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
