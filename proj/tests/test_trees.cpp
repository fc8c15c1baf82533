#include <doctest.h>

#include <json.hpp>

#include "parkfn/oracle.hpp"
#include "parkfn/trees.hpp"

#include <fstream>
#include <map>
#include <set>

using namespace pf;

namespace {

RootedTree tree_from_parents(std::vector<int> parents_of_1_to_n) {
  RootedTree t;
  t.parent.push_back(-1);
  for (int p : parents_of_1_to_n) t.parent.push_back(p);
  return t;
}

}  // namespace

TEST_CASE("tree statistics") {
  // increasing path 0 -> 1 -> 2 -> 3
  TreeStats path = tree_stats(tree_from_parents({0, 1, 2}));
  CHECK(path.inv == 0);
  CHECK(path.nld == 0);
  CHECK(path.ldr == 3);
  CHECK(path.lev == 1);
  CHECK(path.deg0 == 1);
  CHECK(path.edes == 0);

  // star on {0,1,2,3}
  TreeStats star = tree_stats(tree_from_parents({0, 0, 0}));
  CHECK(star.lev == 3);
  CHECK(star.deg0 == 3);
  CHECK(star.inv == 0);
  CHECK(star.nld == 0);
  CHECK(star.edes == 0);

  // 0 -> 1 -> 3 -> 2 (Prüfer 13): one edge descent (3 above 2), one inversion
  TreeStats bent = tree_stats(tree_from_parents({0, 3, 1}));
  CHECK(bent.deg0 == 1);
  CHECK(bent.edes == 1);
  CHECK(bent.inv == 1);
  CHECK(bent.nld == 1);
  CHECK(bent.lev == 1);

  // single-vertex tree: the root is its own leaf
  RootedTree trivial;
  trivial.parent = {-1};
  CHECK(tree_stats(trivial).lev == 1);
  CHECK(tree_stats(trivial).deg0 == 0);
}

TEST_CASE("prufer codec round trip") {
  CHECK(prufer_encode(tree_from_parents({0, 0, 0})) == PruferCode{0, 0});
  RootedTree decoded = prufer_decode({1, 3});
  CHECK(decoded.parent == tree_from_parents({0, 3, 1}).parent);

  for (int n = 1; n <= 5; ++n) {
    long count = 0;
    for_each_tree(n, [&](const RootedTree& t) {
      ++count;
      PruferCode code = prufer_encode(t);
      CHECK(prufer_decode(code).parent == t.parent);
    });
    CHECK(Int(count) == count_trees(n));
  }
  CHECK(count_trees(3) == 16);
  CHECK(count_trees(1) == 1);
  CHECK(count_trees(5) == 1296);
}

TEST_CASE("circle construction") {
  CHECK(prufer_to_pf_circular({0, 0}).prefs == std::vector<int>{1, 1, 1});
  CHECK(prufer_to_pf_circular({1, 3}).prefs == std::vector<int>{2, 3, 1});
  CHECK(prufer_to_pf_circular({3, 2}).prefs == std::vector<int>{3, 2, 1});
}

TEST_CASE("bfs construction") {
  CHECK(tree_to_pf_bfs(tree_from_parents({0, 0, 0})).prefs == std::vector<int>{1, 1, 1});
  CHECK(tree_to_pf_bfs(tree_from_parents({0, 3, 1})).prefs == std::vector<int>{1, 3, 2});
  CHECK(tree_to_pf_bfs(tree_from_parents({3, 0, 2})).prefs == std::vector<int>{3, 1, 2});
}

TEST_CASE("both constructions are bijections onto PF(n)") {
  for (int n = 1; n <= 5; ++n) {
    std::set<std::vector<int>> circ, bfs;
    for_each_tree(n, [&](const RootedTree& t) {
      PrefVector fc = prufer_to_pf_circular(prufer_encode(t));
      PrefVector fb = tree_to_pf_bfs(t);
      CHECK(is_parking_function(fc));
      CHECK(is_parking_function(fb));
      circ.insert(fc.prefs);
      bfs.insert(fb.prefs);
    });
    size_t pf_count = count_over(Domain::pf(n)).get_ui();
    CHECK(circ.size() == pf_count);
    CHECK(bfs.size() == pf_count);
  }
}

TEST_CASE("shipped table1 fixture matches the library") {
  std::ifstream in(PARKFN_TABLE1_PATH);
  REQUIRE(in.good());
  nlohmann::json doc = nlohmann::json::parse(in);
  const auto& rows = doc.at("rows");
  REQUIRE(rows.size() == 16);
  auto as_prefs = [](const std::string& s) {
    std::vector<int> v;
    for (char c : s) v.push_back(c - '0');
    return v;
  };
  for (const auto& row : rows) {
    PruferCode code = as_prefs(row.at("prufer").get<std::string>());
    RootedTree t = tree_from_parents(row.at("parent").get<std::vector<int>>());
    CHECK(prufer_encode(t) == code);
    CHECK(prufer_decode(code).parent == t.parent);
    CHECK(prufer_to_pf_circular(code).prefs == as_prefs(row.at("lel_pf").get<std::string>()));
    CHECK(tree_to_pf_bfs(t).prefs == as_prefs(row.at("ones_pf").get<std::string>()));
    // column 3 (repeats) rows are fixture data: parking functions whose rep
    // statistic equals the number of 0's in the code
    PrefVector rep_v{as_prefs(row.at("rep_pf").get<std::string>()), 3};
    CHECK(is_parking_function(rep_v));
    StatRecord st = compute_stats(rep_v, park_deterministic(rep_v).outcome);
    int zeros = 0;
    for (int c : code) zeros += c == 0;
    CHECK(st.rep == zeros);
  }
  // all three parking-function columns are permutations of PF(3)
  std::set<std::vector<int>> col3, col4, col5;
  for (const auto& row : rows) {
    col3.insert(as_prefs(row.at("rep_pf").get<std::string>()));
    col4.insert(as_prefs(row.at("lel_pf").get<std::string>()));
    col5.insert(as_prefs(row.at("ones_pf").get<std::string>()));
  }
  CHECK(col3.size() == 16);
  CHECK(col4.size() == 16);
  CHECK(col5.size() == 16);
}

TEST_CASE("forest enumeration with marked roots") {
  long count = 0;
  for_each_forest(4, {0, 1}, [&](const Forest& f) {
    ++count;
    CHECK(f.parent[0] == -1);
    CHECK(f.parent[1] == -1);
  });
  CHECK(Int(count) == count_forests(4, 2));  // 2 * 4^1 = 8
  // every vertex a root: exactly one (empty) forest
  long trivial = 0;
  for_each_forest(3, {0, 1, 2}, [&](const Forest&) { ++trivial; });
  CHECK(trivial == 1);
  CHECK_THROWS(for_each_forest(3, {0, 0}, [](const Forest&) {}));
}

TEST_CASE("tree quad gf at small n") {
  // sum over the 3 trees on {0,1,2}: w + xyw + zw^2
  Polynomial got = tree_quad_gf(2);
  Polynomial want = Polynomial::variable(Var::w) +
                    Polynomial::variable(Var::x) * Polynomial::variable(Var::y) *
                        Polynomial::variable(Var::w) +
                    Polynomial::variable(Var::z) * Polynomial::variable(Var::w, 2);
  CHECK(got == want);
  CHECK(tree_quad_gf(0) == Polynomial::constant(1));
}
