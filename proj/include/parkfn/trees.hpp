#pragma once

#include "parkfn/parking.hpp"
#include "parkfn/polynomial.hpp"

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace pf {

// Labelled tree on vertices {0,...,n} rooted at 0. parent[v] is v's parent
// for v >= 1; parent[0] = -1.
struct RootedTree {
  std::vector<int> parent;
  int n() const { return static_cast<int>(parent.size()) - 1; }
  std::vector<std::vector<int>> children() const;  // sorted by label
};

struct TreeStats {
  int inv = 0;   // pairs i<j with j a proper ancestor of i
  int nld = 0;   // non-leaders (root excluded)
  int ldr = 0;   // leaders: v = min of its own subtree (root excluded)
  int lev = 0;   // leaves; a childless root counts
  int deg0 = 0;  // children of the root
  int edes = 0;  // edges whose endpoint nearer the root is larger
};

TreeStats tree_stats(const RootedTree& t);

enum class TreeStat { inv, nld, ldr, lev, deg0, edes };
int tree_stat_value(const TreeStats& s, TreeStat st);
std::optional<TreeStat> tree_stat_from_name(std::string_view name);

// Standard Prüfer code on labels {0..n}: repeatedly remove the
// smallest-labelled leaf, recording its neighbour, until two vertices
// remain. Length n-1 for n >= 1; mutually inverse with prufer_decode.
using PruferCode = std::vector<int>;
PruferCode prufer_encode(const RootedTree& t);
RootedTree prufer_decode(const PruferCode& code);  // n = code.size() + 1

// Circle construction: prepend 0 to the code, read values as spots on a
// circle of n+1 (0 standing for spot n+1); exactly one rotation is a
// parking function.
PrefVector prufer_to_pf_circular(const PruferCode& code);

// Breadth-first construction: children visited in increasing label order;
// car i prefers 1 + BFS rank of parent(i), root rank 0.
PrefVector tree_to_pf_bfs(const RootedTree& t);

// All (n+1)^{n-1} rooted trees on {0..n}, via Prüfer codes.
void for_each_tree(int n, const std::function<void(const RootedTree&)>& fn);
Int count_trees(int n);

// Sum over all trees on {0..n} of prod var^stat.
Polynomial tree_gf(int n, const std::vector<std::pair<Var, TreeStat>>& weights);
// x^nld y^inv z^(lev-1) w^deg0 — the tree side of the four-variable identity.
Polynomial tree_quad_gf(int n);

// Forest on vertices {0..num_vertices-1} whose components each contain
// exactly one marked root. parent[v] = -1 iff v is a root.
struct Forest {
  std::vector<int> parent;
  std::vector<int> roots;
};

void for_each_forest(int num_vertices, const std::vector<int>& roots,
                     const std::function<void(const Forest&)>& fn);
Int count_forests(int num_vertices, int num_roots);  // k n^{n-k-1}

}  // namespace pf
