#include "parkfn/trees.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pf {

std::vector<std::vector<int>> RootedTree::children() const {
  std::vector<std::vector<int>> ch(parent.size());
  for (int v = 1; v <= n(); ++v) ch[parent[v]].push_back(v);
  return ch;  // already sorted: v ascending
}

TreeStats tree_stats(const RootedTree& t) {
  const int n = t.n();
  TreeStats s;
  auto ch = t.children();
  s.deg0 = static_cast<int>(ch[0].size());
  for (int v = 0; v <= n; ++v)
    if (ch[v].empty()) ++s.lev;  // a childless root is counted too

  // subtree minima bottom-up (children have larger post-order; iterate by
  // repeated relaxation since n is small)
  std::vector<int> mini(n + 1);
  for (int v = 0; v <= n; ++v) mini[v] = v;
  // push each vertex's label up its ancestor chain
  for (int v = 1; v <= n; ++v) {
    int a = t.parent[v];
    while (a != -1) {
      mini[a] = std::min(mini[a], v);
      if (a == 0) break;
      a = t.parent[a];
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (mini[v] == v)
      ++s.ldr;
    else
      ++s.nld;
    if (t.parent[v] > v) ++s.edes;
    // inversions: proper ancestors j > v
    for (int a = t.parent[v]; a > 0; a = t.parent[a])
      if (a > v) ++s.inv;
  }
  return s;
}

int tree_stat_value(const TreeStats& s, TreeStat st) {
  switch (st) {
    case TreeStat::inv: return s.inv;
    case TreeStat::nld: return s.nld;
    case TreeStat::ldr: return s.ldr;
    case TreeStat::lev: return s.lev;
    case TreeStat::deg0: return s.deg0;
    case TreeStat::edes: return s.edes;
  }
  throw std::logic_error("tree_stat_value: bad stat");
}

std::optional<TreeStat> tree_stat_from_name(std::string_view name) {
  if (name == "inv") return TreeStat::inv;
  if (name == "nld") return TreeStat::nld;
  if (name == "ldr") return TreeStat::ldr;
  if (name == "lev") return TreeStat::lev;
  if (name == "deg0") return TreeStat::deg0;
  if (name == "edes") return TreeStat::edes;
  return std::nullopt;
}

PruferCode prufer_encode(const RootedTree& t) {
  const int n = t.n();
  if (n < 1) return {};
  std::vector<std::set<int>> adj(n + 1);
  for (int v = 1; v <= n; ++v) {
    adj[v].insert(t.parent[v]);
    adj[t.parent[v]].insert(v);
  }
  std::set<int> leaves;
  for (int v = 0; v <= n; ++v)
    if (adj[v].size() == 1) leaves.insert(v);
  PruferCode code;
  code.reserve(n - 1);
  int remaining = n + 1;
  while (remaining > 2) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    int nb = *adj[leaf].begin();
    code.push_back(nb);
    adj[leaf].clear();
    adj[nb].erase(leaf);
    if (adj[nb].size() == 1) leaves.insert(nb);
    --remaining;
  }
  return code;
}

RootedTree prufer_decode(const PruferCode& code) {
  const int n = static_cast<int>(code.size()) + 1;
  std::vector<int> degree(n + 1, 1);
  for (int c : code) {
    if (c < 0 || c > n) throw std::invalid_argument("prufer_decode: label out of range");
    ++degree[c];
  }
  std::set<int> leaves;
  for (int v = 0; v <= n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<std::vector<int>> adj(n + 1);
  for (int c : code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    adj[leaf].push_back(c);
    adj[c].push_back(leaf);
    if (--degree[c] == 1) leaves.insert(c);
  }
  auto it = leaves.begin();
  int a = *it++;
  int b = *it;
  adj[a].push_back(b);
  adj[b].push_back(a);

  RootedTree t;
  t.parent.assign(n + 1, -1);
  // orient away from the root
  std::vector<int> stack = {0};
  std::vector<char> seen(n + 1, 0);
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v]) {
      if (seen[u]) continue;
      seen[u] = 1;
      t.parent[u] = v;
      stack.push_back(u);
    }
  }
  for (int v = 1; v <= n; ++v)
    if (!seen[v]) throw std::invalid_argument("prufer_decode: disconnected code");
  return t;
}

PrefVector prufer_to_pf_circular(const PruferCode& code) {
  const int n = static_cast<int>(code.size()) + 1;
  std::vector<int> spots(n);
  spots[0] = n + 1;  // the prepended 0 stands for spot n+1
  for (int i = 1; i < n; ++i) spots[i] = code[i - 1] == 0 ? n + 1 : code[i - 1];
  for (int j = 0; j <= n; ++j) {
    PrefVector v;
    v.spots = n;
    v.prefs.resize(n);
    bool in_range = true;
    for (int i = 0; i < n; ++i) {
      v.prefs[i] = (spots[i] - 1 + j) % (n + 1) + 1;
      if (v.prefs[i] > n) in_range = false;
    }
    if (in_range && is_parking_function(v)) return v;
  }
  throw std::logic_error("prufer_to_pf_circular: no rotation parked");  // unreachable
}

PrefVector tree_to_pf_bfs(const RootedTree& t) {
  const int n = t.n();
  auto ch = t.children();
  std::vector<int> rank(n + 1, 0);
  std::vector<int> queue = {0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    rank[v] = static_cast<int>(head);
    for (int c : ch[v]) queue.push_back(c);
  }
  PrefVector v;
  v.spots = n;
  v.prefs.resize(n);
  for (int i = 1; i <= n; ++i) v.prefs[i - 1] = rank[t.parent[i]] + 1;
  return v;
}

void for_each_tree(int n, const std::function<void(const RootedTree&)>& fn) {
  if (n < 0) throw std::invalid_argument("for_each_tree: n < 0");
  if (n == 0) {
    RootedTree t;
    t.parent = {-1};
    fn(t);
    return;
  }
  PruferCode code(n - 1, 0);
  while (true) {
    fn(prufer_decode(code));
    int i = static_cast<int>(code.size()) - 1;
    while (i >= 0 && code[i] == n) code[i--] = 0;
    if (i < 0) break;
    ++code[i];
  }
}

Int count_trees(int n) {
  if (n <= 1) return Int(1);
  return int_pow(n + 1, static_cast<unsigned long>(n - 1));
}

Polynomial tree_gf(int n, const std::vector<std::pair<Var, TreeStat>>& weights) {
  Polynomial total;
  for_each_tree(n, [&](const RootedTree& t) {
    TreeStats s = tree_stats(t);
    ExpVec e = kZeroExp;
    for (const auto& [var, st] : weights)
      e[static_cast<int>(var)] += tree_stat_value(s, st);
    total.add_term(e, Rat(1));
  });
  return total;
}

Polynomial tree_quad_gf(int n) {
  Polynomial total;
  for_each_tree(n, [&](const RootedTree& t) {
    TreeStats s = tree_stats(t);
    ExpVec e = kZeroExp;
    e[static_cast<int>(Var::x)] = s.nld;
    e[static_cast<int>(Var::y)] = s.inv;
    e[static_cast<int>(Var::z)] = s.lev - 1;
    e[static_cast<int>(Var::w)] = s.deg0;
    total.add_term(e, Rat(1));
  });
  return total;
}

namespace {

// parent[] with -1 at roots describes a forest iff every vertex reaches a
// root without revisiting.
bool reaches_roots(const std::vector<int>& parent) {
  const int n = static_cast<int>(parent.size());
  std::vector<int> state(n, 0);  // 0 unknown, 1 on path, 2 ok
  for (int v = 0; v < n; ++v) {
    int u = v;
    std::vector<int> path;
    while (u != -1 && state[u] == 0) {
      state[u] = 1;
      path.push_back(u);
      u = parent[u];
    }
    bool ok = (u == -1) || state[u] == 2;
    for (int w : path) state[w] = ok ? 2 : 3;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

void for_each_forest(int num_vertices, const std::vector<int>& roots,
                     const std::function<void(const Forest&)>& fn) {
  std::vector<char> is_root(num_vertices, 0);
  for (int r : roots) {
    if (r < 0 || r >= num_vertices || is_root[r])
      throw std::invalid_argument("for_each_forest: bad root set");
    is_root[r] = 1;
  }
  std::vector<int> free_vertices;
  for (int v = 0; v < num_vertices; ++v)
    if (!is_root[v]) free_vertices.push_back(v);

  Forest f;
  f.roots = roots;
  f.parent.assign(num_vertices, -1);
  const int k = static_cast<int>(free_vertices.size());
  std::vector<int> choice(k, 0);
  while (true) {
    for (int i = 0; i < k; ++i) f.parent[free_vertices[i]] = choice[i];
    if (reaches_roots(f.parent)) fn(f);
    int i = k - 1;
    while (i >= 0 && choice[i] == num_vertices - 1) choice[i--] = 0;
    if (i < 0) break;
    ++choice[i];
    if (k == 0) break;
  }
}

Int count_forests(int num_vertices, int num_roots) {
  if (num_roots == num_vertices) return Int(1);
  return Int(num_roots) *
         int_pow(num_vertices, static_cast<unsigned long>(num_vertices - num_roots - 1));
}

}  // namespace pf
