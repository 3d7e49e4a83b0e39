#pragma once

// Test-only oracles. Everything here recomputes results from first
// principles (explicit 2-colorings, plain enumeration) and stays independent
// of the congestion and search implementations it checks.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <vector>

#include "stc/plane_graph.hpp"

namespace stc::testing {

// Cut size of tree edge e: color vertices by component of tree - e, count
// bichromatic graph edges (e itself included).
inline int cut_size_by_coloring(const PlaneGraph& g,
                                const std::vector<int>& tree, int e) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (int t : tree) {
    if (t == e) continue;
    adj[g.edge(t).u].push_back(g.edge(t).v);
    adj[g.edge(t).v].push_back(g.edge(t).u);
  }
  std::vector<char> side(g.vertex_count(), 0);
  std::queue<int> q;
  q.push(g.edge(e).u);
  side[g.edge(e).u] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!side[w]) {
        side[w] = 1;
        q.push(w);
      }
  }
  int cut = 0;
  for (int f = 0; f < g.edge_count(); ++f)
    if (side[g.edge(f).u] != side[g.edge(f).v]) ++cut;
  return cut;
}

inline std::map<int, int> congestion_by_coloring(const PlaneGraph& g,
                                                 const std::vector<int>& tree) {
  std::map<int, int> per_edge;
  for (int e : tree) per_edge[e] = cut_size_by_coloring(g, tree, e);
  return per_edge;
}

// Plain spanning tree enumeration: decide edges in id order, include branch
// first, pruning only on cycles, edge shortage, and lost connectivity.
template <typename Fn>
void for_each_spanning_tree(const PlaneGraph& g, Fn&& fn) {
  const int V = g.vertex_count(), E = g.edge_count();
  std::vector<int> chosen;

  struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
      while (p[x] != x) x = p[x] = p[p[x]];
      return x;
    }
  };

  auto connectable = [&](const Dsu& dsu, int next) {
    Dsu scratch = dsu;
    for (int j = next; j < E; ++j)
      if (!g.is_loop(j)) {
        int a = scratch.find(g.edge(j).u), b = scratch.find(g.edge(j).v);
        if (a != b) scratch.p[a] = b;
      }
    const int root = scratch.find(0);
    for (int v = 0; v < V; ++v)
      if (scratch.find(v) != root) return false;
    return true;
  };

  std::function<void(int, Dsu)> walk = [&](int i, Dsu dsu) {
    if (static_cast<int>(chosen.size()) == V - 1) {
      fn(chosen);
      return;
    }
    if (i == E) return;
    if (!g.is_loop(i)) {
      Dsu next = dsu;
      int a = next.find(g.edge(i).u), b = next.find(g.edge(i).v);
      if (a != b) {
        next.p[a] = b;
        chosen.push_back(i);
        walk(i + 1, std::move(next));
        chosen.pop_back();
      }
    }
    if (connectable(dsu, i + 1)) walk(i + 1, dsu);
  };
  walk(0, Dsu(V));
}

// Exact minimum congestion and its lexicographically smallest witness, by
// full enumeration with the coloring oracle.
inline std::pair<int, std::vector<int>> min_congestion_by_enumeration(
    const PlaneGraph& g) {
  int best = -1;
  std::vector<int> witness;
  for_each_spanning_tree(g, [&](const std::vector<int>& tree) {
    int ec = 1;
    for (int e : tree) ec = std::max(ec, cut_size_by_coloring(g, tree, e));
    if (best < 0 || ec < best) {
      best = ec;
      witness = tree;
    }
  });
  return {best, witness};
}

}  // namespace stc::testing
