#include "stc/congestion.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace stc {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// The tree must have been validated against this graph's dimensions.
void require_tree_of(const PlaneGraph& g, const SpanningTree& t) {
  if (static_cast<int>(t.edge_ids().size()) != g.vertex_count() - 1 ||
      (!t.edge_ids().empty() && t.edge_ids().back() >= g.edge_count()))
    throw NotSpanningTree("tree does not belong to this graph");
}

CongestionReport finish_report(std::map<int, int> per_edge) {
  CongestionReport r;
  r.per_edge = std::move(per_edge);
  for (const auto& [e, c] : r.per_edge) {
    if (c > r.max_congestion) {
      r.max_congestion = c;
      r.argmax_edge = e;
    }
  }
  return r;
}

}  // namespace

SpanningTree SpanningTree::make(const PlaneGraph& g, std::vector<int> edge_ids,
                                int root) {
  const int n = g.vertex_count();
  std::sort(edge_ids.begin(), edge_ids.end());
  if (std::adjacent_find(edge_ids.begin(), edge_ids.end()) != edge_ids.end())
    throw WrongCardinality("edge listed twice");
  if (static_cast<int>(edge_ids.size()) != n - 1)
    throw WrongCardinality("spanning tree needs exactly V-1 edges, got " +
                           std::to_string(edge_ids.size()));
  Dsu dsu(n);
  for (int e : edge_ids) {
    if (e < 0 || e >= g.edge_count())
      throw WrongCardinality("unknown edge id " + std::to_string(e));
    if (g.is_loop(e)) throw ContainsCycle("loop edge in tree");
    if (!dsu.unite(g.edge(e).u, g.edge(e).v))
      throw ContainsCycle("edge set contains a cycle");
  }
  for (int v = 0; v < n; ++v)
    if (dsu.find(v) != dsu.find(root))
      throw NotSpanning("edge set does not span all vertices");

  SpanningTree t;
  t.root_ = root;
  t.in_tree_.assign(g.edge_count(), 0);
  for (int e : edge_ids) t.in_tree_[e] = 1;

  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (edge, other)
  for (int e : edge_ids) {
    adj[g.edge(e).u].push_back({e, g.edge(e).v});
    adj[g.edge(e).v].push_back({e, g.edge(e).u});
  }
  t.parent_vertex_.assign(n, -1);
  t.parent_edge_.assign(n, -1);
  t.depth_.assign(n, 0);
  std::queue<int> q;
  q.push(root);
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (auto [e, w] : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      t.parent_vertex_[w] = v;
      t.parent_edge_[w] = e;
      t.depth_[w] = t.depth_[v] + 1;
      q.push(w);
    }
  }
  t.edge_ids_ = std::move(edge_ids);
  return t;
}

SpanningTree verify_tree(const PlaneGraph& g, std::vector<int> edge_ids) {
  return SpanningTree::make(g, std::move(edge_ids));
}

DualTree dual_tree(const PlaneGraph& g, const SpanningTree& t) {
  require_tree_of(g, t);
  DualTree dt;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!t.contains(e)) dt.edge_ids.push_back(e);

  // Complementation gives a spanning tree of the dual for every connected
  // plane graph; verify edge count and acyclicity anyway.
  const DualGraph d(g);
  if (static_cast<int>(dt.edge_ids.size()) != d.face_count() - 1)
    throw std::logic_error("dual complement has wrong cardinality");
  Dsu dsu(d.face_count());
  for (int e : dt.edge_ids)
    if (!dsu.unite(d.face_a(e), d.face_b(e)))
      throw std::logic_error("dual complement contains a cycle");
  return dt;
}

CongestionReport edge_congestion_cuts(const PlaneGraph& g,
                                      const SpanningTree& t) {
  require_tree_of(g, t);
  std::vector<int> crossings(g.edge_count(), 0);
  for (int f = 0; f < g.edge_count(); ++f) {
    if (t.contains(f) || g.is_loop(f)) continue;
    int u = g.edge(f).u, v = g.edge(f).v;
    while (u != v) {
      if (t.depth(u) < t.depth(v)) std::swap(u, v);
      ++crossings[t.parent_edge(u)];
      u = t.parent_vertex(u);
    }
  }
  std::map<int, int> per_edge;
  for (int e : t.edge_ids()) per_edge[e] = crossings[e] + 1;
  return finish_report(std::move(per_edge));
}

CongestionReport edge_congestion_dual(const PlaneGraph& g,
                                      const SpanningTree& t) {
  require_tree_of(g, t);
  const DualGraph d(g);
  const DualTree dt = dual_tree(g, t);

  std::vector<std::vector<std::pair<int, int>>> adj(d.face_count());
  for (int e : dt.edge_ids) {
    adj[d.face_a(e)].push_back({e, d.face_b(e)});
    adj[d.face_b(e)].push_back({e, d.face_a(e)});
  }
  std::vector<int> parent(d.face_count(), -1), depth(d.face_count(), 0);
  std::vector<char> seen(d.face_count(), 0);
  std::queue<int> q;
  q.push(d.outer_face());
  seen[d.outer_face()] = 1;
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (auto [e, o] : adj[f]) {
      if (seen[o]) continue;
      seen[o] = 1;
      parent[o] = f;
      depth[o] = depth[f] + 1;
      q.push(o);
    }
  }

  // Congestion of tree edge f = length of the cycle in dual_tree + f*,
  // which is the dual-tree distance between the two sides of f, plus one.
  // A bridge has both sides equal: the loop f* gives congestion 1.
  std::map<int, int> per_edge;
  for (int e : t.edge_ids()) {
    int a = d.face_a(e), b = d.face_b(e);
    int len = 1;
    while (a != b) {
      if (depth[a] < depth[b]) std::swap(a, b);
      a = parent[a];
      ++len;
    }
    per_edge[e] = len;
  }
  return finish_report(std::move(per_edge));
}

BranchDecomposition branch_decomposition(const PlaneGraph& g,
                                         const SpanningTree& t) {
  require_tree_of(g, t);
  const DualGraph d(g);
  const DualTree dt = dual_tree(g, t);
  const int O = d.outer_face();

  std::vector<std::vector<std::pair<int, int>>> adj(d.face_count());
  for (int e : dt.edge_ids) {
    adj[d.face_a(e)].push_back({e, d.face_b(e)});
    adj[d.face_b(e)].push_back({e, d.face_a(e)});
  }

  BranchDecomposition bd;
  bd.entrance_of_face.assign(d.face_count(), -1);
  // Walk the dual tree from O; the branch of a face is inherited from its
  // parent, except that children of O open their own branch through the
  // connecting dual edge (always the dual of an outer edge).
  std::vector<char> seen(d.face_count(), 0);
  std::queue<int> q;
  q.push(O);
  seen[O] = 1;
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (auto [e, o] : adj[f]) {
      if (seen[o]) continue;
      seen[o] = 1;
      bd.entrance_of_face[o] = (f == O) ? e : bd.entrance_of_face[f];
      q.push(o);
    }
  }

  for (int e : outer_edges(g))
    bd.branches[e];  // empty branch unless faces arrive below
  for (int f = 0; f < d.face_count(); ++f) {
    if (f == O) continue;
    const int entrance = bd.entrance_of_face[f];
    if (entrance < 0)
      throw std::logic_error("interior face not assigned to a branch");
    bd.branches[entrance].push_back(f);
  }
  for (auto& [e, faces] : bd.branches) std::sort(faces.begin(), faces.end());
  return bd;
}

}  // namespace stc
