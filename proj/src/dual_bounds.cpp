#include "stc/dual_bounds.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace stc {

namespace {

int interior_side(const PlaneGraph& g, int e) {
  const int fa = g.face_of(g.edge(e).dart_a);
  const int fb = g.face_of(g.edge(e).dart_b);
  if ((fa == g.outer_face()) == (fb == g.outer_face()))
    throw NotOuterEdge("edge " + std::to_string(e) + " is not an outer edge");
  return fa == g.outer_face() ? fb : fa;
}

// Saturating sum of possibly-unreachable index values.
int idx_sum(int a, int b) {
  if (a >= kUnreachable || b >= kUnreachable) return kUnreachable;
  return a + b;
}

}  // namespace

IndexTable index_table(const PlaneGraph& g, int edge_id) {
  if (edge_id < 0 || edge_id >= g.edge_count())
    throw NotOuterEdge("unknown edge id " + std::to_string(edge_id));
  const DualGraph d(g);
  const int start = interior_side(g, edge_id);

  IndexTable t;
  t.edge = edge_id;
  t.value.assign(d.face_count(), kUnreachable);
  // Simple paths starting at O cannot come back to it, so i(.,e) is a BFS
  // from F_e in the dual with O removed, shifted by the first step.
  std::queue<int> q;
  t.value[start] = 1;
  q.push(start);
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (auto [e, o] : d.incident(f)) {
      if (o == d.outer_face() || t.value[o] < kUnreachable) continue;
      t.value[o] = t.value[f] + 1;
      q.push(o);
    }
  }
  t.value[d.outer_face()] = kUnreachable;
  return t;
}

AbsoluteIndexTable absolute_index(const PlaneGraph& g) {
  const std::vector<int> outer = outer_edges(g);
  if (outer.empty()) throw NoOuterEdges("graph has no outer edges");

  AbsoluteIndexTable abs;
  abs.value.assign(g.face_count(), kUnreachable);
  for (int e : outer) {
    const IndexTable t = index_table(g, e);
    for (int f = 0; f < g.face_count(); ++f)
      abs.value[f] = std::min(abs.value[f], t.value[f]);
  }
  abs.value[g.outer_face()] = 0;

  // Cross-check: the minimum over outer edges must be the plain dual
  // distance from O.
  const DualGraph d(g);
  std::vector<int> dist(d.face_count(), -1);
  std::queue<int> q;
  dist[d.outer_face()] = 0;
  q.push(d.outer_face());
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (auto [e, o] : d.incident(f)) {
      if (dist[o] >= 0) continue;
      dist[o] = dist[f] + 1;
      q.push(o);
    }
  }
  for (int f = 0; f < g.face_count(); ++f)
    if (abs.value[f] != dist[f])
      throw std::logic_error("absolute index disagrees with dual distance");
  return abs;
}

const CenterTailSystem& validate_cts(const PlaneGraph& g,
                                     const CenterTailSystem& s) {
  const DualGraph d(g);
  const int O = d.outer_face();

  if (s.center.empty()) throw CenterDisconnected("center is empty");
  std::set<int> center;
  for (int f : s.center) {
    if (f < 0 || f >= d.face_count())
      throw CenterDisconnected("center names unknown face " +
                               std::to_string(f));
    if (f == O) throw CenterDisconnected("center contains the outer face");
    if (!center.insert(f).second)
      throw CenterDisconnected("center face listed twice");
  }
  // Connectivity of the induced dual subgraph.
  {
    std::queue<int> q;
    std::set<int> reached;
    q.push(*center.begin());
    reached.insert(*center.begin());
    while (!q.empty()) {
      int f = q.front();
      q.pop();
      for (auto [e, o] : d.incident(f))
        if (center.count(o) && reached.insert(o).second) q.push(o);
    }
    if (reached.size() != center.size())
      throw CenterDisconnected("center does not span a connected subgraph");
  }

  for (std::size_t i = 0; i < s.tails.size(); ++i) {
    const auto& tail = s.tails[i];
    const std::string label = "tail " + std::to_string(i);
    if (tail.size() < 2) throw TailNotPath(label + " is too short");
    for (int f : tail)
      if (f < 0 || f >= d.face_count())
        throw TailNotPath(label + " names unknown face " + std::to_string(f));
    if (!center.count(tail.front()))
      throw TailNotPath(label + " does not start at a center face");
    if (tail.back() != O)
      throw TailNotReachingO(label + " does not end at the outer face");
    std::set<int> seen;
    for (std::size_t j = 0; j + 1 < tail.size(); ++j) {
      if (tail[j] == O) throw TailNotPath(label + " passes through the outer face");
      if (!seen.insert(tail[j]).second)
        throw TailNotPath(label + " repeats a face");
      bool adjacent = false;
      for (auto [e, o] : d.incident(tail[j]))
        if (o == tail[j + 1]) adjacent = true;
      if (!adjacent)
        throw TailNotPath(label + " has non-adjacent consecutive faces");
    }
  }

  const std::vector<int> outer = outer_edges(g);
  std::set<int> outer_set(outer.begin(), outer.end());
  for (const auto& [e, ti] : s.assignment) {
    if (!outer_set.count(e))
      throw AssignmentIncomplete("assignment names non-outer edge " +
                                 std::to_string(e));
    if (ti < 0 || ti >= static_cast<int>(s.tails.size()))
      throw AssignmentIncomplete("assignment of edge " + std::to_string(e) +
                                 " names unknown tail");
  }
  for (int e : outer)
    if (!s.assignment.count(e))
      throw AssignmentIncomplete("outer edge " + std::to_string(e) +
                                 " has no opposite tail");
  return s;
}

CongestionIndicator congestion_indicator(const PlaneGraph& g,
                                         const CenterTailSystem& s) {
  validate_cts(g, s);
  const DualGraph d(g);
  const std::vector<int> outer = outer_edges(g);

  std::map<int, IndexTable> tables;
  for (int e : outer) tables.emplace(e, index_table(g, e));

  // Per face: the two smallest i(F,.) values over outer edges with distinct
  // arg edges, so min over e~ != e is O(1).
  const int F = g.face_count();
  std::vector<int> best1(F, kUnreachable), best1_edge(F, -1);
  std::vector<int> best2(F, kUnreachable), best2_edge(F, -1);
  for (int e : outer) {
    const auto& val = tables.at(e).value;
    for (int f = 0; f < F; ++f) {
      if (val[f] < best1[f]) {
        best2[f] = best1[f];
        best2_edge[f] = best1_edge[f];
        best1[f] = val[f];
        best1_edge[f] = e;
      } else if (val[f] < best2[f]) {
        best2[f] = val[f];
        best2_edge[f] = e;
      }
    }
  }
  auto min_excluding = [&](int f, int banned) -> std::pair<int, int> {
    if (best1_edge[f] != banned) return {best1[f], best1_edge[f]};
    return {best2[f], best2_edge[f]};
  };

  CongestionIndicator ci;

  // Minimum (1): adjacent center pairs, outer edges f != h.
  {
    int best = kUnreachable;
    CongestionIndicator::Witness w;
    if (s.center.size() >= 2) {
      std::set<int> center(s.center.begin(), s.center.end());
      for (int cf : s.center) {
        for (auto [e, o] : d.incident(cf)) {
          if (!center.count(o) || o == cf) continue;
          // Unordered pair handled twice; harmless for a minimum.
          for (int f_edge : outer) {
            const int a = tables.at(f_edge).value[cf];
            if (a >= kUnreachable) continue;
            auto [b, h_edge] = min_excluding(o, f_edge);
            const int sum = idx_sum(a, b);
            if (sum < best) {
              best = sum;
              w = {cf, o, f_edge, h_edge};
            }
          }
        }
      }
    }
    if (best < kUnreachable) {
      ci.min1 = best + 1;
      if (!ci.value || *ci.min1 < *ci.value) {
        ci.value = ci.min1;
        ci.which = 1;
        ci.witness = w;
      }
    }
  }

  // Minimum (2): i(t(e), e) + 1 over outer edges.
  {
    int best = kUnreachable;
    CongestionIndicator::Witness w;
    for (int e : outer) {
      const auto& tail = s.tails[s.assignment.at(e)];
      const int tip = tail[tail.size() - 2];
      const int v = tables.at(e).value[tip];
      if (v < best) {
        best = v;
        w = {tip, -1, e, -1};
      }
    }
    if (best < kUnreachable) {
      ci.min2 = best + 1;
      if (!ci.value || *ci.min2 < *ci.value) {
        ci.value = ci.min2;
        ci.which = 2;
        ci.witness = w;
      }
    }
  }

  // Minimum (3): consecutive faces along the opposite tail, walked from the
  // center end toward the tip; the follower is charged to the cheapest
  // other outer edge.
  {
    int best = kUnreachable;
    CongestionIndicator::Witness w;
    for (int e : outer) {
      const auto& tail = s.tails[s.assignment.at(e)];
      const auto& val = tables.at(e).value;
      for (std::size_t j = 0; j + 2 < tail.size(); ++j) {
        const int cur = tail[j], follower = tail[j + 1];
        if (val[cur] >= kUnreachable) continue;
        auto [b, alt_edge] = min_excluding(follower, e);
        const int sum = idx_sum(val[cur], b);
        if (sum < best) {
          best = sum;
          w = {cur, follower, e, alt_edge};
        }
      }
    }
    if (best < kUnreachable) {
      ci.min3 = best + 1;
      if (!ci.value || *ci.min3 < *ci.value) {
        ci.value = ci.min3;
        ci.which = 3;
        ci.witness = w;
      }
    }
  }

  return ci;
}

BfsDualBound bfs_upper_bound(const PlaneGraph& g) {
  const DualGraph d(g);
  const int O = d.outer_face();

  // Level-by-level BFS keeps the parent choice pinned: faces are scanned in
  // ascending id within a level, and incidences are already edge-sorted.
  std::vector<int> dist(d.face_count(), -1);
  std::vector<int> parent_edge(d.face_count(), -1);
  std::vector<int> level{O};
  dist[O] = 0;
  int reached = 1;
  while (!level.empty()) {
    std::vector<int> next;
    for (int f : level) {
      for (auto [e, o] : d.incident(f)) {
        if (dist[o] >= 0) continue;
        dist[o] = dist[f] + 1;
        parent_edge[o] = e;
        next.push_back(o);
        ++reached;
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
  }
  if (reached != d.face_count())
    throw std::logic_error("dual BFS did not reach every face");

  std::vector<char> in_dual_tree(g.edge_count(), 0);
  DualTree dt;
  for (int f = 0; f < d.face_count(); ++f)
    if (parent_edge[f] >= 0) {
      in_dual_tree[parent_edge[f]] = 1;
      dt.edge_ids.push_back(parent_edge[f]);
    }
  std::sort(dt.edge_ids.begin(), dt.edge_ids.end());

  std::vector<int> tree_edges;
  for (int e = 0; e < g.edge_count(); ++e)
    if (!in_dual_tree[e]) tree_edges.push_back(e);

  BfsDualBound result{SpanningTree::make(g, std::move(tree_edges)), std::move(dt),
                      {}, 0};
  result.report = edge_congestion_cuts(g, result.tree);

  // dist[] is exactly the absolute index; the outer face counts as 1 in
  // the pair bound.
  auto term = [&](int f) { return f == O ? 1 : dist[f]; };
  int bound = 0;
  for (const FaceAdjacency& fa : face_adjacency(g))
    bound = std::max(bound, term(fa.face_a) + term(fa.face_b) + 1);
  result.bound = bound;

  if (result.report.max_congestion > result.bound)
    throw std::logic_error("BFS-complement congestion exceeds the index bound");
  return result;
}

std::optional<int> best_lower_bound(const PlaneGraph& g,
                                    std::span<const CenterTailSystem> systems) {
  if (systems.empty()) throw EmptySystemList("no center-tail systems given");
  std::optional<int> best;
  for (const CenterTailSystem& s : systems) {
    const CongestionIndicator ci = congestion_indicator(g, s);
    if (!ci.value) return std::nullopt;  // infinite indicator dominates a max
    if (!best || *ci.value > *best) best = ci.value;
  }
  return best;
}

}  // namespace stc
