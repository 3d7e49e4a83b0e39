#pragma once

#include <map>
#include <vector>

#include "stc/dual_graph.hpp"
#include "stc/plane_graph.hpp"

namespace stc {

/// Validated spanning tree of a plane graph: V-1 edges, acyclic, spanning.
/// Carries a parent structure rooted at `root` (vertex 0 unless a caller
/// asks otherwise; congestion results are root-independent).
class SpanningTree {
 public:
  static SpanningTree make(const PlaneGraph& g, std::vector<int> edge_ids,
                           int root = 0);

  const std::vector<int>& edge_ids() const { return edge_ids_; }  // sorted
  bool contains(int e) const { return in_tree_[e]; }
  int root() const { return root_; }
  int parent_vertex(int v) const { return parent_vertex_[v]; }
  int parent_edge(int v) const { return parent_edge_[v]; }
  int depth(int v) const { return depth_[v]; }

 private:
  std::vector<int> edge_ids_;
  std::vector<char> in_tree_;
  int root_ = 0;
  std::vector<int> parent_vertex_, parent_edge_, depth_;
};

/// Accepts edge_ids as a spanning tree of g or throws WrongCardinality /
/// ContainsCycle / NotSpanning.
SpanningTree verify_tree(const PlaneGraph& g, std::vector<int> edge_ids);

/// Spanning tree of the dual: e* is a dual-tree edge iff e is not a tree
/// edge. Stored as primal edge ids (== dual edge ids).
struct DualTree {
  std::vector<int> edge_ids;  // sorted
};

DualTree dual_tree(const PlaneGraph& g, const SpanningTree& t);

/// Per-tree-edge cut sizes and their maximum ec(G:T). argmax_edge is the
/// smallest tree edge attaining the maximum; for the degenerate single
/// vertex graph max_congestion is 0.
struct CongestionReport {
  std::map<int, int> per_edge;
  int max_congestion = 0;
  int argmax_edge = -1;
};

/// Cut-counting route: congestion of tree edge e is one plus the number of
/// non-tree edges whose tree path crosses e (counted by walking each
/// fundamental cycle).
CongestionReport edge_congestion_cuts(const PlaneGraph& g,
                                      const SpanningTree& t);

/// Dual route: congestion of tree edge f is the length of the unique cycle
/// in dual_tree + f*. Must agree with edge_congestion_cuts exactly.
CongestionReport edge_congestion_dual(const PlaneGraph& g,
                                      const SpanningTree& t);

/// Split of the interior faces into branches, one per outer edge whose dual
/// lies in the dual tree: the branch of outer edge e holds the faces that
/// deleting e* from the dual tree separates from the outer face, and e is
/// the branch's entrance. Outer edges in the tree itself get empty
/// branches.
struct BranchDecomposition {
  std::map<int, std::vector<int>> branches;  // entrance edge -> faces, sorted
  std::vector<int> entrance_of_face;         // by face id; -1 for outer face
};

BranchDecomposition branch_decomposition(const PlaneGraph& g,
                                         const SpanningTree& t);

}  // namespace stc
