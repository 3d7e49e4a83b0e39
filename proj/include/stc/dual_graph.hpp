#pragma once

#include <vector>

#include "stc/plane_graph.hpp"

namespace stc {

/// Graph on the faces of a plane graph. Dual edge i corresponds to primal
/// edge i (the bijection is identity on ids); it joins the faces on the two
/// sides of the primal edge, so a primal bridge becomes a dual loop. The
/// dual of a connected plane graph is connected, and is generally a
/// multigraph even when the primal is simple.
class DualGraph {
 public:
  explicit DualGraph(const PlaneGraph& g);

  int face_count() const { return face_count_; }
  int edge_count() const { return static_cast<int>(side_a_.size()); }
  int outer_face() const { return outer_face_; }

  int face_a(int e) const { return side_a_[e]; }
  int face_b(int e) const { return side_b_[e]; }
  bool is_loop(int e) const { return side_a_[e] == side_b_[e]; }
  int other_face(int e, int f) const {
    return side_a_[e] == f ? side_b_[e] : side_a_[e];
  }

  /// Identity bijection with the primal edge set, spelled out.
  int dual_of(int primal_edge) const { return primal_edge; }
  int primal_of(int dual_edge) const { return dual_edge; }

  /// Incidences of face f as (dual edge, neighbor face), sorted by edge id.
  /// A dual loop at f appears once.
  const std::vector<std::pair<int, int>>& incident(int f) const {
    return adj_[f];
  }

 private:
  int face_count_ = 0;
  int outer_face_ = -1;
  std::vector<int> side_a_, side_b_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

inline DualGraph dual(const PlaneGraph& g) { return DualGraph(g); }

}  // namespace stc
