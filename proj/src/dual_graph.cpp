#include "stc/dual_graph.hpp"

#include <queue>
#include <stdexcept>

namespace stc {

DualGraph::DualGraph(const PlaneGraph& g) {
  face_count_ = g.face_count();
  outer_face_ = g.outer_face();
  const int m = g.edge_count();
  side_a_.resize(m);
  side_b_.resize(m);
  adj_.resize(face_count_);
  for (int e = 0; e < m; ++e) {
    side_a_[e] = g.face_of(g.edge(e).dart_a);
    side_b_[e] = g.face_of(g.edge(e).dart_b);
    adj_[side_a_[e]].push_back({e, side_b_[e]});
    if (side_b_[e] != side_a_[e]) adj_[side_b_[e]].push_back({e, side_a_[e]});
  }

  // The dual of a connected plane graph is connected; a failure here means
  // the primal structure is corrupt.
  std::vector<char> reached(face_count_, 0);
  std::queue<int> q;
  q.push(0);
  reached[0] = 1;
  int count = 1;
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (auto [e, o] : adj_[f]) {
      if (!reached[o]) {
        reached[o] = 1;
        ++count;
        q.push(o);
      }
    }
  }
  if (count != face_count_)
    throw std::logic_error("dual graph of a connected plane graph must be connected");
}

}  // namespace stc
