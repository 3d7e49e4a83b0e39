#pragma once

// Small handmade embeddings used across the unit tests.

#include <cmath>
#include <utility>
#include <vector>

#include "stc/embed.hpp"
#include "stc/plane_graph.hpp"

namespace stc::testing {

// Triangle with vertex 0 bottom-left, 1 bottom-right, 2 top; interior face
// traces first (face 0), outer is face 1.
inline PlaneGraph make_k3() {
  return PlaneGraph::build(3, {{0, 5}, {2, 1}, {4, 3}},
                           {{0, 1, 0, 1}, {2, 3, 1, 2}, {4, 5, 2, 0}}, 1);
}

// Path 0-1-2: a tree, single (outer) face of walk length 4.
inline PlaneGraph make_p3() {
  return PlaneGraph::build(3, {{0}, {1, 2}, {3}},
                           {{0, 1, 0, 1}, {2, 3, 1, 2}}, 0);
}

// One vertex with one loop: two faces.
inline PlaneGraph make_loop() {
  return PlaneGraph::build(1, {{0, 1}}, {{0, 1, 0, 0}}, 1);
}

// Two vertices joined by three parallel edges: three faces.
inline PlaneGraph make_theta() {
  return PlaneGraph::build(2, {{0, 2, 4}, {5, 3, 1}},
                           {{0, 1, 0, 1}, {2, 3, 0, 1}, {4, 5, 0, 1}}, 3);
}

inline PlaneGraph make_cycle(int n) {
  std::vector<Vec2> pos(n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * 3.141592653589793 * i / n;
    pos[i] = {std::cos(a), std::sin(a)};
    edges.push_back({i, (i + 1) % n});
  }
  return embed_straight_line(pos, edges);
}

// Two triangles sharing vertex 2 (a cut vertex): the dual minus the outer
// face is disconnected.
inline PlaneGraph make_bowtie() {
  std::vector<Vec2> pos{{-2, -1}, {-2, 1}, {0, 0}, {2, 1}, {2, -1}};
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 0},
                                         {2, 3}, {3, 4}, {4, 2}};
  return embed_straight_line(pos, edges);
}

}  // namespace stc::testing
