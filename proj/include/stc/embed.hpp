#pragma once

#include <utility>
#include <vector>

#include "stc/plane_graph.hpp"

namespace stc {

struct Vec2 {
  double x = 0;
  double y = 0;
};

/// Combinatorial embedding of a straight-line drawing: rotations sort each
/// vertex's darts counterclockwise by direction, and the outer face is the
/// unique walk of negative signed area. Edge i gets darts 2i (at the first
/// endpoint) and 2i+1. Rejects loops and repeated edges; edges must not
/// leave a vertex in coincident directions.
PlaneGraph embed_straight_line(const std::vector<Vec2>& positions,
                               const std::vector<std::pair<int, int>>& edges);

}  // namespace stc
