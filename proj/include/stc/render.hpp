#pragma once

#include <map>
#include <string>
#include <vector>

#include "stc/embed.hpp"
#include "stc/plane_graph.hpp"

namespace stc {

/// What to draw: the graph at the given positions, optional text at face
/// centroids and edge midpoints, and a set of emphasized edges. Output is
/// byte-stable for identical input.
struct RenderSpec {
  const PlaneGraph* graph = nullptr;
  const std::vector<Vec2>* positions = nullptr;
  std::map<int, std::string> face_labels;
  std::map<int, std::string> edge_labels;
  std::vector<int> bold_edges;
  std::string title;
};

std::string to_svg(const RenderSpec& spec);
std::string to_dot(const RenderSpec& spec);

}  // namespace stc
