#include "stc/embed.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace stc {

namespace {

// Counterclockwise order from the +x axis; ties are coincident directions.
bool angle_less(const Vec2& a, const Vec2& b) {
  auto half = [](const Vec2& v) { return (v.y < 0 || (v.y == 0 && v.x < 0)) ? 1 : 0; };
  const int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  const double cross = a.x * b.y - a.y * b.x;
  if (cross == 0)
    throw InvalidParameter("coincident edge directions in straight-line drawing");
  return cross > 0;
}

}  // namespace

PlaneGraph embed_straight_line(const std::vector<Vec2>& positions,
                               const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(positions.size());
  const int m = static_cast<int>(edges.size());
  if (n < 1) throw InvalidParameter("drawing needs at least one vertex");

  std::set<std::pair<int, int>> seen;
  std::vector<EdgeSpec> specs(m);
  std::vector<std::vector<int>> at_vertex(n);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = edges[e];
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InvalidParameter("edge endpoint out of range");
    if (u == v) throw InvalidParameter("straight-line drawing cannot hold loops");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
      throw InvalidParameter("repeated edge in drawing");
    specs[e] = {2 * e, 2 * e + 1, u, v};
    at_vertex[u].push_back(2 * e);
    at_vertex[v].push_back(2 * e + 1);
  }

  auto head_of = [&](int d) {
    const EdgeSpec& s = specs[d / 2];
    return (d % 2 == 0) ? s.v : s.u;
  };
  auto dir_of = [&](int d) {
    const int from = (d % 2 == 0) ? specs[d / 2].u : specs[d / 2].v;
    const int to = head_of(d);
    return Vec2{positions[to].x - positions[from].x,
                positions[to].y - positions[from].y};
  };

  std::vector<std::vector<int>> rotation(n);
  for (int v = 0; v < n; ++v) {
    rotation[v] = at_vertex[v];
    std::sort(rotation[v].begin(), rotation[v].end(),
              [&](int a, int b) { return angle_less(dir_of(a), dir_of(b)); });
  }

  if (m == 0) return PlaneGraph::build(n, std::move(rotation), std::move(specs), -1);

  // Trace tentative faces to find the outer one by signed area.
  std::vector<int> succ(2 * m, -1);
  for (int v = 0; v < n; ++v) {
    const auto& rot = rotation[v];
    for (std::size_t i = 0; i < rot.size(); ++i)
      succ[rot[i]] = rot[(i + 1) % rot.size()];
  }
  auto twin = [](int d) { return d ^ 1; };

  // Under next(d) = rotation_successor(twin(d)) with counterclockwise
  // rotations, the unbounded face is the unique positive-area walk (zero
  // for trees, which have a single face).
  std::vector<char> visited(2 * m, 0);
  int outer_dart = -1;
  double outer_area = 0;
  int walks = 0;
  for (int d = 0; d < 2 * m; ++d) {
    if (visited[d]) continue;
    ++walks;
    double area2 = 0;
    int cur = d;
    do {
      visited[cur] = 1;
      const int from = (cur % 2 == 0) ? specs[cur / 2].u : specs[cur / 2].v;
      const int to = head_of(cur);
      area2 += positions[from].x * positions[to].y -
               positions[to].x * positions[from].y;
      cur = succ[twin(cur)];
    } while (cur != d);
    if (outer_dart == -1 || area2 > outer_area) {
      outer_dart = d;
      outer_area = area2;
    }
  }
  if (walks > 1 && outer_area <= 0)
    throw InvalidParameter("drawing has no positive-area face walk");

  return PlaneGraph::build(n, std::move(rotation), std::move(specs), outer_dart);
}

}  // namespace stc
