#include "stc/grids.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace stc {

namespace {

constexpr double kRoot3Half = 0.8660254037844386;

int tri_vertex_id(int row, int col) { return row * (row + 1) / 2 + col; }

}  // namespace

TriangularGrid::TriangularGrid(int k) : k_(k) {
  if (k < 2) throw InvalidParameter("triangular grid needs k >= 2");

  const int V = k * (k + 1) / 2;
  positions_.resize(V);
  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < k; ++r)
    for (int c = 0; c <= r; ++c) {
      positions_[tri_vertex_id(r, c)] = {c - r * 0.5, (k - 1 - r) * kRoot3Half};
      if (c < r) edges.push_back({tri_vertex_id(r, c), tri_vertex_id(r, c + 1)});
      if (r < k - 1) {
        edges.push_back({tri_vertex_id(r, c), tri_vertex_id(r + 1, c)});
        edges.push_back({tri_vertex_id(r, c), tri_vertex_id(r + 1, c + 1)});
      }
    }
  graph_ = embed_straight_line(positions_, edges);

  // Match traced faces to (row, position) through their vertex triples.
  std::map<std::vector<int>, std::pair<int, int>> expect;
  for (int row = 1; row <= k - 1; ++row) {
    for (int j = 0; j < row; ++j) {  // upward: position 2j+1
      std::vector<int> key{tri_vertex_id(row - 1, j), tri_vertex_id(row, j),
                           tri_vertex_id(row, j + 1)};
      std::sort(key.begin(), key.end());
      expect[key] = {row, 2 * j + 1};
    }
    for (int j = 1; j < row; ++j) {  // downward: position 2j
      std::vector<int> key{tri_vertex_id(row - 1, j - 1),
                           tri_vertex_id(row - 1, j), tri_vertex_id(row, j)};
      std::sort(key.begin(), key.end());
      expect[key] = {row, 2 * j};
    }
  }
  face_id_.assign(k - 1, {});
  for (int row = 1; row <= k - 1; ++row) face_id_[row - 1].assign(2 * row - 1, -1);
  face_coord_.assign(graph_.face_count(), {-1, -1});
  for (const Face& f : graph_.faces()) {
    if (f.is_outer) continue;
    std::vector<int> key;
    for (int d : f.walk) key.push_back(graph_.origin(d));
    std::sort(key.begin(), key.end());
    const auto it = expect.find(key);
    if (it == expect.end())
      throw std::logic_error("triangular grid face does not match the lattice");
    const auto [row, pos] = it->second;
    face_id_[row - 1][pos - 1] = f.id;
    face_coord_[f.id] = it->second;
  }

  side_of_edge_.assign(graph_.edge_count(), -1);
  std::vector<std::pair<int, int>> coords(V);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c <= r; ++c) coords[tri_vertex_id(r, c)] = {r, c};
  for (int e : stc::outer_edges(graph_)) {
    const auto [ru, cu] = coords[graph_.edge(e).u];
    const auto [rv, cv] = coords[graph_.edge(e).v];
    if (ru == k - 1 && rv == k - 1) {
      side_of_edge_[e] = 0;
      bottom_.push_back(e);
    } else if (cu == 0 && cv == 0) {
      side_of_edge_[e] = 1;
      left_.push_back(e);
    } else if (cu == ru && cv == rv) {
      side_of_edge_[e] = 2;
      right_.push_back(e);
    } else {
      throw std::logic_error("outer edge of T_k lies on no side");
    }
  }
}

int TriangularGrid::vertex_at(int row, int col) const {
  if (row < 0 || row >= k_ || col < 0 || col > row)
    throw InvalidParameter("vertex coordinate out of range");
  return tri_vertex_id(row, col);
}

int TriangularGrid::face_at(int row, int pos) const {
  if (row < 1 || row > k_ - 1 || pos < 1 || pos > 2 * row - 1)
    throw InvalidParameter("face coordinate out of range");
  return face_id_[row - 1][pos - 1];
}

std::pair<int, int> TriangularGrid::face_coord(int face) const {
  if (face < 0 || face >= graph_.face_count() || face_coord_[face].first < 0)
    throw InvalidParameter("not an interior face of the grid");
  return face_coord_[face];
}

TriangularGrid::Side TriangularGrid::side_of(int outer_edge) const {
  if (outer_edge < 0 || outer_edge >= graph_.edge_count() ||
      side_of_edge_[outer_edge] < 0)
    throw NotOuterEdge("edge " + std::to_string(outer_edge) +
                       " is not an outer edge of the grid");
  return static_cast<Side>(side_of_edge_[outer_edge]);
}

const std::vector<int>& TriangularGrid::outer_edges_on(Side s) const {
  switch (s) {
    case Side::kBottom: return bottom_;
    case Side::kLeft: return left_;
    default: return right_;
  }
}

int TriangularGrid::rotated_vertex(int v) const {
  // (row, col) -> (k-1-col, row-col): apex -> bottom-left -> bottom-right.
  for (int r = 0; r < k_; ++r)
    if (v < tri_vertex_id(r + 1, 0)) {
      const int c = v - tri_vertex_id(r, 0);
      return tri_vertex_id(k_ - 1 - c, r - c);
    }
  throw InvalidParameter("vertex out of range");
}

CenterTailSystem TriangularGrid::canonical_cts() const {
  const int k = k_;
  if (k < 5) throw InvalidParameter("canonical system defined for k >= 5");
  CenterTailSystem s;

  auto at = [&](int row, int pos) { return face_at(row, pos); };
  std::vector<int> upright, leftward, downright;

  if (k % 3 == 2) {
    const int n = (k - 2) / 3;
    const int R = 2 * n + 1;
    s.center = {at(R, R)};
    for (int p = R; p >= 1; --p) leftward.push_back(at(R, p));
    upright.push_back(at(R, R));
    for (int j = 0, r = R, p = R; j < n; ++j) {
      upright.push_back(at(r, p + 1));
      upright.push_back(at(r - 1, p));
      --r;
    }
    downright.push_back(at(R, R));
    for (int j = 0, r = R, p = R; j < n; ++j) {
      downright.push_back(at(r + 1, p + 1));
      downright.push_back(at(r + 1, p + 2));
      ++r;
      p += 2;
    }
  } else if (k % 3 == 0) {
    const int n = k / 3;
    const int R = 2 * n;
    s.center = {at(R, R)};
    for (int p = R; p >= 1; --p) leftward.push_back(at(R, p));
    upright.push_back(at(R, R));
    {
      int r = R, p = R;
      for (int j = 0; j + 1 < n; ++j) {
        upright.push_back(at(r - 1, p - 1));
        upright.push_back(at(r - 1, p));
        --r;
      }
      upright.push_back(at(r - 1, p - 1));
    }
    downright.push_back(at(R, R));
    {
      int r = R, p = R;
      for (int j = 0; j + 1 < n; ++j) {
        downright.push_back(at(r, p + 1));
        downright.push_back(at(r + 1, p + 2));
        ++r;
        p += 2;
      }
      downright.push_back(at(r, p + 1));
    }
  } else {
    const int n = (k - 1) / 3;
    const int R = 2 * n;
    s.center = {at(R, R - 1), at(R, R),     at(R, R + 1),
                at(R + 1, R), at(R + 1, R + 1), at(R + 1, R + 2)};
    for (int p = R; p >= 1; --p) leftward.push_back(at(R + 1, p));
    upright.push_back(at(R, R));
    {
      int r = R, p = R;
      for (int j = 0; j + 1 < n; ++j) {
        upright.push_back(at(r - 1, p - 1));
        upright.push_back(at(r - 1, p));
        --r;
      }
      upright.push_back(at(r - 1, p - 1));
    }
    downright.push_back(at(R + 1, R + 2));
    {
      int r = R + 1, p = R + 2;
      for (int j = 0; j + 1 < n; ++j) {
        downright.push_back(at(r, p + 1));
        downright.push_back(at(r + 1, p + 2));
        ++r;
        p += 2;
      }
      downright.push_back(at(r, p + 1));
    }
  }

  const int O = graph_.outer_face();
  for (auto* tail : {&upright, &leftward, &downright}) tail->push_back(O);
  s.tails = {upright, leftward, downright};
  for (int e : bottom_) s.assignment[e] = 0;
  for (int e : right_) s.assignment[e] = 1;
  for (int e : left_) s.assignment[e] = 2;
  return s;
}

TriangularGrid triangular_grid(int k) { return TriangularGrid(k); }

CenterTailSystem canonical_cts(int k) {
  return TriangularGrid(k).canonical_cts();
}

int theorem_value(int k) {
  if (k < 2) throw InvalidParameter("theorem covers k >= 2");
  switch (k % 3) {
    case 0: return 4 * (k / 3);
    case 1: return 4 * ((k - 1) / 3);
    default: return 4 * ((k - 2) / 3) + 2;
  }
}

RectangularGrid rectangular_grid(int m, int n) {
  if (m < 2 || n < 2) throw InvalidParameter("rectangular grid needs m, n >= 2");
  RectangularGrid grid;
  grid.rows = m;
  grid.cols = n;
  grid.positions.resize(m * n);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      grid.positions[i * n + j] = {static_cast<double>(j),
                                   static_cast<double>(m - 1 - i)};
      if (j < n - 1) edges.push_back({i * n + j, i * n + j + 1});
      if (i < m - 1) edges.push_back({i * n + j, (i + 1) * n + j});
    }
  grid.graph = embed_straight_line(grid.positions, edges);
  return grid;
}

HexGrid hexagonal_grid(int r) {
  if (r < 1) throw InvalidParameter("hexagonal grid needs radius >= 1");
  HexGrid grid;
  grid.radius = r;

  // Corner keys live on an exact lattice: x in units of sqrt(3)/2, y in
  // halves. Cell (q,s) has center (2q+s, 3s) and corners around it.
  std::map<std::pair<int, int>, int> vertex_of;
  std::vector<std::pair<int, int>> keys;
  std::map<std::pair<int, int>, char> edge_seen;
  std::vector<std::pair<int, int>> edges;
  auto vertex = [&](int x, int y) {
    const auto it = vertex_of.find({x, y});
    if (it != vertex_of.end()) return it->second;
    const int id = static_cast<int>(keys.size());
    vertex_of[{x, y}] = id;
    keys.push_back({x, y});
    return id;
  };

  const int radius = r - 1;
  for (int s = -radius; s <= radius; ++s)
    for (int q = -radius; q <= radius; ++q) {
      if (std::abs(q + s) > radius) continue;
      const int X = 2 * q + s, Y = 3 * s;
      const int corner_keys[6][2] = {{X, Y + 2},     {X - 1, Y + 1},
                                     {X - 1, Y - 1}, {X, Y - 2},
                                     {X + 1, Y - 1}, {X + 1, Y + 1}};
      int ids[6];
      for (int t = 0; t < 6; ++t) ids[t] = vertex(corner_keys[t][0], corner_keys[t][1]);
      for (int t = 0; t < 6; ++t) {
        const int a = ids[t], b = ids[(t + 1) % 6];
        const auto key = std::make_pair(std::min(a, b), std::max(a, b));
        if (edge_seen.emplace(key, 1).second) edges.push_back({a, b});
      }
    }

  grid.positions.resize(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    grid.positions[i] = {keys[i].first * kRoot3Half, keys[i].second * 0.5};
  grid.graph = embed_straight_line(grid.positions, edges);
  return grid;
}

int Spiderweb::vertex_at(int ring, int j) const {
  if (ring < 1 || ring > rings || j < 0 || j >= spokes)
    throw InvalidParameter("spiderweb vertex out of range");
  return 1 + (ring - 1) * spokes + j;
}

int Spiderweb::ring_edge(int ring, int j) const {
  return ring_edge_[(ring - 1) * spokes + j];
}

int Spiderweb::spoke_edge(int ring, int j) const {
  return spoke_edge_[ring * spokes + j];
}

Spiderweb spiderweb(int rings, int spokes) {
  if (rings < 1 || spokes < 3)
    throw InvalidParameter("spiderweb needs rings >= 1 and spokes >= 3");
  Spiderweb web;
  web.rings = rings;
  web.spokes = spokes;
  web.hub = 0;

  web.positions.resize(1 + rings * spokes);
  web.positions[0] = {0, 0};
  std::vector<std::pair<int, int>> edges;
  web.ring_edge_.assign(rings * spokes, -1);
  web.spoke_edge_.assign((rings + 1) * spokes, -1);

  auto vid = [&](int ring, int j) { return 1 + (ring - 1) * spokes + j; };
  for (int i = 1; i <= rings; ++i)
    for (int j = 0; j < spokes; ++j) {
      const double a = 2.0 * M_PI * j / spokes;
      web.positions[vid(i, j)] = {i * std::cos(a), i * std::sin(a)};
    }

  for (int j = 0; j < spokes; ++j) {
    web.spoke_edge_[j] = static_cast<int>(edges.size());
    edges.push_back({0, vid(1, j)});
  }
  for (int i = 1; i <= rings; ++i) {
    for (int j = 0; j < spokes; ++j) {
      web.ring_edge_[(i - 1) * spokes + j] = static_cast<int>(edges.size());
      edges.push_back({vid(i, j), vid(i, (j + 1) % spokes)});
    }
    if (i < rings)
      for (int j = 0; j < spokes; ++j) {
        web.spoke_edge_[i * spokes + j] = static_cast<int>(edges.size());
        edges.push_back({vid(i, j), vid(i + 1, j)});
      }
  }
  web.graph = embed_straight_line(web.positions, edges);

  // Low-congestion tree: keep the full spoke at direction 0 and cut every ring at
  // the edge facing away from it; middle-ring cuts then cost at most
  // spokes + 2.
  const int gap = spokes / 2;
  for (int i = 0; i < rings; ++i) web.tree_edges.push_back(web.spoke_edge_[i * spokes]);
  for (int i = 1; i <= rings; ++i)
    for (int j = 0; j < spokes; ++j)
      if (j != gap) web.tree_edges.push_back(web.ring_edge(i, j));
  std::sort(web.tree_edges.begin(), web.tree_edges.end());
  return web;
}

std::optional<int> recognize_triangular(const PlaneGraph& g) {
  const long long V = g.vertex_count();
  const int k = static_cast<int>((std::sqrt(8.0 * V + 1) - 1) / 2 + 0.5);
  if (k < 2 || static_cast<long long>(k) * (k + 1) / 2 != V) return std::nullopt;
  if (g.edge_count() != 3 * k * (k - 1) / 2) return std::nullopt;
  if (!TriangularGrid(k).graph().same_structure(g)) return std::nullopt;
  return k;
}

std::optional<std::pair<int, int>> recognize_rectangular(const PlaneGraph& g) {
  const int V = g.vertex_count();
  for (int m = 2; m * 2 <= V; ++m) {
    if (V % m != 0) continue;
    const int n = V / m;
    if (n < 2) continue;
    if (g.edge_count() != m * (n - 1) + n * (m - 1)) continue;
    if (rectangular_grid(m, n).graph.same_structure(g)) return std::make_pair(m, n);
  }
  return std::nullopt;
}

std::optional<int> recognize_hexagonal(const PlaneGraph& g) {
  for (int r = 1; 6 * r * r <= g.vertex_count(); ++r) {
    if (6 * r * r != g.vertex_count()) continue;
    if (hexagonal_grid(r).graph.same_structure(g)) return r;
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> recognize_spiderweb(const PlaneGraph& g) {
  const int V = g.vertex_count();
  if (V < 4) return std::nullopt;
  for (int k = 3; k < V; ++k) {
    if ((V - 1) % k != 0) continue;
    const int n = (V - 1) / k;
    if (g.edge_count() != 2 * n * k) continue;
    if (spiderweb(n, k).graph.same_structure(g)) return std::make_pair(n, k);
  }
  return std::nullopt;
}

}  // namespace stc
