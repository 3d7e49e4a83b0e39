#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "stc/dual_bounds.hpp"
#include "stc/embed.hpp"
#include "stc/plane_graph.hpp"

namespace stc {

/// Triangular grid T_k: an equilateral triangle with each side divided into
/// k-1 pieces and corresponding subdivision points joined. k(k+1)/2
/// vertices, 3k(k-1)/2 edges, (k-1)^2 interior faces. Interior faces are
/// addressed by (row, position): row 1 at the apex through row k-1 at the
/// bottom, positions 1..2*row-1 left to right, odd = upward triangle,
/// even = downward.
class TriangularGrid {
 public:
  explicit TriangularGrid(int k);

  const PlaneGraph& graph() const { return graph_; }
  int k() const { return k_; }
  const std::vector<Vec2>& positions() const { return positions_; }

  int vertex_at(int row, int col) const;            // vertex rows 0..k-1
  int face_at(int row, int pos) const;               // interior faces
  std::pair<int, int> face_coord(int face) const;    // inverse of face_at

  enum class Side { kBottom, kLeft, kRight };
  Side side_of(int outer_edge) const;
  const std::vector<int>& outer_edges_on(Side s) const;

  /// Image of a vertex under the 120-degree rotation that carries the
  /// bottom side onto the right side.
  int rotated_vertex(int v) const;

  /// Canonical center-tail system (k >= 5), transcribed from the grid's
  /// three-fold symmetric construction: a one-face center at the central
  /// triangle for k = 0,2 (mod 3), the six faces around the central vertex
  /// for k = 1 (mod 3); three rotationally symmetric tails; bottom-side
  /// outer edges take the tail leaving through the right side, the other
  /// sides by rotation.
  CenterTailSystem canonical_cts() const;

 private:
  int k_ = 0;
  PlaneGraph graph_;
  std::vector<Vec2> positions_;
  std::vector<std::vector<int>> face_id_;           // [row-1][pos-1]
  std::vector<std::pair<int, int>> face_coord_;     // by face id
  std::vector<int> bottom_, left_, right_;          // outer edges per side
  std::vector<int> side_of_edge_;                   // by edge id; -1 if inner
};

TriangularGrid triangular_grid(int k);
CenterTailSystem canonical_cts(int k);

/// Closed form of the grid theorem: s(T_3n) = s(T_3n+1) = 4n,
/// s(T_3n+2) = 4n + 2.
int theorem_value(int k);

/// m-by-n rectangular grid (m rows, n columns), both at least 2.
struct RectangularGrid {
  int rows = 0, cols = 0;
  PlaneGraph graph;
  std::vector<Vec2> positions;
  int vertex_at(int i, int j) const { return i * cols + j; }
};
RectangularGrid rectangular_grid(int m, int n);

/// Hexagonal grid of radius r: 3r(r-1)+1 hexagonal cells (a single hexagon
/// for r = 1) arranged in r-1 rings around a central cell.
struct HexGrid {
  int radius = 0;
  PlaneGraph graph;
  std::vector<Vec2> positions;
};
HexGrid hexagonal_grid(int r);

/// Spiderweb graph: a hub, `rings` concentric cycles of `spokes` vertices,
/// and full radial spokes. `tree_edges` is a low-congestion spanning tree:
/// one kept spoke, every ring cut at the edge facing away from it. It
/// satisfies ec(G:T) <= spokes + 2, while the innermost faces have absolute
/// index equal to `rings`.
struct Spiderweb {
  int rings = 0, spokes = 0;
  PlaneGraph graph;
  std::vector<Vec2> positions;
  std::vector<int> tree_edges;
  int hub = 0;
  int vertex_at(int ring, int j) const;   // rings 1..rings, j 0..spokes-1
  int ring_edge(int ring, int j) const;   // (ring,j)-(ring,j+1 mod spokes)
  int spoke_edge(int ring, int j) const;  // (ring,j)-(ring+1,j); ring 0 = hub

 private:
  friend Spiderweb spiderweb(int rings, int spokes);
  std::vector<int> ring_edge_, spoke_edge_;
};
Spiderweb spiderweb(int rings, int spokes);

// Structural recognizers for files produced by the generators.
std::optional<int> recognize_triangular(const PlaneGraph& g);
std::optional<std::pair<int, int>> recognize_rectangular(const PlaneGraph& g);
std::optional<int> recognize_hexagonal(const PlaneGraph& g);
std::optional<std::pair<int, int>> recognize_spiderweb(const PlaneGraph& g);

}  // namespace stc
