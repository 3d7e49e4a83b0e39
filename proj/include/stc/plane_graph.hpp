#pragma once

#include <span>
#include <vector>

#include "stc/errors.hpp"

namespace stc {

/// Directed half-edge. Every edge contributes two mutually twinned darts;
/// a dart belongs to the rotation list of its origin vertex.
struct Dart {
  int twin = -1;
  int origin = -1;
  int edge = -1;
};

/// Edge as given to the builder: its two darts and its endpoints, with
/// origin(dart_a) == u and origin(dart_b) == v.
struct EdgeSpec {
  int dart_a = -1;
  int dart_b = -1;
  int u = -1;
  int v = -1;

  bool operator==(const EdgeSpec&) const = default;
};

/// Face of the embedding: the closed walk traced by
/// next(d) = rotation_successor(twin(d)). Each walk is stored starting at
/// its smallest dart, and faces are numbered in dart-scan order, so
/// identical inputs yield identical face ids and walks.
struct Face {
  int id = -1;
  std::vector<int> walk;
  bool is_outer = false;
};

/// Connected plane multigraph described combinatorially: a rotation system
/// (counterclockwise dart order around every vertex) plus one dart lying on
/// the unbounded face. Loops and parallel edges are allowed. Construction
/// validates the dart pairing, connectivity, and Euler's formula
/// V - E + F = 2; instances are immutable afterwards and safe to share
/// across concurrent readers.
///
/// Ids are dense: vertices 0..V-1, edges 0..E-1, darts 0..2E-1.
class PlaneGraph {
 public:
  /// Empty placeholder; every usable instance comes from build().
  PlaneGraph() = default;

  static PlaneGraph build(int vertex_count,
                          std::vector<std::vector<int>> rotation,
                          std::vector<EdgeSpec> edges, int outer_dart);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return static_cast<int>(darts_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }

  int twin(int d) const { return darts_[d].twin; }
  int origin(int d) const { return darts_[d].origin; }
  int head(int d) const { return darts_[darts_[d].twin].origin; }
  int edge_of(int d) const { return darts_[d].edge; }
  int rotation_successor(int d) const { return rot_succ_[d]; }
  /// Next dart along the face walk containing d.
  int next_in_face(int d) const { return rot_succ_[darts_[d].twin]; }

  const EdgeSpec& edge(int e) const { return edges_[e]; }
  std::span<const EdgeSpec> edges() const { return edges_; }
  bool is_loop(int e) const { return edges_[e].u == edges_[e].v; }

  std::span<const Face> faces() const { return faces_; }
  const Face& face(int f) const { return faces_[f]; }
  int face_of(int d) const { return face_of_[d]; }
  int outer_face() const { return outer_face_; }
  int outer_dart() const { return outer_dart_; }
  int interior_face_count() const { return face_count() - 1; }

  const std::vector<std::vector<int>>& rotations() const { return rotation_; }
  int degree(int v) const { return static_cast<int>(rotation_[v].size()); }

  /// Structural equality over all defining arrays (used by the grid
  /// recognizers and the file round-trip tests).
  bool same_structure(const PlaneGraph& other) const;

 private:
  int vertex_count_ = 0;
  std::vector<Dart> darts_;
  std::vector<EdgeSpec> edges_;
  std::vector<std::vector<int>> rotation_;
  std::vector<int> rot_succ_;
  int outer_dart_ = -1;
  std::vector<Face> faces_;
  std::vector<int> face_of_;
  int outer_face_ = -1;
};

/// The faces traced for g. Tracing happens once at construction; this is
/// the query surface for it.
std::span<const Face> trace_faces(const PlaneGraph& g);

/// Edges with the outer face on exactly one side. Bridges lying on the
/// outer walk (outer face on both sides) are excluded. Sorted by edge id.
std::vector<int> outer_edges(const PlaneGraph& g);

/// One (face, face, edge) triple per edge, giving the faces on the two
/// sides; the faces coincide exactly for bridges.
struct FaceAdjacency {
  int face_a = -1;
  int face_b = -1;
  int edge = -1;
};
std::vector<FaceAdjacency> face_adjacency(const PlaneGraph& g);

}  // namespace stc
