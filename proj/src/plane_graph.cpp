#include "stc/plane_graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace stc {

namespace {

std::string fmt(const char* what, int a) {
  return std::string(what) + " " + std::to_string(a);
}

}  // namespace

PlaneGraph PlaneGraph::build(int vertex_count,
                             std::vector<std::vector<int>> rotation,
                             std::vector<EdgeSpec> edges, int outer_dart) {
  if (vertex_count < 1) throw InvalidParameter("vertex count must be >= 1");
  const int edge_count = static_cast<int>(edges.size());
  const int dart_count = 2 * edge_count;
  if (static_cast<int>(rotation.size()) != vertex_count)
    throw InvalidRotation("one rotation list per vertex required");

  PlaneGraph g;
  g.vertex_count_ = vertex_count;
  g.darts_.assign(dart_count, Dart{});

  for (int e = 0; e < edge_count; ++e) {
    const EdgeSpec& spec = edges[e];
    for (int d : {spec.dart_a, spec.dart_b})
      if (d < 0 || d >= dart_count)
        throw InvalidRotation(fmt("dart id out of range:", d));
    if (spec.dart_a == spec.dart_b)
      throw InvalidRotation(fmt("edge with twin darts equal:", e));
    if (spec.u < 0 || spec.u >= vertex_count || spec.v < 0 ||
        spec.v >= vertex_count)
      throw InvalidRotation(fmt("edge endpoint out of range on edge", e));
    for (int d : {spec.dart_a, spec.dart_b})
      if (g.darts_[d].edge != -1)
        throw InvalidRotation(fmt("dart belongs to two edges:", d));
    g.darts_[spec.dart_a] = Dart{spec.dart_b, spec.u, e};
    g.darts_[spec.dart_b] = Dart{spec.dart_a, spec.v, e};
  }
  for (int d = 0; d < dart_count; ++d)
    if (g.darts_[d].edge == -1)
      throw InvalidRotation(fmt("dart missing twin (no edge defines it):", d));

  // Rotation lists must partition the dart set, and each dart must sit at
  // the vertex its edge says it does.
  std::vector<int> seen_at(dart_count, -1);
  for (int v = 0; v < vertex_count; ++v) {
    for (int d : rotation[v]) {
      if (d < 0 || d >= dart_count)
        throw InvalidRotation(fmt("rotation names unknown dart:", d));
      if (seen_at[d] != -1)
        throw InvalidRotation(fmt("dart appears twice in rotations:", d));
      seen_at[d] = v;
      if (g.darts_[d].origin != v)
        throw InvalidRotation(fmt("dart listed at the wrong vertex:", d));
    }
  }
  for (int d = 0; d < dart_count; ++d)
    if (seen_at[d] == -1)
      throw InvalidRotation(fmt("dart missing from rotations:", d));

  if (edge_count == 0) {
    if (outer_dart != -1)
      throw InvalidRotation("edgeless graph takes outer dart -1");
  } else if (outer_dart < 0 || outer_dart >= dart_count) {
    throw InvalidRotation(fmt("outer dart out of range:", outer_dart));
  }

  // Connectivity over vertices.
  {
    std::vector<char> reached(vertex_count, 0);
    std::queue<int> q;
    q.push(0);
    reached[0] = 1;
    int count = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int d : rotation[v]) {
        int w = g.darts_[g.darts_[d].twin].origin;
        if (!reached[w]) {
          reached[w] = 1;
          ++count;
          q.push(w);
        }
      }
    }
    if (count != vertex_count) throw NotConnected("graph is not connected");
  }

  g.rot_succ_.assign(dart_count, -1);
  for (int v = 0; v < vertex_count; ++v) {
    const auto& rot = rotation[v];
    const int n = static_cast<int>(rot.size());
    for (int i = 0; i < n; ++i) g.rot_succ_[rot[i]] = rot[(i + 1) % n];
  }

  // Trace faces in dart-scan order; each orbit starts at its smallest dart.
  g.face_of_.assign(dart_count, -1);
  for (int d = 0; d < dart_count; ++d) {
    if (g.face_of_[d] != -1) continue;
    Face f;
    f.id = static_cast<int>(g.faces_.size());
    int cur = d;
    do {
      g.face_of_[cur] = f.id;
      f.walk.push_back(cur);
      cur = g.rot_succ_[g.darts_[cur].twin];
    } while (cur != d);
    g.faces_.push_back(std::move(f));
  }
  if (edge_count == 0) {
    // Single vertex: one unbounded face with an empty walk.
    g.faces_.push_back(Face{0, {}, true});
    g.outer_face_ = 0;
  } else {
    g.outer_face_ = g.face_of_[outer_dart];
    g.faces_[g.outer_face_].is_outer = true;
  }
  g.outer_dart_ = outer_dart;

  if (vertex_count - edge_count + static_cast<int>(g.faces_.size()) != 2)
    throw NotPlanarEmbedding("rotation system fails Euler's formula");

  g.rotation_ = std::move(rotation);
  g.edges_ = std::move(edges);
  return g;
}

bool PlaneGraph::same_structure(const PlaneGraph& other) const {
  return vertex_count_ == other.vertex_count_ &&
         edges_ == other.edges_ && rotation_ == other.rotation_ &&
         outer_dart_ == other.outer_dart_;
}

std::span<const Face> trace_faces(const PlaneGraph& g) { return g.faces(); }

std::vector<int> outer_edges(const PlaneGraph& g) {
  std::vector<int> result;
  const int outer = g.outer_face();
  for (int e = 0; e < g.edge_count(); ++e) {
    const int fa = g.face_of(g.edge(e).dart_a);
    const int fb = g.face_of(g.edge(e).dart_b);
    if ((fa == outer) != (fb == outer)) result.push_back(e);
  }
  return result;
}

std::vector<FaceAdjacency> face_adjacency(const PlaneGraph& g) {
  std::vector<FaceAdjacency> result;
  result.reserve(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    result.push_back({g.face_of(g.edge(e).dart_a),
                      g.face_of(g.edge(e).dart_b), e});
  return result;
}

}  // namespace stc
