#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "stc/congestion.hpp"
#include "stc/dual_bounds.hpp"
#include "stc/plane_graph.hpp"

namespace stc {

using ordered_json = nlohmann::ordered_json;

// Plain-text plane graph format (".pg"):
//   pg <V> <E>
//   outer <dart>            (-1 for an edgeless graph)
//   rot <v>: d1 d2 ... dk   (one line per vertex, counterclockwise)
//   edge <e> <dart-a> <dart-b> <u> <v>
// '#' starts a comment; vertex/edge/dart ids must be dense. Duplicate darts
// and dangling twins are rejected.
PlaneGraph read_plane_graph(std::istream& in);
void write_plane_graph(std::ostream& out, const PlaneGraph& g,
                       const std::string& comment = "");
PlaneGraph load_plane_graph(const std::string& path);
void save_plane_graph(const std::string& path, const PlaneGraph& g,
                      const std::string& comment = "");

// Tree files: one edge id per line.
std::vector<int> read_tree_edges(std::istream& in);
void write_tree_edges(std::ostream& out, std::span<const int> edges);
std::vector<int> load_tree_edges(const std::string& path);
void save_tree_edges(const std::string& path, std::span<const int> edges);

// Center-tail system files (".cts"):
//   center f1 f2 ...
//   tail <idx>: f_a f_b ... O
//   assign <edge-id> <tail-idx>
// The token 'O' (or the outer face id) names the outer face.
CenterTailSystem read_cts(std::istream& in, const PlaneGraph& g);
void write_cts(std::ostream& out, const PlaneGraph& g,
               const CenterTailSystem& s);
CenterTailSystem load_cts(const std::string& path, const PlaneGraph& g);
void save_cts(const std::string& path, const PlaneGraph& g,
              const CenterTailSystem& s);

// JSON views with pinned key order.
ordered_json to_json(const CongestionReport& report);
ordered_json to_json(const IndexTable& table);
ordered_json to_json(const AbsoluteIndexTable& table);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace stc
