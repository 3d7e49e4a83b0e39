#include "stc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace stc {

namespace {

// Strips comments, turns ':' into whitespace, and yields token lines.
std::vector<std::vector<std::string>> token_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::replace(raw.begin(), raw.end(), ':', ' ');
    std::istringstream ss(raw);
    std::vector<std::string> tokens;
    std::string t;
    while (ss >> t) tokens.push_back(t);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

int to_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("expected an integer for ") + what + ", got '" +
                     s + "'");
  }
}

}  // namespace

PlaneGraph read_plane_graph(std::istream& in) {
  const auto lines = token_lines(in);
  if (lines.empty() || lines[0].size() != 3 || lines[0][0] != "pg")
    throw ParseError("missing 'pg <V> <E>' header");
  const int V = to_int(lines[0][1], "vertex count");
  const int E = to_int(lines[0][2], "edge count");
  if (V < 1 || E < 0) throw ParseError("bad graph dimensions");

  std::size_t i = 1;
  if (i >= lines.size() || lines[i][0] != "outer" || lines[i].size() != 2)
    throw ParseError("missing 'outer <dart>' line");
  const int outer_dart = to_int(lines[i][1], "outer dart");
  ++i;

  std::vector<std::vector<int>> rotation(V);
  std::vector<char> have_rot(V, 0);
  std::vector<EdgeSpec> edges(E);
  std::vector<char> have_edge(E, 0);
  for (; i < lines.size(); ++i) {
    const auto& t = lines[i];
    if (t[0] == "rot") {
      if (t.size() < 2) throw ParseError("rot line without a vertex");
      const int v = to_int(t[1], "rot vertex");
      if (v < 0 || v >= V) throw ParseError("rot vertex out of range");
      if (have_rot[v]) throw ParseError("vertex has two rot lines");
      have_rot[v] = 1;
      for (std::size_t j = 2; j < t.size(); ++j)
        rotation[v].push_back(to_int(t[j], "dart id"));
    } else if (t[0] == "edge") {
      if (t.size() != 6) throw ParseError("edge line needs 5 fields");
      const int e = to_int(t[1], "edge id");
      if (e < 0 || e >= E) throw ParseError("edge id out of range");
      if (have_edge[e]) throw ParseError("edge id listed twice");
      have_edge[e] = 1;
      edges[e] = {to_int(t[2], "dart id"), to_int(t[3], "dart id"),
                  to_int(t[4], "vertex id"), to_int(t[5], "vertex id")};
    } else {
      throw ParseError("unknown directive '" + t[0] + "'");
    }
  }
  for (int v = 0; v < V; ++v)
    if (!have_rot[v]) throw ParseError("vertex without a rot line");
  for (int e = 0; e < E; ++e)
    if (!have_edge[e]) throw ParseError("edge id missing");

  return PlaneGraph::build(V, std::move(rotation), std::move(edges), outer_dart);
}

void write_plane_graph(std::ostream& out, const PlaneGraph& g,
                       const std::string& comment) {
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "pg " << g.vertex_count() << " " << g.edge_count() << "\n";
  out << "outer " << g.outer_dart() << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "rot " << v << ":";
    for (int d : g.rotations()[v]) out << " " << d;
    out << "\n";
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const EdgeSpec& s = g.edge(e);
    out << "edge " << e << " " << s.dart_a << " " << s.dart_b << " " << s.u
        << " " << s.v << "\n";
  }
}

std::vector<int> read_tree_edges(std::istream& in) {
  std::vector<int> edges;
  for (const auto& t : token_lines(in))
    for (const auto& tok : t) edges.push_back(to_int(tok, "edge id"));
  return edges;
}

void write_tree_edges(std::ostream& out, std::span<const int> edges) {
  for (int e : edges) out << e << "\n";
}

CenterTailSystem read_cts(std::istream& in, const PlaneGraph& g) {
  CenterTailSystem s;
  auto face_token = [&](const std::string& tok) {
    if (tok == "O") return g.outer_face();
    return to_int(tok, "face id");
  };
  for (const auto& t : token_lines(in)) {
    if (t[0] == "center") {
      for (std::size_t j = 1; j < t.size(); ++j)
        s.center.push_back(face_token(t[j]));
    } else if (t[0] == "tail") {
      if (t.size() < 3) throw ParseError("tail line too short");
      const int idx = to_int(t[1], "tail index");
      if (idx != static_cast<int>(s.tails.size()))
        throw ParseError("tail indices must arrive in order");
      std::vector<int> tail;
      for (std::size_t j = 2; j < t.size(); ++j) tail.push_back(face_token(t[j]));
      s.tails.push_back(std::move(tail));
    } else if (t[0] == "assign") {
      if (t.size() != 3) throw ParseError("assign line needs 2 fields");
      s.assignment[to_int(t[1], "edge id")] = to_int(t[2], "tail index");
    } else {
      throw ParseError("unknown directive '" + t[0] + "'");
    }
  }
  return s;
}

void write_cts(std::ostream& out, const PlaneGraph& g,
               const CenterTailSystem& s) {
  out << "center";
  for (int f : s.center) out << " " << f;
  out << "\n";
  for (std::size_t i = 0; i < s.tails.size(); ++i) {
    out << "tail " << i << ":";
    for (int f : s.tails[i])
      if (f == g.outer_face())
        out << " O";
      else
        out << " " << f;
    out << "\n";
  }
  for (const auto& [e, tail] : s.assignment)
    out << "assign " << e << " " << tail << "\n";
}

ordered_json to_json(const CongestionReport& report) {
  ordered_json j;
  j["max"] = report.max_congestion;
  j["argmax_edge"] = report.argmax_edge;
  ordered_json per;
  for (const auto& [e, c] : report.per_edge) per[std::to_string(e)] = c;
  j["per_edge"] = std::move(per);
  return j;
}

namespace {

ordered_json face_map_json(const std::vector<int>& values) {
  ordered_json j;
  for (std::size_t f = 0; f < values.size(); ++f) {
    if (values[f] >= kUnreachable)
      j[std::to_string(f)] = nullptr;
    else
      j[std::to_string(f)] = values[f];
  }
  return j;
}

}  // namespace

ordered_json to_json(const IndexTable& table) {
  ordered_json j;
  j["edge"] = table.edge;
  j["values"] = face_map_json(table.value);
  return j;
}

ordered_json to_json(const AbsoluteIndexTable& table) {
  ordered_json j;
  j["values"] = face_map_json(table.value);
  return j;
}

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  return out;
}

}  // namespace

PlaneGraph load_plane_graph(const std::string& path) {
  auto in = open_in(path);
  return read_plane_graph(in);
}

void save_plane_graph(const std::string& path, const PlaneGraph& g,
                      const std::string& comment) {
  auto out = open_out(path);
  write_plane_graph(out, g, comment);
}

std::vector<int> load_tree_edges(const std::string& path) {
  auto in = open_in(path);
  return read_tree_edges(in);
}

void save_tree_edges(const std::string& path, std::span<const int> edges) {
  auto out = open_out(path);
  write_tree_edges(out, edges);
}

CenterTailSystem load_cts(const std::string& path, const PlaneGraph& g) {
  auto in = open_in(path);
  return read_cts(in, g);
}

void save_cts(const std::string& path, const PlaneGraph& g,
              const CenterTailSystem& s) {
  auto out = open_out(path);
  write_cts(out, g, s);
}

std::string read_text_file(const std::string& path) {
  auto in = open_in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  auto out = open_out(path);
  out << content;
}

}  // namespace stc
