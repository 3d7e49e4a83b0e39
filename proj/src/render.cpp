#include "stc/render.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

namespace stc {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // avoid -0.00
  return buf;
}

Vec2 face_centroid(const PlaneGraph& g, const std::vector<Vec2>& pos,
                   const Face& f) {
  Vec2 c{0, 0};
  for (int d : f.walk) {
    c.x += pos[g.origin(d)].x;
    c.y += pos[g.origin(d)].y;
  }
  const double n = static_cast<double>(f.walk.size());
  return {c.x / n, c.y / n};
}

}  // namespace

std::string to_svg(const RenderSpec& spec) {
  const PlaneGraph& g = *spec.graph;
  const std::vector<Vec2>& pos = *spec.positions;
  const double scale = 48.0, margin = 24.0;

  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    min_x = std::min(min_x, pos[i].x);
    max_x = std::max(max_x, pos[i].x);
    min_y = std::min(min_y, pos[i].y);
    max_y = std::max(max_y, pos[i].y);
  }
  auto px = [&](const Vec2& p) { return (p.x - min_x) * scale + margin; };
  auto py = [&](const Vec2& p) { return (max_y - p.y) * scale + margin; };
  const double width = (max_x - min_x) * scale + 2 * margin;
  const double height = (max_y - min_y) * scale + 2 * margin;

  std::set<int> bold(spec.bold_edges.begin(), spec.bold_edges.end());
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width)
      << " " << num(height) << "\">\n";
  if (!spec.title.empty()) out << "  <title>" << spec.title << "</title>\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    const Vec2 a = pos[g.edge(e).u], b = pos[g.edge(e).v];
    out << "  <line x1=\"" << num(px(a)) << "\" y1=\"" << num(py(a))
        << "\" x2=\"" << num(px(b)) << "\" y2=\"" << num(py(b)) << "\" stroke=\""
        << (bold.count(e) ? "black" : "gray") << "\" stroke-width=\""
        << (bold.count(e) ? "3" : "1") << "\"/>\n";
  }
  for (std::size_t v = 0; v < pos.size(); ++v)
    out << "  <circle cx=\"" << num(px(pos[v])) << "\" cy=\"" << num(py(pos[v]))
        << "\" r=\"2.5\" fill=\"black\"/>\n";
  for (const auto& [f, text] : spec.face_labels) {
    const Face& face = g.face(f);
    if (face.is_outer || face.walk.empty()) continue;
    const Vec2 c = face_centroid(g, pos, face);
    out << "  <text x=\"" << num(px(c)) << "\" y=\"" << num(py(c) + 4)
        << "\" font-size=\"12\" text-anchor=\"middle\">" << text << "</text>\n";
  }
  for (const auto& [e, text] : spec.edge_labels) {
    const Vec2 a = pos[g.edge(e).u], b = pos[g.edge(e).v];
    const Vec2 mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
    out << "  <text x=\"" << num(px(mid)) << "\" y=\"" << num(py(mid) - 3)
        << "\" font-size=\"10\" fill=\"darkred\" text-anchor=\"middle\">" << text
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string to_dot(const RenderSpec& spec) {
  const PlaneGraph& g = *spec.graph;
  const std::vector<Vec2>& pos = *spec.positions;
  std::set<int> bold(spec.bold_edges.begin(), spec.bold_edges.end());

  std::ostringstream out;
  out << "graph stc {\n";
  if (!spec.title.empty()) out << "  label=\"" << spec.title << "\";\n";
  out << "  node [shape=point, width=0.06];\n";
  for (std::size_t v = 0; v < pos.size(); ++v)
    out << "  v" << v << " [pos=\"" << num(pos[v].x) << "," << num(pos[v].y)
        << "!\"];\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    out << "  v" << g.edge(e).u << " -- v" << g.edge(e).v;
    std::vector<std::string> attrs;
    if (bold.count(e)) attrs.push_back("penwidth=3");
    const auto it = spec.edge_labels.find(e);
    if (it != spec.edge_labels.end()) attrs.push_back("label=\"" + it->second + "\"");
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i)
        out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  for (const auto& [f, text] : spec.face_labels) {
    const Face& face = g.face(f);
    if (face.is_outer || face.walk.empty()) continue;
    const Vec2 c = face_centroid(g, pos, face);
    out << "  f" << f << " [shape=none, label=\"" << text << "\", pos=\""
        << num(c.x) << "," << num(c.y) << "!\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace stc
