#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stc/congestion.hpp"
#include "stc/dual_bounds.hpp"
#include "stc/exact.hpp"
#include "stc/grids.hpp"
#include "stc/io.hpp"
#include "stc/render.hpp"

namespace {

using stc::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInput = 4;

ordered_json graph_summary(const stc::PlaneGraph& g) {
  ordered_json j;
  j["vertices"] = g.vertex_count();
  j["edges"] = g.edge_count();
  j["faces"] = g.face_count();
  return j;
}

// A parsed graph matched back to the generator that produced it, with the
// generator's canonical drawing for rendering.
struct Recognized {
  std::string description;
  std::optional<stc::TriangularGrid> tri;
  std::vector<stc::Vec2> positions;
};

std::optional<Recognized> recognize(const stc::PlaneGraph& g) {
  if (auto k = stc::recognize_triangular(g)) {
    Recognized r;
    r.description = "triangular k=" + std::to_string(*k);
    r.tri.emplace(*k);
    r.positions = r.tri->positions();
    return r;
  }
  if (auto mn = stc::recognize_rectangular(g)) {
    Recognized r;
    r.description = "rectangular " + std::to_string(mn->first) + "x" +
                    std::to_string(mn->second);
    r.positions = stc::rectangular_grid(mn->first, mn->second).positions;
    return r;
  }
  if (auto radius = stc::recognize_hexagonal(g)) {
    Recognized r;
    r.description = "hexagonal r=" + std::to_string(*radius);
    r.positions = stc::hexagonal_grid(*radius).positions;
    return r;
  }
  if (auto nk = stc::recognize_spiderweb(g)) {
    Recognized r;
    r.description = "spiderweb rings=" + std::to_string(nk->first) +
                    " spokes=" + std::to_string(nk->second);
    r.positions = stc::spiderweb(nk->first, nk->second).positions;
    return r;
  }
  return std::nullopt;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    stc::write_text_file(out_path, text);
}

ordered_json indicator_json(const stc::CongestionIndicator& ci) {
  ordered_json j;
  auto opt = [](const std::optional<int>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  j["value"] = opt(ci.value);
  j["which_minimum"] = ci.which;
  j["min1"] = opt(ci.min1);
  j["min2"] = opt(ci.min2);
  j["min3"] = opt(ci.min3);
  return j;
}

struct GenOptions {
  std::string family;
  int size = 0, rows = 0, cols = 0, radius = 0, rings = 0, spokes = 0;
  std::string out_dir = ".";
};

int run_gen(const GenOptions& opt) {
  namespace fs = std::filesystem;
  const fs::path dir(opt.out_dir);
  fs::create_directories(dir);
  std::vector<std::string> written;

  if (opt.family == "triangular") {
    if (opt.size < 2) throw stc::InvalidParameter("--size must be >= 2");
    const stc::TriangularGrid grid(opt.size);
    const std::string base = "T_" + std::to_string(opt.size);
    const std::string pg = (dir / (base + ".pg")).string();
    stc::save_plane_graph(
        pg, grid.graph(), "triangular grid k=" + std::to_string(opt.size));
    written.push_back(pg);
    if (opt.size >= 5) {
      const std::string cts =
          (dir / ("S_" + std::to_string(opt.size) + ".cts")).string();
      stc::save_cts(cts, grid.graph(), grid.canonical_cts());
      written.push_back(cts);
    }
  } else if (opt.family == "rectangular") {
    if (opt.rows < 2 || opt.cols < 2)
      throw stc::InvalidParameter("--rows and --cols must be >= 2");
    const stc::RectangularGrid grid = stc::rectangular_grid(opt.rows, opt.cols);
    const std::string pg =
        (dir / ("R_" + std::to_string(opt.rows) + "x" +
                std::to_string(opt.cols) + ".pg"))
            .string();
    stc::save_plane_graph(pg, grid.graph,
                          "rectangular grid " + std::to_string(opt.rows) +
                              "x" + std::to_string(opt.cols));
    written.push_back(pg);
  } else if (opt.family == "hexagonal") {
    if (opt.radius < 1) throw stc::InvalidParameter("--radius must be >= 1");
    const stc::HexGrid grid = stc::hexagonal_grid(opt.radius);
    const std::string pg =
        (dir / ("H_" + std::to_string(opt.radius) + ".pg")).string();
    stc::save_plane_graph(pg, grid.graph,
                          "hexagonal grid r=" + std::to_string(opt.radius));
    written.push_back(pg);
  } else if (opt.family == "spiderweb") {
    if (opt.rings < 1 || opt.spokes < 3)
      throw stc::InvalidParameter("--rings must be >= 1 and --spokes >= 3");
    const stc::Spiderweb web = stc::spiderweb(opt.rings, opt.spokes);
    const std::string base =
        "W_" + std::to_string(opt.rings) + "x" + std::to_string(opt.spokes);
    const std::string pg = (dir / (base + ".pg")).string();
    stc::save_plane_graph(
        pg, web.graph,
        "spiderweb rings=" + std::to_string(opt.rings) +
            " spokes=" + std::to_string(opt.spokes));
    written.push_back(pg);
    const std::string tree = (dir / (base + ".tree")).string();
    stc::save_tree_edges(tree, web.tree_edges);
    written.push_back(tree);
  } else {
    throw stc::InvalidParameter("unknown family '" + opt.family + "'");
  }

  for (const std::string& path : written) std::cout << path << "\n";
  return kExitOk;
}

struct BoundsOptions {
  std::string graph_path, cts_path, format = "json", out_path;
};

int run_bounds(const BoundsOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const stc::PlaneGraph g = stc::load_plane_graph(opt.graph_path);
  const auto family = recognize(g);

  std::optional<stc::CenterTailSystem> system;
  std::string lower_source;
  if (!opt.cts_path.empty()) {
    system = stc::load_cts(opt.cts_path, g);
    lower_source = "file";
  } else if (family && family->tri && family->tri->k() >= 5) {
    system = family->tri->canonical_cts();
    lower_source = "canonical";
  }

  std::optional<stc::CongestionIndicator> ci;
  if (system) ci = stc::congestion_indicator(g, *system);

  const stc::BfsDualBound upper = stc::bfs_upper_bound(g);
  const int ec = upper.report.max_congestion;
  if (ci && ci->value && *ci->value > ec)
    throw std::logic_error("lower bound exceeds achieved tree congestion");

  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - t0)
                        .count();

  ordered_json j;
  j["graph"] = graph_summary(g);
  j["family"] =
      family ? ordered_json(family->description) : ordered_json(nullptr);
  j["lower"] =
      (ci && ci->value) ? ordered_json(*ci->value) : ordered_json(nullptr);
  j["lower_source"] = system ? ordered_json(lower_source) : ordered_json(nullptr);
  if (ci) j["lower_detail"] = indicator_json(*ci);
  j["upper"] = ec;
  j["index_bound"] = upper.bound;
  if (ci && ci->value && *ci->value == ec) j["certified"] = ec;
  j["congestion"] = stc::to_json(upper.report);
  j["tree_edges"] = upper.tree.edge_ids();
  j["elapsed_ms"] = ms;

  if (opt.format == "json") {
    emit(j.dump(2) + "\n", opt.out_path);
  } else {
    std::ostringstream text;
    text << "graph: " << opt.graph_path << "  V=" << g.vertex_count()
         << " E=" << g.edge_count() << " F=" << g.face_count() << "\n";
    text << "family: " << (family ? family->description : "unrecognized")
         << "\n";
    if (ci && ci->value)
      text << "lower (CI, " << lower_source << "): " << *ci->value
           << "  via minimum " << ci->which << "\n";
    else
      text << "lower: none (no center-tail system)\n";
    text << "upper (BFS dual complement): " << ec << "\n";
    text << "index bound: " << upper.bound << "\n";
    if (ci && ci->value && *ci->value == ec)
      text << "certified: s = " << ec << "\n";
    emit(text.str(), opt.out_path);
  }
  return kExitOk;
}

struct ExactOptions {
  std::string graph_path, tree_out, format = "json", out_path;
  long long limit_nodes = 0;
  int limit_ms = 0;
  int workers = 1;
};

int run_exact(const ExactOptions& opt) {
  const stc::PlaneGraph g = stc::load_plane_graph(opt.graph_path);
  const stc::SearchLimits limits{opt.limit_nodes, opt.limit_ms, opt.workers};
  const stc::ExactResult r = stc::exact_stc(g, limits);

  const auto family = recognize(g);
  std::optional<int> ci_lower;
  if (family && family->tri && family->tri->k() >= 5)
    ci_lower =
        stc::congestion_indicator(g, family->tri->canonical_cts()).value;
  const int upper = stc::bfs_upper_bound(g).report.max_congestion;
  if (r.optimal && (r.value > upper || (ci_lower && *ci_lower > r.value)))
    throw std::logic_error("bound sandwich violated");

  ordered_json j;
  j["graph"] = graph_summary(g);
  j["value"] = r.value;
  j["optimal"] = r.optimal;
  j["lower"] = ci_lower ? ordered_json(*ci_lower) : ordered_json(nullptr);
  j["upper"] = upper;
  j["proven_lower"] = r.proven_lower;
  j["nodes"] = r.nodes;
  j["elapsed_ms"] = r.elapsed_ms;
  j["witness"] = r.tree_edges;
  if (!r.tree_edges.empty()) {
    const stc::SpanningTree t = stc::SpanningTree::make(g, r.tree_edges);
    j["congestion"] = stc::to_json(stc::edge_congestion_cuts(g, t));
  }

  if (!opt.tree_out.empty()) stc::save_tree_edges(opt.tree_out, r.tree_edges);

  if (opt.format == "json") {
    emit(j.dump(2) + "\n", opt.out_path);
  } else {
    std::ostringstream text;
    text << "s = " << r.value << (r.optimal ? "" : " (upper bound; budget hit)")
         << ", proven lower " << r.proven_lower << ", " << r.nodes << " nodes, "
         << r.elapsed_ms << " ms\n";
    emit(text.str(), opt.out_path);
  }
  return r.optimal ? kExitOk : kExitBudget;
}

struct TableOptions {
  std::string family = "triangular";
  int from = 5, to = 14, exact_upto = 4, workers = 1;
  std::string format = "text", out_path;
};

int run_table(const TableOptions& opt) {
  if (opt.family != "triangular")
    throw stc::InvalidParameter("table supports --family triangular");
  if (opt.from < 2 || opt.to < opt.from)
    throw stc::InvalidParameter("need 2 <= from <= to");

  bool all_agree = true;
  ordered_json rows = ordered_json::array();
  std::ostringstream text;
  text << "  k theorem lower upper bound exact status\n";

  for (int k = opt.from; k <= opt.to; ++k) {
    const stc::TriangularGrid grid(k);
    const int target = stc::theorem_value(k);
    std::optional<int> ci_value;
    if (k >= 5) {
      const stc::CongestionIndicator ci =
          stc::congestion_indicator(grid.graph(), grid.canonical_cts());
      ci_value = ci.value;
    }
    const stc::BfsDualBound upper = stc::bfs_upper_bound(grid.graph());
    const int ec = upper.report.max_congestion;
    std::optional<int> exact;
    if (k <= opt.exact_upto)
      exact = stc::exact_stc(grid.graph(), {.workers = opt.workers}).value;

    bool agree = ec == target;
    if (k >= 5) agree = agree && ci_value && *ci_value == target;
    if (k % 3 != 1 && k >= 5) agree = agree && upper.bound == target;
    if (exact) agree = agree && *exact == target;
    all_agree = all_agree && agree;

    ordered_json row;
    row["k"] = k;
    row["theorem"] = target;
    row["lower"] = ci_value ? ordered_json(*ci_value) : ordered_json(nullptr);
    row["upper"] = ec;
    row["index_bound"] = upper.bound;
    row["exact"] = exact ? ordered_json(*exact) : ordered_json(nullptr);
    row["agree"] = agree;
    rows.push_back(row);

    char line[128];
    std::snprintf(line, sizeof line, "%3d %7d %5s %5d %5d %5s %s\n", k, target,
                  ci_value ? std::to_string(*ci_value).c_str() : "-", ec,
                  upper.bound, exact ? std::to_string(*exact).c_str() : "-",
                  agree ? "ok" : "MISMATCH");
    text << line;
  }

  if (opt.format == "json") {
    ordered_json j;
    j["family"] = opt.family;
    j["rows"] = rows;
    j["all_agree"] = all_agree;
    emit(j.dump(2) + "\n", opt.out_path);
  } else {
    emit(text.str(), opt.out_path);
  }
  return all_agree ? kExitOk : kExitDisagreement;
}

struct RenderOptions {
  std::string graph_path, labels = "none", format = "svg", out_path;
};

int run_render(const RenderOptions& opt) {
  const stc::PlaneGraph g = stc::load_plane_graph(opt.graph_path);
  const auto family = recognize(g);
  if (!family)
    throw stc::InvalidParameter(
        "render needs a generator-produced graph (canonical coordinates)");

  stc::RenderSpec spec;
  spec.graph = &g;
  spec.positions = &family->positions;
  spec.title = family->description;

  if (opt.labels == "none") {
    // bare drawing
  } else if (opt.labels == "absolute-index") {
    const stc::AbsoluteIndexTable abs = stc::absolute_index(g);
    for (int f = 0; f < g.face_count(); ++f)
      if (f != g.outer_face())
        spec.face_labels[f] = std::to_string(abs.value[f]);
  } else if (opt.labels.rfind("ibot:", 0) == 0) {
    if (!family->tri)
      throw stc::InvalidParameter("ibot labels need a triangular grid");
    const std::string side_name = opt.labels.substr(5);
    stc::TriangularGrid::Side side;
    if (side_name == "bottom")
      side = stc::TriangularGrid::Side::kBottom;
    else if (side_name == "left")
      side = stc::TriangularGrid::Side::kLeft;
    else if (side_name == "right")
      side = stc::TriangularGrid::Side::kRight;
    else
      throw stc::InvalidParameter("unknown side '" + side_name + "'");
    std::vector<int> best(g.face_count(), stc::kUnreachable);
    for (int e : family->tri->outer_edges_on(side)) {
      const stc::IndexTable t = stc::index_table(g, e);
      for (int f = 0; f < g.face_count(); ++f)
        best[f] = std::min(best[f], t.value[f]);
    }
    for (int f = 0; f < g.face_count(); ++f)
      if (f != g.outer_face() && best[f] < stc::kUnreachable)
        spec.face_labels[f] = std::to_string(best[f]);
  } else if (opt.labels.rfind("congestion:", 0) == 0) {
    const std::string tree_path = opt.labels.substr(11);
    const stc::SpanningTree t =
        stc::verify_tree(g, stc::load_tree_edges(tree_path));
    const stc::CongestionReport report = stc::edge_congestion_cuts(g, t);
    spec.bold_edges = t.edge_ids();
    for (const auto& [e, c] : report.per_edge)
      spec.edge_labels[e] = std::to_string(c);
  } else {
    throw stc::InvalidParameter("unknown label mode '" + opt.labels + "'");
  }

  std::string payload;
  if (opt.format == "svg")
    payload = stc::to_svg(spec);
  else if (opt.format == "dot")
    payload = stc::to_dot(spec);
  else
    throw stc::InvalidParameter("unknown render format '" + opt.format + "'");
  emit(payload, opt.out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spanning tree congestion toolkit for plane graphs"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate graph families");
  cmd_gen->add_option("--family", gen.family,
                      "triangular|rectangular|hexagonal|spiderweb")
      ->required();
  cmd_gen->add_option("--size", gen.size, "triangular: k");
  cmd_gen->add_option("--rows", gen.rows, "rectangular: rows");
  cmd_gen->add_option("--cols", gen.cols, "rectangular: columns");
  cmd_gen->add_option("--radius", gen.radius, "hexagonal: radius");
  cmd_gen->add_option("--rings", gen.rings, "spiderweb: concentric cycles");
  cmd_gen->add_option("--spokes", gen.spokes, "spiderweb: radial directions");
  cmd_gen->add_option("--out", gen.out_dir, "output directory");

  BoundsOptions bounds;
  CLI::App* cmd_bounds =
      app.add_subcommand("bounds", "certified lower and upper bounds");
  cmd_bounds->add_option("graph", bounds.graph_path, ".pg file")->required();
  cmd_bounds->add_option("--cts", bounds.cts_path, "center-tail system file");
  cmd_bounds->add_option("--format", bounds.format, "json|text");
  cmd_bounds->add_option("--out", bounds.out_path, "write report here");

  ExactOptions exact;
  CLI::App* cmd_exact = app.add_subcommand("exact", "exact search for s(G)");
  cmd_exact->add_option("graph", exact.graph_path, ".pg file")->required();
  cmd_exact->add_option("--limit-nodes", exact.limit_nodes, "node budget");
  cmd_exact->add_option("--limit-ms", exact.limit_ms, "time budget (ms)");
  cmd_exact->add_option("--workers", exact.workers, "parallel workers");
  cmd_exact->add_option("--tree-out", exact.tree_out, "write witness tree");
  cmd_exact->add_option("--format", exact.format, "json|text");
  cmd_exact->add_option("--out", exact.out_path, "write report here");

  TableOptions table;
  CLI::App* cmd_table =
      app.add_subcommand("table", "theorem vs computed values per size");
  cmd_table->add_option("--family", table.family, "triangular");
  cmd_table->add_option("--from", table.from, "first k")->required();
  cmd_table->add_option("--to", table.to, "last k")->required();
  cmd_table->add_option("--exact-upto", table.exact_upto,
                        "run the exact search for k up to this");
  cmd_table->add_option("--workers", table.workers, "parallel workers");
  cmd_table->add_option("--format", table.format, "text|json");
  cmd_table->add_option("--out", table.out_path, "write table here");

  RenderOptions render;
  CLI::App* cmd_render = app.add_subcommand("render", "draw a generated graph");
  cmd_render->add_option("graph", render.graph_path, ".pg file")->required();
  cmd_render->add_option("--labels", render.labels,
                         "none|absolute-index|ibot:<side>|congestion:<tree>");
  cmd_render->add_option("--format", render.format, "svg|dot");
  cmd_render->add_option("--out", render.out_path, "write figure here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (cmd_gen->parsed()) return run_gen(gen);
    if (cmd_bounds->parsed()) return run_bounds(bounds);
    if (cmd_exact->parsed()) return run_exact(exact);
    if (cmd_table->parsed()) return run_table(table);
    if (cmd_render->parsed()) return run_render(render);
  } catch (const stc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
