#include "stc/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <memory>
#include <stdexcept>
#include <thread>
#include <utility>

#include "stc/dual_bounds.hpp"

namespace stc {

namespace {

using Clock = std::chrono::steady_clock;

struct RollbackDsu {
  std::vector<int> parent, size;
  std::vector<std::pair<int, int>> log;  // (child root, parent root)

  explicit RollbackDsu(int n) : parent(n), size(n, 1) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size[a] > size[b]) std::swap(a, b);
    parent[a] = b;
    size[b] += size[a];
    log.push_back({a, b});
    return true;
  }
  std::size_t mark() const { return log.size(); }
  void rollback(std::size_t to) {
    while (log.size() > to) {
      auto [child, root] = log.back();
      log.pop_back();
      size[root] -= size[child];
      parent[child] = child;
    }
  }
};

struct Problem {
  int V = 0, E = 0;
  std::vector<std::pair<int, int>> ends;
  std::vector<char> loop;
  // Non-loop incidences per vertex: (edge, other endpoint).
  std::vector<std::vector<std::pair<int, int>>> inc;
  int nonloop_edges = 0;
};

Problem make_problem(const PlaneGraph& g) {
  Problem p;
  p.V = g.vertex_count();
  p.E = g.edge_count();
  p.ends.resize(p.E);
  p.loop.resize(p.E);
  p.inc.resize(p.V);
  for (int e = 0; e < p.E; ++e) {
    p.ends[e] = {g.edge(e).u, g.edge(e).v};
    p.loop[e] = g.is_loop(e);
    if (!p.loop[e]) {
      ++p.nonloop_edges;
      p.inc[g.edge(e).u].push_back({e, g.edge(e).v});
      p.inc[g.edge(e).v].push_back({e, g.edge(e).u});
    }
  }
  return p;
}

enum class Mode { kDecision, kMinimize };

// Walker return codes.
constexpr int kExhausted = 0;
constexpr int kFound = 1;
constexpr int kBudget = 2;
constexpr int kPreempted = 3;

struct Shared {
  const Problem* prob = nullptr;
  Mode mode = Mode::kDecision;
  std::atomic<int> limit{0};  // decision: fixed c; minimize: best ec so far
  std::atomic<long long> nodes{0};
  long long max_nodes = 0;
  bool has_deadline = false;
  Clock::time_point deadline;
  std::atomic<bool> budget_blown{false};
  std::atomic<int> first_solved{INT_MAX};
};

struct TaskResult {
  bool has = false;
  int ec = 0;
  std::vector<int> edges;
};

// Depth-first search over in/out decisions taken in edge id order, include
// branch first, so complete edge sets are visited in lexicographic order.
// A forest edge's cut is bounded below by one plus the number of non-forest
// edges whose endpoints the edge already separates (such edges can never
// re-enter the tree); that forced value prunes against the limit and is
// exact once the tree is complete.
class Walker {
 public:
  Walker(Shared& sh, int task_index)
      : sh_(sh),
        p_(*sh.prob),
        task_(task_index),
        dsu_(p_.V),
        fadj_(p_.V),
        in_forest_(p_.E, 0),
        forced_(p_.E, 0),
        mark_(p_.V, 0),
        scratch_parent_(p_.V, 0) {}

  int run(const std::vector<signed char>& prefix, TaskResult& out) {
    out = TaskResult{};
    result_ = &out;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const int e = static_cast<int>(i);
      if (prefix[i]) {
        IncludeUndo undo;
        if (!include(e, undo)) return kExhausted;  // stale incumbent killed it
      }
      // Excludes carry no state; feasibility held when the task was cut.
    }
    return dfs(static_cast<int>(prefix.size()));
  }

  // Expansion helper for task splitting: enumerate feasible decision
  // prefixes of the given depth in DFS order.
  void expand(int i, int depth_left, std::vector<signed char>& cur,
              std::vector<std::vector<signed char>>& out) {
    if (forest_size_ == p_.V - 1 || i == p_.E || depth_left == 0) {
      out.push_back(cur);
      return;
    }
    IncludeUndo undo;
    if (include(i, undo)) {
      cur.push_back(1);
      expand(i + 1, depth_left - 1, cur, out);
      cur.pop_back();
      undo_include(i, undo);
    }
    if (exclude_feasible(i)) {
      cur.push_back(0);
      expand(i + 1, depth_left - 1, cur, out);
      cur.pop_back();
    }
  }

 private:
  struct IncludeUndo {
    std::size_t dsu_mark = 0;
    std::vector<std::pair<int, int>> forced_old;  // (edge, previous value)
  };

  int current_limit() const {
    return sh_.limit.load(std::memory_order_relaxed);
  }

  int tick() {
    ++local_nodes_;
    if ((local_nodes_ & 255) == 0) {
      sh_.nodes.fetch_add(256, std::memory_order_relaxed);
      if (sh_.budget_blown.load(std::memory_order_relaxed)) return kBudget;
      if (sh_.max_nodes > 0 &&
          sh_.nodes.load(std::memory_order_relaxed) > sh_.max_nodes) {
        sh_.budget_blown.store(true);
        return kBudget;
      }
      if (sh_.has_deadline && Clock::now() > sh_.deadline) {
        sh_.budget_blown.store(true);
        return kBudget;
      }
      if (sh_.mode == Mode::kDecision &&
          task_ > sh_.first_solved.load(std::memory_order_relaxed))
        return kPreempted;
    }
    return kExhausted;
  }

  // Cut forced on forest edge e so far: one plus the non-forest edges whose
  // endpoints e already separates. Only edges internal to e's component
  // count; an edge toward a still-unattached vertex can end up on either
  // side (or in the tree).
  int forced_count(int e, int comp_root) {
    const auto [a, b] = p_.ends[e];
    ++epoch_;
    side_.clear();
    side_.push_back(a);
    mark_[a] = epoch_;
    for (std::size_t h = 0; h < side_.size(); ++h) {
      const int w = side_[h];
      for (auto [f, z] : fadj_[w]) {
        if (f == e || mark_[z] == epoch_) continue;
        mark_[z] = epoch_;
        side_.push_back(z);
      }
    }
    int crossing = 0;
    for (int w : side_)
      for (auto [f, z] : p_.inc[w]) {
        if (f == e || in_forest_[f]) continue;
        if (mark_[z] != epoch_ && dsu_.find(z) == comp_root) ++crossing;
      }
    return crossing + 1;
  }

  bool include(int e, IncludeUndo& undo) {
    if (p_.loop[e]) return false;
    const auto [u, v] = p_.ends[e];
    if (dsu_.find(u) == dsu_.find(v)) return false;
    undo.dsu_mark = dsu_.mark();
    undo.forced_old.clear();
    dsu_.unite(u, v);
    fadj_[u].push_back({e, v});
    fadj_[v].push_back({e, u});
    in_forest_[e] = 1;
    ++forest_size_;

    // Only the merged component's splits change; recheck its forest edges.
    const int root = dsu_.find(u);
    const int limit = current_limit();
    bool ok = true;
    for (int e2 = 0; e2 < p_.E && ok; ++e2) {
      if (!in_forest_[e2] || dsu_.find(p_.ends[e2].first) != root) continue;
      const int nf = forced_count(e2, root);
      if (nf != forced_[e2]) {
        undo.forced_old.push_back({e2, forced_[e2]});
        forced_[e2] = nf;
      }
      if (nf > limit) ok = false;
    }
    if (!ok) {
      undo_include(e, undo);
      return false;
    }
    return true;
  }

  void undo_include(int e, const IncludeUndo& undo) {
    for (auto it = undo.forced_old.rbegin(); it != undo.forced_old.rend(); ++it)
      forced_[it->first] = it->second;
    const auto [u, v] = p_.ends[e];
    fadj_[u].pop_back();
    fadj_[v].pop_back();
    in_forest_[e] = 0;
    --forest_size_;
    dsu_.rollback(undo.dsu_mark);
  }

  // The forest plus all not-yet-decided edges (ids above i) must still
  // connect the graph, otherwise excluding edge i is hopeless.
  bool exclude_feasible(int i) {
    auto find = [&](int x) {
      while (scratch_parent_[x] != x)
        x = scratch_parent_[x] = scratch_parent_[scratch_parent_[x]];
      return x;
    };
    for (int v = 0; v < p_.V; ++v) scratch_parent_[v] = dsu_.find(v);
    for (int j = i + 1; j < p_.E; ++j) {
      if (p_.loop[j]) continue;
      const int a = find(p_.ends[j].first), b = find(p_.ends[j].second);
      if (a != b) scratch_parent_[a] = b;
    }
    const int root = find(0);
    for (int v = 0; v < p_.V; ++v)
      if (find(v) != root) return false;
    return true;
  }

  int leaf() {
    int ec = 1;
    std::vector<int> edges;
    edges.reserve(p_.V - 1);
    for (int e = 0; e < p_.E; ++e)
      if (in_forest_[e]) {
        edges.push_back(e);
        ec = std::max(ec, forced_[e]);
      }
    if (sh_.mode == Mode::kDecision) {
      result_->has = true;
      result_->ec = ec;
      result_->edges = std::move(edges);
      return kFound;
    }
    int cur = sh_.limit.load(std::memory_order_relaxed);
    while (ec < cur &&
           !sh_.limit.compare_exchange_weak(cur, ec, std::memory_order_relaxed)) {
    }
    if (!result_->has || ec < result_->ec ||
        (ec == result_->ec && edges < result_->edges)) {
      result_->has = true;
      result_->ec = ec;
      result_->edges = std::move(edges);
    }
    return kExhausted;
  }

  int dfs(int i) {
    if (int code = tick(); code != kExhausted) return code;
    if (forest_size_ == p_.V - 1) return leaf();
    if (i == p_.E) return kExhausted;
    IncludeUndo undo;
    if (include(i, undo)) {
      const int code = dfs(i + 1);
      undo_include(i, undo);
      if (code != kExhausted) return code;
    }
    if (exclude_feasible(i)) {
      const int code = dfs(i + 1);
      if (code != kExhausted) return code;
    }
    return kExhausted;
  }

  Shared& sh_;
  const Problem& p_;
  int task_ = 0;
  RollbackDsu dsu_;
  std::vector<std::vector<std::pair<int, int>>> fadj_;
  std::vector<char> in_forest_;
  std::vector<int> forced_;
  std::vector<int> mark_;
  std::vector<int> side_;
  std::vector<int> scratch_parent_;
  int epoch_ = 0;
  int forest_size_ = 0;
  long long local_nodes_ = 0;
  TaskResult* result_ = nullptr;
};

struct RunOutcome {
  bool budget = false;
  bool found = false;
  TaskResult best;
};

RunOutcome run_search(Shared& sh, int workers) {
  const Problem& p = *sh.prob;

  std::vector<std::vector<signed char>> tasks;
  if (workers <= 1) {
    tasks.push_back({});
  } else {
    Walker splitter(sh, 0);
    std::vector<signed char> cur;
    const int depth = std::min(p.E, 10);
    splitter.expand(0, depth, cur, tasks);
    if (tasks.empty()) return {};  // refuted during expansion
  }

  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};

  auto worker_loop = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      if (sh.budget_blown.load(std::memory_order_relaxed)) return;
      if (sh.mode == Mode::kDecision &&
          static_cast<int>(i) > sh.first_solved.load(std::memory_order_relaxed))
        continue;
      Walker w(sh, static_cast<int>(i));
      const int code = w.run(tasks[i], results[i]);
      if (code == kBudget) return;
      if (sh.mode == Mode::kDecision && results[i].has) {
        int cur = sh.first_solved.load(std::memory_order_relaxed);
        while (static_cast<int>(i) < cur &&
               !sh.first_solved.compare_exchange_weak(cur, static_cast<int>(i)))
        {
        }
      }
    }
  };

  if (workers <= 1 || tasks.size() == 1) {
    worker_loop();
  } else {
    std::vector<std::thread> pool;
    const int n = std::min<std::size_t>(workers, tasks.size());
    pool.reserve(n);
    for (int t = 0; t < n; ++t) pool.emplace_back(worker_loop);
    for (auto& th : pool) th.join();
  }

  RunOutcome out;
  out.budget = sh.budget_blown.load();
  if (sh.mode == Mode::kDecision) {
    const int fs = sh.first_solved.load();
    if (fs != INT_MAX) {
      out.found = true;
      out.best = results[fs];
    }
  } else {
    for (const TaskResult& r : results) {
      if (!r.has) continue;
      if (!out.found || r.ec < out.best.ec ||
          (r.ec == out.best.ec && r.edges < out.best.edges)) {
        out.found = true;
        out.best = r;
      }
    }
  }
  return out;
}

}  // namespace

ExactResult exact_stc(const PlaneGraph& g, const SearchLimits& limits) {
  const auto t0 = Clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  };

  ExactResult res;
  if (g.vertex_count() == 1) {
    res.value = 0;
    res.optimal = true;
    res.proven_lower = 0;
    res.elapsed_ms = elapsed_ms();
    return res;
  }

  const Problem prob = make_problem(g);
  const BfsDualBound seed = bfs_upper_bound(g);
  const int ub = seed.report.max_congestion;
  const int lb = prob.nonloop_edges > prob.V - 1 ? 2 : 1;
  const int workers = std::clamp(limits.workers, 1, 64);

  auto make_shared = [&](Mode mode, int limit) {
    auto sh = std::make_unique<Shared>();
    sh->prob = &prob;
    sh->mode = mode;
    sh->limit.store(limit);
    sh->max_nodes = limits.max_nodes;
    if (limits.max_millis > 0) {
      sh->has_deadline = true;
      sh->deadline = t0 + std::chrono::milliseconds(limits.max_millis);
    }
    return sh;
  };

  long long nodes_total = 0;

  if (g.vertex_count() <= 12) {
    auto sh = make_shared(Mode::kMinimize, ub);
    const RunOutcome out = run_search(*sh, workers);
    nodes_total = sh->nodes.load();
    res.nodes = nodes_total;
    if (out.found) {
      res.value = out.best.ec;
      res.tree_edges = out.best.edges;
    } else {
      res.value = ub;
      res.tree_edges = seed.tree.edge_ids();
    }
    res.optimal = !out.budget;
    res.proven_lower = out.budget ? lb : res.value;
    res.elapsed_ms = elapsed_ms();
    return res;
  }

  for (int c = lb; c <= ub; ++c) {
    auto sh = make_shared(Mode::kDecision, c);
    const RunOutcome out = run_search(*sh, workers);
    nodes_total += sh->nodes.load();
    if (out.found) {
      res.value = out.best.ec;  // == c unless a smaller cut tree surfaced
      res.tree_edges = out.best.edges;
      res.optimal = true;
      res.proven_lower = c;
      res.nodes = nodes_total;
      res.elapsed_ms = elapsed_ms();
      return res;
    }
    if (out.budget) {
      res.value = ub;
      res.tree_edges = seed.tree.edge_ids();
      res.optimal = false;
      res.proven_lower = c;
      res.nodes = nodes_total;
      res.elapsed_ms = elapsed_ms();
      return res;
    }
  }
  throw std::logic_error("decision search refuted its own upper bound");
}

}  // namespace stc
