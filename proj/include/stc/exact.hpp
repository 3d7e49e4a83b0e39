#pragma once

#include <vector>

#include "stc/plane_graph.hpp"

namespace stc {

struct SearchLimits {
  long long max_nodes = 0;  // 0 = unlimited
  int max_millis = 0;       // 0 = unlimited
  int workers = 1;
};

/// Result of the exact search. When `optimal` is false the search ran out
/// of budget: `value` is the best congestion achieved by a known tree and
/// `proven_lower` the largest refuted candidate plus one.
struct ExactResult {
  int value = 0;
  std::vector<int> tree_edges;  // witness, sorted by edge id
  bool optimal = false;
  int proven_lower = 1;
  long long nodes = 0;
  double elapsed_ms = 0.0;
};

/// Exact spanning tree congestion s(G) with a witness tree.
///
/// Strategy: iterate a decision candidate c upward, growing a forest edge
/// by edge in id order and pruning any partial solution in which some
/// already-forced cut exceeds c; graphs with at most 12 vertices instead
/// enumerate spanning trees with incumbent pruning. Both return the same
/// witness: the lexicographically smallest optimal edge set. The result is
/// deterministic regardless of worker count.
ExactResult exact_stc(const PlaneGraph& g, const SearchLimits& limits = {});

}  // namespace stc
