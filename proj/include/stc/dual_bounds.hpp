#pragma once

#include <limits>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "stc/congestion.hpp"
#include "stc/dual_graph.hpp"
#include "stc/plane_graph.hpp"

namespace stc {

/// Sentinel for faces a first-edge-constrained dual path cannot reach.
inline constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

/// Index table of one outer edge e: value[F] = i(F,e), the length of a
/// shortest simple dual path from the outer face O to F whose first edge is
/// e*. Since such paths never revisit O, i(F,e) is one plus the distance
/// from e's interior side to F in the dual with O deleted; in particular
/// i(F_e, e) = 1 for the interior face F_e bordering e. The outer face slot
/// holds kUnreachable (the index is defined for interior faces only).
struct IndexTable {
  int edge = -1;
  std::vector<int> value;  // by face id
  bool reachable(int face) const { return value[face] < kUnreachable; }
};

IndexTable index_table(const PlaneGraph& g, int edge_id);

/// Absolute index i(F) = min over outer edges e of i(F,e), which equals the
/// plain dual distance from O (checked internally). value[O] = 0.
struct AbsoluteIndexTable {
  std::vector<int> value;  // by face id
};

AbsoluteIndexTable absolute_index(const PlaneGraph& g);

/// Center-tail system: a center set of interior faces spanning a connected
/// subgraph of the dual, tails (simple dual paths from a center face to the
/// outer face, stored with the outer face id as last element), and an
/// opposite-tail assignment covering every outer edge. The tip of a tail is
/// its last face before the outer face.
struct CenterTailSystem {
  std::vector<int> center;
  std::vector<std::vector<int>> tails;
  std::map<int, int> assignment;  // outer edge id -> tail index
};

/// Checks all structural invariants; returns s or throws the specific
/// violation (CenterDisconnected, TailNotPath, TailNotReachingO,
/// AssignmentIncomplete).
const CenterTailSystem& validate_cts(const PlaneGraph& g,
                                     const CenterTailSystem& s);

/// Congestion indicator CI(S): the minimum of the three quantities below,
/// each possibly infinite (nullopt):
///   (1) min over dual-adjacent pairs F,H in the center and outer edges
///       f != h of i(F,f) + i(H,h) + 1; infinite when the center is a
///       single face;
///   (2) min over outer edges e of i(t(e), e) + 1;
///   (3) min over outer edges e, consecutive tail faces F -> F~ along N(e)
///       walked from the center toward the tip, and outer edges e~ != e of
///       i(F,e) + i(F~,e~) + 1.
/// CI(S) is a lower bound on the spanning tree congestion.
struct CongestionIndicator {
  std::optional<int> value;
  std::optional<int> min1, min2, min3;
  /// 1, 2 or 3: the first minimum attaining value (0 when infinite).
  int which = 0;
  /// Attaining tuple; meaning depends on `which`:
  ///   which == 1: (face_a=F, face_b=H, edge_a=f, edge_b=h)
  ///   which == 2: (face_a=t(e), edge_a=e)
  ///   which == 3: (face_a=F, face_b=F~, edge_a=e, edge_b=e~)
  struct Witness {
    int face_a = -1, face_b = -1, edge_a = -1, edge_b = -1;
  };
  Witness witness;
};

CongestionIndicator congestion_indicator(const PlaneGraph& g,
                                         const CenterTailSystem& s);

/// Upper bound via the dual BFS tree rooted at the outer face: its primal
/// complement is a spanning tree T, and ec(G:T) never exceeds
/// max(i(F) + i(F~)) + 1 over edge-sharing face pairs, with the outer face
/// counting 1. BFS ties break toward the smallest face id, then the
/// smallest dual edge id.
struct BfsDualBound {
  SpanningTree tree;
  DualTree dual_tree_edges;
  CongestionReport report;  // report.max_congestion == ec(G:T)
  int bound = 0;
};

BfsDualBound bfs_upper_bound(const PlaneGraph& g);

/// Largest congestion indicator over the supplied systems: a certified
/// lower bound on s(G). Throws EmptySystemList when given none; nullopt
/// (no finite bound) when the best indicator is infinite.
std::optional<int> best_lower_bound(const PlaneGraph& g,
                                    std::span<const CenterTailSystem> systems);

}  // namespace stc
