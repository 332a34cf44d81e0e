#ifndef CASED_SWITCHES_H
#define CASED_SWITCHES_H

#include "cased/crossing_graph.h"
#include "cased/matching.h"

#include <vector>

namespace cased {

/// Faces whose face polygon has odd complexity, in face-id order.
struct OddFaceSet {
    std::vector<FaceId> faces;
    int count() const { return static_cast<int>(faces.size()); }
};

OddFaceSet odd_face_polygons(const Arrangement& arr);

/// Unit-cost distances in the arrangement dual restricted to arcs that cross
/// between-crossings portions.  Row/column q is the unbounded face.
struct DualDistances {
    static constexpr int kUnreachable = -1;
    std::vector<std::vector<int>> dist; // (q+1) x (q+1)
    int between(int i, int j) const { return dist[i][j]; }
};

DualDistances dual_distances(const Arrangement& arr, const OddFaceSet& odd);

/// Matching instance over 2q nodes: q odd-face nodes (0..q-1) and q outer
/// copies (q..2q-1).  Odd faces pair with each other at their dual distance,
/// with their own outer copy at the distance to the unbounded face, and the
/// outer copies pair among themselves for free; a break path may always end
/// in the unbounded region, which keeps the instance feasible for odd q.
struct MatchingInstance {
    int odd_face_count = 0;
    std::vector<MatchingEdge> edges;
    int node_count() const { return 2 * odd_face_count; }
};

MatchingInstance build_matching_instance(const DualDistances& dd, const OddFaceSet& odd);

/// Exact minimum-weight perfect matching on the instance; ties are broken by
/// greedily fixing, in node order, the lowest-weight (then lowest-index)
/// partner that preserves the optimal total.
PerfectMatching min_weight_perfect_matching(const MatchingInstance& inst);

/// Between-crossings portions to break, one break each.
struct BreakSet {
    std::vector<PortionId> portions; // sorted, unique
};

/// Everything solve_min_total_switches produces.
struct SwitchesSolution {
    Casing casing;
    ObjectiveReport report;
    int odd_face_count = 0;
    long long matching_weight = 0;
    BreakSet breaks;
};

/// MinTotalSwitches in the weaving model: degree-one transform, odd face
/// polygons, dual distances, minimum-weight matching, breaks along shortest
/// dual paths, then a 2-colouring of the relaxed constraint graph read off
/// as a casing of the original drawing.  The result's switch count equals
/// the matching weight.
SwitchesSolution solve_min_total_switches(const Drawing& d);

/// Lower bound ceil(o/2), where o counts the odd face polygons of the
/// degree-one transform.
int switch_lower_bound(const Arrangement& arr);

} // namespace cased

#endif
