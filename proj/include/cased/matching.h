#ifndef CASED_MATCHING_H
#define CASED_MATCHING_H

#include "cased/numeric.h"

#include <vector>

namespace cased {

struct MatchingEdge {
    int u = 0, v = 0;
    long long weight = 0; // nonnegative
};

struct PerfectMatching {
    std::vector<int> partner; // partner[v] for every node
    long long total_weight = 0;
};

/// Exact minimum-weight perfect matching on a general graph (blossom
/// primal-dual, O(n^3)).  Nodes are 0..n-1, n even, weights nonnegative;
/// the edge set must admit a perfect matching (throws Error otherwise).
/// Deterministic for a fixed input.
PerfectMatching min_weight_perfect_matching(int n, const std::vector<MatchingEdge>& edges);

} // namespace cased

#endif
