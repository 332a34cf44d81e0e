#ifndef CASED_TUNNELS_H
#define CASED_TUNNELS_H

#include "cased/crossing_graph.h"
#include "cased/two_sat.h"

#include <optional>
#include <vector>

namespace cased {

/// Orientation of the crossing graph: directing a link toward an edge makes
/// that edge the tunnel side of the crossing, so a node's indegree is its
/// tunnel count.
struct Orientation {
    std::vector<bool> toward_b; // per link index: true when b is the tunnel side
    int max_indegree = 0;

    Casing to_casing(const Arrangement& arr, const CrossingGraph& g) const;
};

/// Orientation minimizing the maximum indegree, found by binary search on the
/// bound with a flow feasibility check.  Deterministic for a fixed input.
Orientation min_max_indegree_orientation(const CrossingGraph& g);

struct TunnelsSolution {
    Casing casing;
    ObjectiveReport report;
    int max_tunnels = 0;
};

/// MinMaxTunnels in the weaving model via the indegree orientation.
TunnelsSolution solve_min_max_tunnels_weaving(const Drawing& d);

/// Sorted distinct squared distances between pairs of crossings sharing an
/// edge: the only possible optima for MaxMinTunnelDistance.
struct CandidateSet {
    std::vector<Rational> squared; // strictly increasing
    size_t pair_count = 0;         // total pairs before deduplication
    bool empty() const { return squared.empty(); }
};

CandidateSet candidate_distances(const Arrangement& arr);

/// The decision side of MaxMinTunnelDistance: one variable per crossing of
/// edges i < j (true when the lower-indexed edge has a bridge there); for
/// every pair of crossings along an edge at squared distance strictly below
/// the threshold, a clause forbids both being tunnels for that edge.
/// Returns the instance so tests can inspect the clause structure.
struct DistanceDecision {
    TwoSat formula;
    std::vector<std::array<int, 2>> clause_literals; // (literal index pairs, by crossing id)
    std::vector<std::array<bool, 2>> clause_negated;
};

DistanceDecision build_distance_decision(const Arrangement& arr, const Rational& delta_sq);

/// Satisfying casing with min tunnel distance >= delta, or nothing.
std::optional<Casing> max_min_distance_feasible(const Arrangement& arr,
                                                const Rational& delta_sq);

struct MaxMinDistanceSolution {
    Casing casing;
    ObjectiveReport report;
    bool unbounded = false;              // some casing leaves every edge with < 2 tunnels
    std::optional<Rational> best_sq;     // delta*^2 when bounded
};

/// Binary search over the candidate set with the 2-SAT decision.
MaxMinDistanceSolution solve_max_min_tunnel_distance_weaving(const Drawing& d);

struct TunnelLengthSolution {
    Casing casing;
    ObjectiveReport report;
    SqrtSum value; // max per-edge total tunnel length
    long long explored_nodes = 0;
};

/// Exact MinMaxTunnelLength in the weaving model (the problem is NP-hard, so
/// this is a branch-and-bound over per-crossing choices with an explicit
/// node budget).  Throws BudgetExceeded when the search tree outgrows it.
TunnelLengthSolution solve_min_max_tunnel_length_exact(const Drawing& d,
                                                       long long node_budget = 4'000'000);

} // namespace cased

#endif
