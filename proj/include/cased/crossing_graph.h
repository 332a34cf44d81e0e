#ifndef CASED_CROSSING_GRAPH_H
#define CASED_CROSSING_GRAPH_H

#include "cased/arrangement.h"
#include "cased/sqrt_sum.h"

#include <optional>
#include <vector>

namespace cased {

/// One node per drawing edge, one link per crossing pair.
struct CrossingGraph {
    int node_count = 0;
    struct Link {
        CrossingId crossing;
        EdgeIndex a, b; // a < b
    };
    std::vector<Link> links;                      // sorted by crossing id
    std::vector<std::vector<int>> incident_links; // per node, link indices
};

CrossingGraph build_crossing_graph(const Arrangement& arr);

/// For each crossing, which of the two edges is drawn on top.
struct Casing {
    std::vector<bool> a_on_top; // indexed by crossing id

    EdgeIndex top(const Crossing& c) const { return a_on_top[c.id] ? c.edge_a : c.edge_b; }
    EdgeIndex bottom(const Crossing& c) const { return a_on_top[c.id] ? c.edge_b : c.edge_a; }
    bool on_top(const Crossing& c, EdgeIndex e) const { return top(c) == e; }

    /// Flips the top edge at every crossing.
    Casing complement() const;
};

/// Parity-constraint view of a drawing: one node per (edge, crossing)
/// incidence, a hard UNEQUAL constraint joining the two incidences of each
/// crossing, and a soft EQUAL constraint joining consecutive incidences
/// along an edge.  Switches of a casing are its violated soft links.
struct ConstraintGraph {
    struct Incidence {
        EdgeIndex edge;
        CrossingId crossing;
        int rank; // position among the edge's crossings
    };
    struct SoftLink {
        int inc_a, inc_b;
        PortionId separating_portion; // the between-crossings portion joining them
    };
    struct HardLink {
        int inc_a, inc_b;
        CrossingId crossing;
    };
    std::vector<Incidence> incidences; // grouped by edge, ordered along it
    std::vector<HardLink> hard_links;  // one per crossing
    std::vector<SoftLink> soft_links;
    std::vector<std::vector<int>> edge_incidences; // per edge

    int incidence_of(EdgeIndex e, int rank) const { return edge_incidences[e][rank]; }

    /// Incidence booleans induced by a casing ("this edge is on top here").
    std::vector<bool> induced_values(const Arrangement& arr, const Casing& c) const;
    /// Soft links violated by a casing; its switches.
    int count_violated_soft_links(const Arrangement& arr, const Casing& c) const;
};

ConstraintGraph build_constraint_graph(const Arrangement& arr);

/// Largest-first metrics of a casing.  Optional distance fields are empty
/// when no edge carries two tunnels (the minimum is vacuous / +infinity).
struct EdgeMetrics {
    int switches = 0;
    int tunnels = 0;
    int bridges = 0;
    SqrtSum tunnel_length_total;
    std::optional<Rational> min_tunnel_distance_sq;
};

struct ObjectiveReport {
    std::vector<EdgeMetrics> per_edge;
    long long total_switches = 0;
    int max_switches = 0;
    int max_tunnels = 0;
    SqrtSum max_tunnel_length;
    std::optional<Rational> min_tunnel_distance_sq;

    // context filled by the switches solver
    std::optional<int> odd_face_count;
    std::optional<int> switch_lower_bound;
};

/// If the crossing graph is 2-colorable, the casing that places every
/// color-A edge above every color-B edge (zero switches); otherwise nothing.
/// Coloring is breadth-first from the lowest edge id in each component.
std::optional<Casing> zero_switch_casing(const Arrangement& arr);

/// Evaluates a casing.  Tunnel distances are centre-to-centre between
/// crossing points along the shared edge.  Throws Error("casing-mismatch")
/// when the casing does not cover exactly the arrangement's crossings.
ObjectiveReport casing_metrics(const Arrangement& arr, const Casing& c);

} // namespace cased

#endif
