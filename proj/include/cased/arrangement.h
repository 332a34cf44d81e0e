#ifndef CASED_ARRANGEMENT_H
#define CASED_ARRANGEMENT_H

#include "cased/drawing.h"

#include <vector>

namespace cased {

using CrossingId = int;
using PortionId = int;
using FaceId = int;
using EdgeIndex = int; // position in Drawing::edges (sorted by id)

/// A transversal interior intersection of two edges.
struct Crossing {
    CrossingId id = -1;
    EdgeIndex edge_a = -1, edge_b = -1; // edge_a < edge_b
    Point point;
    Rational param_a, param_b; // position along each edge, in (0,1)
    Rational sin_sq;           // sin^2 of the crossing angle, in (0,1]

    EdgeIndex other(EdgeIndex e) const { return e == edge_a ? edge_b : edge_a; }
    const Rational& param_on(EdgeIndex e) const { return e == edge_a ? param_a : param_b; }
};

enum class PortionKind {
    BetweenCrossings, // both ends are crossings
    EndpointAdjacent, // at least one end is a drawing vertex
};

/// Maximal sub-segment of an edge between two consecutive events
/// (endpoint or crossing).
struct Portion {
    PortionId id = -1;
    EdgeIndex edge = -1;
    int index_on_edge = 0;
    int sub_from = -1, sub_to = -1; // subdivision vertex ids
    Rational param_from, param_to;
    PortionKind kind = PortionKind::EndpointAdjacent;
    FaceId face_fwd = -1; // face to the left when walking sub_from -> sub_to
    FaceId face_rev = -1; // face to the left when walking sub_to -> sub_from
    int cycle_fwd = -1;   // boundary cycle of the forward side
    int cycle_rev = -1;
    bool two_sided() const { return face_fwd == face_rev; }
};

/// One closed boundary walk of a face.  A face with islands has several;
/// the walk around a component seen from outside is its outer walk.  The
/// parity of corners turned at crossings decides whether the cycle forces
/// a switch: it is exactly the parity of the corresponding cycle in the
/// parity-constraint view of the drawing.
struct BoundaryCycle {
    int id = -1;
    FaceId face = -1;
    bool outer_walk = false;
    int crossing_corners = 0;
    bool odd() const { return crossing_corners % 2 == 1; }
};

/// Connected component of the plane minus all edges.
struct Face {
    FaceId id = -1;
    bool bounded = false;
    std::vector<PortionId> boundary;    // portions on the face boundary, unique, sorted
    std::vector<int> interior_vertices; // drawing vertex ids strictly inside the open face
};

/// Parity data of a face: if the face's one-sided boundary portions form a
/// single simple cycle of between-crossings portions, that cycle is the
/// face polygon and complexity = cycle length + graph vertices inside it.
struct FaceRecord {
    FaceId face = -1;
    bool has_polygon = false;
    std::vector<PortionId> polygon; // in cycle order when has_polygon
    int boundary_segment_count = 0; // 0 without a polygon
    int interior_vertex_count = 0;
    int complexity = 0;
    bool is_odd = false;
};

struct Arrangement {
    Drawing drawing;
    std::vector<Crossing> crossings; // sorted by (edge_a, edge_b)
    std::vector<std::vector<CrossingId>> per_edge; // per edge, sorted by param
    std::vector<Portion> portions;
    std::vector<std::vector<PortionId>> edge_portions; // per edge, in param order
    std::vector<Face> faces;
    std::vector<FaceRecord> face_records; // aligned with faces
    std::vector<BoundaryCycle> boundary_cycles;
    FaceId unbounded_face = -1;

    // subdivision statistics (for Euler-style consistency checks)
    int subdivision_vertex_count = 0;
    int subdivision_component_count = 0;

    size_t crossing_count() const { return crossings.size(); }
    const Crossing* crossing_between(EdgeIndex a, EdgeIndex b) const;
    /// Position of crossing c in per_edge[e]; -1 when absent.
    int crossing_rank_on_edge(CrossingId c, EdgeIndex e) const;
};

/// Finds all pairwise crossings, splits edges into portions, and extracts the
/// faces of the complement with their parity records.  Exact arithmetic
/// throughout.  Throws ValidationFailed on inputs whose topology is not
/// well defined (overlaps, concurrent triples, a vertex exactly on a
/// non-incident edge).
Arrangement build_arrangement(const Drawing& d);

} // namespace cased

#endif
