#ifndef CASED_DRAWING_H
#define CASED_DRAWING_H

#include "cased/geometry.h"

#include <optional>
#include <string>
#include <vector>

namespace cased {

struct DrawingVertex {
    int id = 0;
    Point pos;
};

struct DrawingEdge {
    int id = 0;
    int u = 0, v = 0; // vertex ids
};

/// Straight-line drawing of a graph with exact rational coordinates.
/// Vertices and edges are kept sorted by id; most operations address edges
/// by their index in that order.
struct Drawing {
    std::vector<DrawingVertex> vertices;
    std::vector<DrawingEdge> edges;
    Rational casing_width = Rational(1, 10);

    /// Sorts by id and checks structural invariants: distinct ids, resolvable
    /// endpoints, no zero-length edge, positive casing width.
    /// Throws InputError on violation.
    void normalize();

    int vertex_index(int vertex_id) const; // -1 if absent
    const Point& vertex_pos(int vertex_id) const;
    Segment segment(size_t edge_index) const;
    size_t edge_count() const { return edges.size(); }

    /// Degree of each vertex, aligned with `vertices`.
    std::vector<int> vertex_degrees() const;
};

struct ValidationIssue {
    enum class Kind {
        VertexNearEdge,    // vertex on or within tolerance of a non-incident edge
        TripleCrossing,    // three or more edges concurrent in one point
        EdgeOverlap,       // two edges share a positive-length stretch
        CrossingsTooClose, // warning: tunnel footprints on a shared edge interfere
    };
    Kind kind;
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> errors;
    std::vector<ValidationIssue> warnings;
    bool ok() const { return errors.empty(); }
};

/// Checks the input restrictions: (a) no vertex on or near a non-incident
/// edge, (b) no triple crossings, (c) no positive-length overlaps, and warns
/// when (d) two crossings on a shared edge sit closer than the sum of their
/// tunnel footprint half-lengths.  `near_tolerance` defaults to half the
/// casing width.
ValidationReport validate_drawing(const Drawing& d,
                                  std::optional<Rational> near_tolerance = std::nullopt);

/// Throws ValidationFailed when the report has errors.
void require_valid(const Drawing& d, std::optional<Rational> near_tolerance = std::nullopt);

/// Clips every edge strictly inside its endpoints (but outside its crossings)
/// so that every vertex of the result has degree exactly one.  Crossings are
/// preserved point-for-point with the same edge ids; isolated vertices are
/// dropped.  Casings and switch counts of the result correspond one-for-one
/// with the input's.
Drawing degree_one_transform(const Drawing& d);

} // namespace cased

#endif
