#include "cased/drawing.h"

#include <algorithm>
#include <map>
#include <set>

namespace cased {

void Drawing::normalize() {
    std::sort(vertices.begin(), vertices.end(),
              [](const DrawingVertex& a, const DrawingVertex& b) { return a.id < b.id; });
    std::sort(edges.begin(), edges.end(),
              [](const DrawingEdge& a, const DrawingEdge& b) { return a.id < b.id; });
    for (size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i].id == vertices[i - 1].id)
            throw InputError("duplicate vertex id " + std::to_string(vertices[i].id));
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i].id == edges[i - 1].id)
            throw InputError("duplicate edge id " + std::to_string(edges[i].id));
    for (const auto& e : edges) {
        if (vertex_index(e.u) < 0 || vertex_index(e.v) < 0)
            throw InputError("edge " + std::to_string(e.id) + " references a missing vertex");
        if (vertex_pos(e.u) == vertex_pos(e.v))
            throw InputError("edge " + std::to_string(e.id) + " has zero length");
    }
    if (casing_width <= 0)
        throw InputError("casing_width must be positive");
}

int Drawing::vertex_index(int vertex_id) const {
    auto it = std::lower_bound(
        vertices.begin(), vertices.end(), vertex_id,
        [](const DrawingVertex& v, int id) { return v.id < id; });
    if (it == vertices.end() || it->id != vertex_id)
        return -1;
    return static_cast<int>(it - vertices.begin());
}

const Point& Drawing::vertex_pos(int vertex_id) const {
    int i = vertex_index(vertex_id);
    if (i < 0)
        throw InputError("unknown vertex id " + std::to_string(vertex_id));
    return vertices[i].pos;
}

Segment Drawing::segment(size_t edge_index) const {
    const DrawingEdge& e = edges.at(edge_index);
    return {vertex_pos(e.u), vertex_pos(e.v)};
}

std::vector<int> Drawing::vertex_degrees() const {
    std::vector<int> deg(vertices.size(), 0);
    for (const auto& e : edges) {
        deg[vertex_index(e.u)]++;
        deg[vertex_index(e.v)]++;
    }
    return deg;
}

namespace {

std::string edge_label(const Drawing& d, size_t i) { return "edge " + std::to_string(d.edges[i].id); }

} // namespace

ValidationReport validate_drawing(const Drawing& d, std::optional<Rational> near_tolerance) {
    ValidationReport rep;
    Rational tol = near_tolerance.value_or(d.casing_width / 2);
    Rational tol_sq = tol * tol;

    const size_t m = d.edges.size();

    // (a) vertex on, or within tolerance of, a non-incident edge
    for (const auto& v : d.vertices) {
        for (size_t j = 0; j < m; ++j) {
            const auto& e = d.edges[j];
            if (e.u == v.id || e.v == v.id)
                continue;
            if (point_segment_dist_sq(v.pos, d.segment(j)) <= tol_sq) {
                rep.errors.push_back(
                    {ValidationIssue::Kind::VertexNearEdge,
                     "vertex " + std::to_string(v.id) + " lies on or near " + edge_label(d, j)});
            }
        }
    }

    // pairwise crossings, plus (c) overlaps
    struct Cross {
        size_t i, j;
        Point p;
        Rational ti, tj;
    };
    std::vector<Cross> crossings;
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            auto r = segment_intersection(d.segment(i), d.segment(j));
            if (r.kind == SegmentIntersection::Kind::Overlap) {
                rep.errors.push_back({ValidationIssue::Kind::EdgeOverlap,
                                      edge_label(d, i) + " and " + edge_label(d, j) +
                                          " overlap along a positive length"});
            } else if (r.kind == SegmentIntersection::Kind::Crossing) {
                crossings.push_back({i, j, r.point, r.param_a, r.param_b});
            }
        }
    }

    // (b) three or more edges concurrent in one point
    std::map<Point, std::set<size_t>> at_point;
    for (const auto& c : crossings) {
        at_point[c.p].insert(c.i);
        at_point[c.p].insert(c.j);
    }
    for (const auto& [p, edges_here] : at_point) {
        if (edges_here.size() >= 3) {
            std::string msg = "edges";
            for (size_t i : edges_here)
                msg += " " + std::to_string(d.edges[i].id);
            msg += " are concurrent at (" + format_exact(p.x) + ", " + format_exact(p.y) + ")";
            rep.errors.push_back({ValidationIssue::Kind::TripleCrossing, msg});
        }
    }

    // (d) crossings whose tunnel footprints interfere along a shared edge.
    // Footprint half-length at a crossing is tunnel_length/2.
    std::vector<std::vector<const Cross*>> per_edge(m);
    for (const auto& c : crossings) {
        per_edge[c.i].push_back(&c);
        per_edge[c.j].push_back(&c);
    }
    for (size_t e = 0; e < m; ++e) {
        auto& list = per_edge[e];
        std::sort(list.begin(), list.end(), [&](const Cross* a, const Cross* b) {
            return (a->i == e ? a->ti : a->tj) < (b->i == e ? b->ti : b->tj);
        });
        for (size_t a = 0; a + 1 < list.size(); ++a) {
            const Cross* c1 = list[a];
            const Cross* c2 = list[a + 1];
            auto half_footprint = [&](const Cross* c) {
                Point d1 = d.segment(c->i).dir(), d2 = d.segment(c->j).dir();
                SqrtSum len = tunnel_length(d.casing_width, crossing_sin_sq(d1, d2));
                return len.scale(Rational(1, 2));
            };
            SqrtSum reach = half_footprint(c1) + half_footprint(c2);
            SqrtSum dist = SqrtSum::of_sqrt(norm_sq(c2->p - c1->p));
            if (SqrtSum::compare(dist, reach) < 0) {
                rep.warnings.push_back(
                    {ValidationIssue::Kind::CrossingsTooClose,
                     "crossings on " + edge_label(d, e) + " at (" + format_exact(c1->p.x) + ", " +
                         format_exact(c1->p.y) + ") and (" + format_exact(c2->p.x) + ", " +
                         format_exact(c2->p.y) + ") are closer than their casing footprints"});
            }
        }
    }

    return rep;
}

void require_valid(const Drawing& d, std::optional<Rational> near_tolerance) {
    ValidationReport rep = validate_drawing(d, near_tolerance);
    if (!rep.ok()) {
        std::string msg = "drawing failed validation:";
        for (const auto& e : rep.errors)
            msg += "\n  " + e.message;
        throw ValidationFailed(msg);
    }
}

namespace {

// Clip parameter strictly inside (lo, hi), moved toward lo until the clipped
// endpoint avoids exact incidence with every other edge.
Rational pick_clip_param(const Drawing& d, size_t edge_index, const Rational& lo,
                         const Rational& hi) {
    Segment s = d.segment(edge_index);
    Rational t = (lo + hi) / 2;
    for (int attempt = 0; attempt < 128; ++attempt) {
        Point p = s.at(t);
        bool clean = true;
        for (size_t j = 0; j < d.edges.size() && clean; ++j) {
            if (j == edge_index)
                continue;
            if (point_on_segment(p, d.segment(j)))
                clean = false;
        }
        if (clean)
            return t;
        t = (lo + t) / 2;
    }
    throw Error("degree_one_transform: could not place a clip point");
}

} // namespace

Drawing degree_one_transform(const Drawing& d) {
    const size_t m = d.edges.size();

    // crossing parameters along every edge
    std::vector<std::vector<Rational>> params(m);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            auto r = segment_intersection(d.segment(i), d.segment(j));
            if (r.kind == SegmentIntersection::Kind::Overlap)
                throw ValidationFailed("degree_one_transform: overlapping edges");
            if (r.kind == SegmentIntersection::Kind::Crossing) {
                params[i].push_back(r.param_a);
                params[j].push_back(r.param_b);
            }
        }
    }

    Drawing out;
    out.casing_width = d.casing_width;
    int next_vertex = 0;
    for (size_t i = 0; i < m; ++i) {
        auto& ps = params[i];
        std::sort(ps.begin(), ps.end());
        Rational lo_limit = ps.empty() ? Rational(1, 2) : ps.front();
        Rational hi_limit = ps.empty() ? Rational(1, 2) : ps.back();
        Rational ta = pick_clip_param(d, i, Rational(0), lo_limit);
        Rational tb_rev = pick_clip_param(d, i, Rational(0), 1 - hi_limit);
        Segment s = d.segment(i);
        int va = next_vertex++;
        int vb = next_vertex++;
        out.vertices.push_back({va, s.at(ta)});
        out.vertices.push_back({vb, s.at(1 - tb_rev)});
        out.edges.push_back({d.edges[i].id, va, vb});
    }
    out.normalize();
    return out;
}

} // namespace cased
