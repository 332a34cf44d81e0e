#include "cased/arrangement.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cased {

const Crossing* Arrangement::crossing_between(EdgeIndex a, EdgeIndex b) const {
    if (a > b)
        std::swap(a, b);
    auto it = std::lower_bound(crossings.begin(), crossings.end(), std::make_pair(a, b),
                               [](const Crossing& c, const std::pair<EdgeIndex, EdgeIndex>& key) {
                                   return std::make_pair(c.edge_a, c.edge_b) < key;
                               });
    if (it == crossings.end() || it->edge_a != a || it->edge_b != b)
        return nullptr;
    return &*it;
}

int Arrangement::crossing_rank_on_edge(CrossingId c, EdgeIndex e) const {
    const auto& list = per_edge[e];
    for (size_t i = 0; i < list.size(); ++i)
        if (list[i] == c)
            return static_cast<int>(i);
    return -1;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Half-edge h = 2*portion + dir; dir 0 walks sub_from -> sub_to.
struct Dcel {
    const std::vector<Portion>& portions;
    const std::vector<Point>& sub_points;

    explicit Dcel(const std::vector<Portion>& ps, const std::vector<Point>& pts)
        : portions(ps), sub_points(pts) {}

    int tail(int h) const { return (h & 1) ? portions[h >> 1].sub_to : portions[h >> 1].sub_from; }
    int head(int h) const { return (h & 1) ? portions[h >> 1].sub_from : portions[h >> 1].sub_to; }
    const Point& tail_pos(int h) const { return sub_points[tail(h)]; }
    const Point& head_pos(int h) const { return sub_points[head(h)]; }
    Point dir(int h) const { return head_pos(h) - tail_pos(h); }
};

// Upper half-plane (angle in [0, pi)) first, then by cross product.
bool angle_less(const Point& a, const Point& b) {
    auto half = [](const Point& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb)
        return ha < hb;
    return cross(a, b) > 0;
}

// Crossing-parity point-in-polygon over an arbitrary closed walk (spur
// segments are traversed twice and cancel).  The probe must not lie on the
// walk.  Ray shoots toward -x.
bool inside_walk(const Point& probe, const std::vector<int>& walk, const Dcel& dcel) {
    bool inside = false;
    for (int h : walk) {
        const Point& p = dcel.tail_pos(h);
        const Point& q = dcel.head_pos(h);
        if ((p.y > probe.y) == (q.y > probe.y))
            continue;
        Rational x_int = p.x + (probe.y - p.y) * (q.x - p.x) / (q.y - p.y);
        if (x_int < probe.x)
            inside = !inside;
    }
    return inside;
}

bool inside_polygon(const Point& probe, const std::vector<Point>& poly) {
    bool inside = false;
    size_t n = poly.size();
    for (size_t i = 0; i < n; ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % n];
        if ((p.y > probe.y) == (q.y > probe.y))
            continue;
        Rational x_int = p.x + (probe.y - p.y) * (q.x - p.x) / (q.y - p.y);
        if (x_int < probe.x)
            inside = !inside;
    }
    return inside;
}

} // namespace

Arrangement build_arrangement(const Drawing& input) {
    Arrangement arr;
    arr.drawing = input;
    arr.drawing.normalize();
    const Drawing& d = arr.drawing;
    const size_t m = d.edges.size();

    // Exact incidences that would make the subdivision ill-defined are
    // rejected here regardless of the caller's tolerance policy.
    for (const auto& v : d.vertices) {
        for (size_t j = 0; j < m; ++j) {
            const auto& e = d.edges[j];
            if (e.u == v.id || e.v == v.id)
                continue;
            if (point_on_segment(v.pos, d.segment(j)))
                throw ValidationFailed("vertex " + std::to_string(v.id) +
                                       " lies exactly on edge " + std::to_string(e.id));
        }
    }

    // all pairwise crossings, already in lexicographic (edge_a, edge_b) order
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = i + 1; j < m; ++j) {
            auto r = segment_intersection(d.segment(i), d.segment(j));
            if (r.kind == SegmentIntersection::Kind::Overlap)
                throw ValidationFailed("edges " + std::to_string(d.edges[i].id) + " and " +
                                       std::to_string(d.edges[j].id) + " overlap");
            if (r.kind != SegmentIntersection::Kind::Crossing)
                continue;
            Crossing c;
            c.id = static_cast<CrossingId>(arr.crossings.size());
            c.edge_a = static_cast<EdgeIndex>(i);
            c.edge_b = static_cast<EdgeIndex>(j);
            c.point = r.point;
            c.param_a = r.param_a;
            c.param_b = r.param_b;
            c.sin_sq = crossing_sin_sq(d.segment(i).dir(), d.segment(j).dir());
            arr.crossings.push_back(std::move(c));
        }
    }

    {
        std::map<Point, std::set<EdgeIndex>> at_point;
        for (const auto& c : arr.crossings) {
            auto& s = at_point[c.point];
            s.insert(c.edge_a);
            s.insert(c.edge_b);
            if (s.size() >= 3)
                throw ValidationFailed("three or more edges concurrent at (" +
                                       format_exact(c.point.x) + ", " + format_exact(c.point.y) +
                                       ")");
        }
    }

    arr.per_edge.assign(m, {});
    for (const auto& c : arr.crossings) {
        arr.per_edge[c.edge_a].push_back(c.id);
        arr.per_edge[c.edge_b].push_back(c.id);
    }
    for (size_t e = 0; e < m; ++e) {
        std::sort(arr.per_edge[e].begin(), arr.per_edge[e].end(),
                  [&](CrossingId a, CrossingId b) {
                      return arr.crossings[a].param_on(static_cast<EdgeIndex>(e)) <
                             arr.crossings[b].param_on(static_cast<EdgeIndex>(e));
                  });
    }

    // subdivision vertices: deduplicated endpoints and crossing points
    std::map<Point, int> sub_index;
    std::vector<Point> sub_points;
    auto subv = [&](const Point& p) {
        auto [it, fresh] = sub_index.try_emplace(p, static_cast<int>(sub_points.size()));
        if (fresh)
            sub_points.push_back(p);
        return it->second;
    };

    arr.edge_portions.assign(m, {});
    for (size_t e = 0; e < m; ++e) {
        Segment s = d.segment(e);
        struct Event {
            Rational param;
            int sub;
            bool is_crossing;
        };
        std::vector<Event> events;
        events.push_back({Rational(0), subv(s.a), false});
        for (CrossingId cid : arr.per_edge[e])
            events.push_back({arr.crossings[cid].param_on(static_cast<EdgeIndex>(e)),
                              subv(arr.crossings[cid].point), true});
        events.push_back({Rational(1), subv(s.b), false});
        for (size_t i = 0; i + 1 < events.size(); ++i) {
            Portion p;
            p.id = static_cast<PortionId>(arr.portions.size());
            p.edge = static_cast<EdgeIndex>(e);
            p.index_on_edge = static_cast<int>(i);
            p.sub_from = events[i].sub;
            p.sub_to = events[i + 1].sub;
            p.param_from = events[i].param;
            p.param_to = events[i + 1].param;
            p.kind = events[i].is_crossing && events[i + 1].is_crossing
                         ? PortionKind::BetweenCrossings
                         : PortionKind::EndpointAdjacent;
            arr.edge_portions[e].push_back(p.id);
            arr.portions.push_back(std::move(p));
        }
    }

    arr.subdivision_vertex_count = static_cast<int>(sub_points.size());

    Dcel dcel(arr.portions, sub_points);
    const int H = static_cast<int>(arr.portions.size()) * 2;

    // rotation system: outgoing half-edges sorted counterclockwise
    std::vector<std::vector<int>> outgoing(sub_points.size());
    for (int h = 0; h < H; ++h)
        outgoing[dcel.tail(h)].push_back(h);
    std::vector<int> rotation_pos(H, 0);
    for (auto& list : outgoing) {
        std::sort(list.begin(), list.end(),
                  [&](int a, int b) { return angle_less(dcel.dir(a), dcel.dir(b)); });
        for (size_t i = 0; i < list.size(); ++i)
            rotation_pos[list[i]] = static_cast<int>(i);
    }
    auto next_halfedge = [&](int h) {
        int tw = h ^ 1; // outgoing from head(h)
        const auto& list = outgoing[dcel.tail(tw)];
        int i = rotation_pos[tw];
        return list[(i + list.size() - 1) % list.size()];
    };

    std::vector<bool> sub_is_crossing(sub_points.size(), false);
    for (const auto& c : arr.crossings)
        sub_is_crossing[sub_index.at(c.point)] = true;

    // face walks: orbits of next(), interior to the left
    std::vector<int> orbit_of(H, -1);
    std::vector<std::vector<int>> orbits;
    std::vector<Rational> orbit_area2;  // twice the signed area
    std::vector<int> orbit_corners;     // corners turned at crossing vertices
    for (int h0 = 0; h0 < H; ++h0) {
        if (orbit_of[h0] >= 0)
            continue;
        int id = static_cast<int>(orbits.size());
        std::vector<int> walk;
        Rational area2 = 0;
        int corners = 0;
        int h = h0;
        do {
            orbit_of[h] = id;
            walk.push_back(h);
            area2 += cross(dcel.tail_pos(h), dcel.head_pos(h));
            if (sub_is_crossing[dcel.head(h)])
                ++corners;
            h = next_halfedge(h);
        } while (h != h0);
        orbits.push_back(std::move(walk));
        orbit_area2.push_back(std::move(area2));
        orbit_corners.push_back(corners);
    }

    // connected components of the union of edges
    Dsu dsu(static_cast<int>(sub_points.size()));
    for (const auto& p : arr.portions)
        dsu.unite(p.sub_from, p.sub_to);
    std::map<int, std::vector<int>> components; // root -> orbit ids
    std::vector<int> orbit_component(orbits.size(), -1);
    for (size_t o = 0; o < orbits.size(); ++o) {
        int root = dsu.find(dcel.tail(orbits[o][0]));
        orbit_component[o] = root;
        components[root].push_back(static_cast<int>(o));
    }
    arr.subdivision_component_count = static_cast<int>(components.size());

    // one orbit per component encloses nothing (area <= 0): its outer walk
    std::vector<int> outer_walk_orbits;
    std::vector<int> face_of_orbit(orbits.size(), -1);
    for (auto& [root, orbit_ids] : components) {
        int outer = -1;
        for (int o : orbit_ids) {
            if (orbit_area2[o] <= 0) {
                if (outer >= 0)
                    throw Error("arrangement: component with two outer walks");
                outer = o;
            }
        }
        if (outer < 0)
            throw Error("arrangement: component without an outer walk");
        outer_walk_orbits.push_back(outer);
    }

    // bounded face per positive orbit
    for (size_t o = 0; o < orbits.size(); ++o) {
        if (orbit_area2[o] <= 0)
            continue;
        Face f;
        f.id = static_cast<FaceId>(arr.faces.size());
        f.bounded = true;
        face_of_orbit[o] = f.id;
        arr.faces.push_back(std::move(f));
    }
    Face unbounded;
    unbounded.id = static_cast<FaceId>(arr.faces.size());
    unbounded.bounded = false;
    arr.faces.push_back(std::move(unbounded));
    arr.unbounded_face = arr.faces.back().id;

    // Each component's outer walk lies inside the smallest positive orbit of
    // another component that contains it, or in the unbounded face.
    auto containing_face = [&](const Point& probe, int skip_component) -> FaceId {
        FaceId best = arr.unbounded_face;
        const Rational* best_area = nullptr;
        for (size_t o = 0; o < orbits.size(); ++o) {
            if (orbit_area2[o] <= 0 || orbit_component[o] == skip_component)
                continue;
            if (!inside_walk(probe, orbits[o], dcel))
                continue;
            if (best_area == nullptr || orbit_area2[o] < *best_area) {
                best = face_of_orbit[o];
                best_area = &orbit_area2[o];
            }
        }
        return best;
    };
    std::sort(outer_walk_orbits.begin(), outer_walk_orbits.end());
    for (int o : outer_walk_orbits) {
        int comp = orbit_component[o];
        int probe_sub = dcel.tail(orbits[o][0]);
        for (int h : orbits[o]) {
            if (sub_points[dcel.tail(h)] < sub_points[probe_sub])
                probe_sub = dcel.tail(h);
        }
        face_of_orbit[o] = containing_face(sub_points[probe_sub], comp);
    }

    // boundary cycles: one per orbit, carrying the crossing-corner parity
    for (size_t o = 0; o < orbits.size(); ++o) {
        BoundaryCycle cycle;
        cycle.id = static_cast<int>(o);
        cycle.face = face_of_orbit[o];
        cycle.outer_walk = orbit_area2[o] <= 0;
        cycle.crossing_corners = orbit_corners[o];
        arr.boundary_cycles.push_back(cycle);
    }

    // portion/face incidences and face boundaries
    for (auto& p : arr.portions) {
        p.cycle_fwd = orbit_of[2 * p.id];
        p.cycle_rev = orbit_of[2 * p.id + 1];
        p.face_fwd = face_of_orbit[p.cycle_fwd];
        p.face_rev = face_of_orbit[p.cycle_rev];
        arr.faces[p.face_fwd].boundary.push_back(p.id);
        if (p.face_rev != p.face_fwd)
            arr.faces[p.face_rev].boundary.push_back(p.id);
    }
    for (auto& f : arr.faces) {
        std::sort(f.boundary.begin(), f.boundary.end());
        f.boundary.erase(std::unique(f.boundary.begin(), f.boundary.end()), f.boundary.end());
    }

    // isolated drawing vertices live strictly inside a face
    {
        auto deg = d.vertex_degrees();
        for (size_t vi = 0; vi < d.vertices.size(); ++vi) {
            if (deg[vi] != 0)
                continue;
            FaceId f = containing_face(d.vertices[vi].pos, -1);
            arr.faces[f].interior_vertices.push_back(d.vertices[vi].id);
        }
    }

    // face polygons and parity records
    arr.face_records.resize(arr.faces.size());
    for (const auto& f : arr.faces) {
        FaceRecord& rec = arr.face_records[f.id];
        rec.face = f.id;
        if (!f.bounded)
            continue;
        std::vector<PortionId> one_sided;
        for (PortionId pid : f.boundary) {
            const Portion& p = arr.portions[pid];
            if ((p.face_fwd == f.id) != (p.face_rev == f.id))
                one_sided.push_back(pid);
        }
        if (one_sided.empty())
            continue;
        bool all_between = std::all_of(one_sided.begin(), one_sided.end(), [&](PortionId pid) {
            return arr.portions[pid].kind == PortionKind::BetweenCrossings;
        });
        if (!all_between)
            continue;
        // single simple cycle: every touched subdivision vertex has exactly
        // two incident one-sided portions and the cycle is connected
        std::map<int, std::vector<PortionId>> at_vertex;
        for (PortionId pid : one_sided) {
            at_vertex[arr.portions[pid].sub_from].push_back(pid);
            at_vertex[arr.portions[pid].sub_to].push_back(pid);
        }
        bool degree_ok = std::all_of(at_vertex.begin(), at_vertex.end(),
                                     [](const auto& kv) { return kv.second.size() == 2; });
        if (!degree_ok)
            continue;
        std::vector<PortionId> cycle;
        std::set<PortionId> seen;
        PortionId cur = one_sided.front();
        int enter = arr.portions[cur].sub_from;
        while (seen.insert(cur).second) {
            cycle.push_back(cur);
            const Portion& p = arr.portions[cur];
            int exit = p.sub_from == enter ? p.sub_to : p.sub_from;
            const auto& pair = at_vertex[exit];
            cur = pair[0] == cur ? pair[1] : pair[0];
            enter = exit;
        }
        if (cycle.size() != one_sided.size())
            continue;

        rec.has_polygon = true;
        rec.polygon = cycle;
        rec.boundary_segment_count = static_cast<int>(cycle.size());

        std::vector<Point> poly;
        int at = arr.portions[cycle[0]].sub_from;
        // orient the walk so consecutive portions chain through shared vertices
        if (cycle.size() > 1) {
            const Portion& p0 = arr.portions[cycle[0]];
            const Portion& p1 = arr.portions[cycle[1]];
            if (p0.sub_from == p1.sub_from || p0.sub_from == p1.sub_to)
                at = p0.sub_to; // start from the non-shared end
        }
        for (PortionId pid : cycle) {
            poly.push_back(sub_points[at]);
            const Portion& p = arr.portions[pid];
            at = p.sub_from == at ? p.sub_to : p.sub_from;
        }
        for (const auto& v : d.vertices) {
            if (inside_polygon(v.pos, poly))
                rec.interior_vertex_count++;
        }
        rec.complexity = rec.boundary_segment_count + rec.interior_vertex_count;
        rec.is_odd = rec.complexity % 2 == 1;
    }

    return arr;
}

} // namespace cased
