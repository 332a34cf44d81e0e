#include "cased/fixtures.h"

#include <algorithm>

namespace cased {

namespace {

struct Builder {
    Drawing d;
    int next_vertex = 0;

    explicit Builder(Rational width) { d.casing_width = std::move(width); }

    int vertex(const Rational& x, const Rational& y) {
        d.vertices.push_back({next_vertex, {x, y}});
        return next_vertex++;
    }

    void segment(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2) {
        int a = vertex(x1, y1);
        int b = vertex(x2, y2);
        d.edges.push_back({static_cast<int>(d.edges.size()), a, b});
    }

    Drawing take() {
        d.normalize();
        return std::move(d);
    }
};

} // namespace

Drawing fixture_grid(int horizontals, int verticals, const Rational& spacing) {
    if (horizontals < 1 || verticals < 1 || spacing <= 0)
        throw InputError("grid: needs h >= 1, v >= 1, spacing > 0");
    Builder b(spacing / 10);
    for (int i = 1; i <= horizontals; ++i)
        b.segment(0, i * spacing, (verticals + 1) * spacing, i * spacing);
    for (int j = 1; j <= verticals; ++j)
        b.segment(j * spacing, 0, j * spacing, (horizontals + 1) * spacing);
    return b.take();
}

Drawing fixture_triangle() {
    Builder b(Rational(1, 10));
    b.segment(0, 1, 10, 1);
    b.segment(1, 0, 6, 10);
    b.segment(8, 0, 3, 10);
    return b.take();
}

Drawing fixture_two_triangles() {
    Builder b(Rational(1, 10));
    for (int shift : {0, 20}) {
        b.segment(shift + 0, 1, shift + 10, 1);
        b.segment(shift + 1, 0, shift + 6, 10);
        b.segment(shift + 8, 0, shift + 3, 10);
    }
    return b.take();
}

Drawing fixture_pentagram() {
    const int pts[5][2] = {{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}};
    Drawing d;
    d.casing_width = Rational(1, 10);
    for (int i = 0; i < 5; ++i)
        d.vertices.push_back({i, {Rational(pts[i][0]), Rational(pts[i][1])}});
    for (int i = 0; i < 5; ++i)
        d.edges.push_back({i, i, (i + 2) % 5});
    d.normalize();
    return d;
}

Drawing fixture_parallel_triangles(int p) {
    if (p < 1 || p > 24)
        throw InputError("parallel-triangles: needs 1 <= p <= 24");
    Builder b(Rational(1, 16));
    // family A: horizontals y = i
    Rational x_lo = Rational(2 - p, 2) - 1;
    Rational x_hi = Rational(3 * p - 3, 2) + 1;
    for (int i = 0; i < p; ++i)
        b.segment(x_lo, i, x_hi, i);
    // family B: slope +2 through (j, 0); family C: slope -2, offset half a
    // unit up so their crossings sit strictly between the horizontals
    Rational y_lo = Rational(-2, 5);
    Rational y_hi = Rational(p - 1) + Rational(2, 5);
    for (int j = 0; j < p; ++j) {
        // y = 2x - 2j
        b.segment((y_lo + 2 * j) / 2, y_lo, (y_hi + 2 * j) / 2, y_hi);
    }
    for (int l = 0; l < p; ++l) {
        // y = -2x + 2l + 1
        b.segment((2 * l + 1 - y_lo) / 2, y_lo, (2 * l + 1 - y_hi) / 2, y_hi);
    }
    return b.take();
}

namespace {

// Shared frame of the figure fixtures: four bundles of `c` parallel diagonal
// edges (slopes -1 and +1) forming a crossing cycle around a diamond of
// radius `s`, plus axis-parallel single segments crossing two bundles each.
Drawing bundle_frame(int c, int s, const std::vector<int>& normal_offsets) {
    if (c < 1 || c > 13)
        throw InputError("bundle fixtures support 1 <= c <= 13");
    // width small enough that casing footprints inside a bundle stay apart
    Builder b(Rational(1, 32));
    const Rational eps(1, 16);
    // NE: x + y = s + t*eps, SE: x - y = s + t*eps, and mirrored
    for (int t = 0; t < c; ++t) {
        Rational shift = s + t * eps;
        b.segment(-1, shift + 1, 9 * Rational(s) / 8, shift - 9 * Rational(s) / 8); // NE
    }
    for (int t = 0; t < c; ++t) {
        Rational shift = s + t * eps;
        b.segment(-1, -shift - 1, 9 * Rational(s) / 8, -shift + 9 * Rational(s) / 8); // SE
    }
    for (int t = 0; t < c; ++t) {
        Rational shift = s + t * eps;
        b.segment(1, -shift - 1, -9 * Rational(s) / 8, -shift + 9 * Rational(s) / 8); // SW
    }
    for (int t = 0; t < c; ++t) {
        Rational shift = s + t * eps;
        b.segment(1, shift + 1, -9 * Rational(s) / 8, shift - 9 * Rational(s) / 8); // NW
    }
    for (int a : normal_offsets) {
        Rational reach = Rational(s - std::abs(a)) + 1;
        b.segment(a, -reach, a, reach); // vertical at x = a
    }
    for (int a : normal_offsets) {
        Rational reach = Rational(s - std::abs(a)) + 1;
        b.segment(-reach, a, reach, a); // horizontal at y = a
    }
    return b.take();
}

} // namespace

Drawing fixture_bundle_square(int bundle_size) { return bundle_frame(bundle_size, 8, {2, -2}); }

Drawing fixture_weave_grid(int c) {
    if (c < 1 || c > 13)
        throw InputError("bundle fixtures support 1 <= c <= 13");
    // The bundle sides pass between the outer normals' central crossings, so
    // the outer ring's casing is pinned where it meets the bundles; the four
    // outer-outer crossings then force one switch each beyond the eight
    // forced near the normals' midpoints.
    Builder b(Rational(1, 32));
    const Rational eps(1, 16);
    const int s = 8;
    for (int t = 0; t < c; ++t) {
        Rational shift = s + t * eps;
        b.segment(-1, shift + 1, 9, shift - 9);   // NE: x + y = shift
        b.segment(-1, -shift - 1, 9, -shift + 9); // SE: x - y = shift
        b.segment(1, -shift - 1, -9, -shift + 9); // SW: x + y = -shift
        b.segment(1, shift + 1, -9, shift - 9);   // NW: x - y = -shift
    }
    const Rational reach(15, 2);
    for (int a : {2, -2, 5, -5})
        b.segment(a, -reach, a, reach); // verticals
    for (int a : {2, -2, 5, -5})
        b.segment(-reach, a, reach, a); // horizontals
    return b.take();
}

Drawing fixture_np_slopes_cycle(int length) {
    if (length != 8)
        throw InputError("np-slopes-cycle: only the 8-segment ring closes with rational "
                         "coordinates under the equal-length constraint");
    const int dirs[8][2] = {{4, 1},   {1, -4}, {-1, -4}, {-4, 1},
                            {-4, -1}, {-1, 4}, {1, 4},   {4, -1}};
    Builder b(Rational(1, 10));
    Rational x = 0, y = 0;
    const Rational ext(1, 4);
    for (int i = 0; i < 8; ++i) {
        Rational dx(dirs[i][0]), dy(dirs[i][1]);
        b.segment(x - dx * ext, y - dy * ext, x + dx + dx * ext, y + dy + dy * ext);
        x += dx;
        y += dy;
    }
    return b.take();
}

namespace {

class XorShift {
  public:
    explicit XorShift(uint64_t seed) : state_(seed * 2685821657736338717ULL + 1) {}
    uint64_t next() {
        state_ ^= state_ << 13;
        state_ ^= state_ >> 7;
        state_ ^= state_ << 17;
        return state_;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

  private:
    uint64_t state_;
};

} // namespace

Drawing fixture_random_segments(int count, uint64_t seed) {
    if (count < 1 || count > 2000)
        throw InputError("random-segments: needs 1 <= count <= 2000");
    XorShift rng(seed == 0 ? 0x9E3779B97F4A7C15ULL : seed);
    int span = 10 * static_cast<int>(std::max(2.0, std::ceil(std::sqrt(double(count)))));
    int reach = std::max(6, static_cast<int>(3.6 * span / std::sqrt(double(count))));

    Drawing d;
    d.casing_width = Rational(1, 10);
    const Rational tol_sq = (d.casing_width / 2) * (d.casing_width / 2);

    std::vector<Segment> accepted;
    std::vector<std::vector<Point>> crossings_on; // per accepted segment

    // incremental validation: candidate endpoints against accepted edges,
    // accepted endpoints against the candidate, overlaps, and crossing
    // points colliding with existing ones (would be a triple crossing)
    auto admissible = [&](const Segment& s, std::vector<std::pair<size_t, Point>>& found) {
        for (size_t j = 0; j < accepted.size(); ++j) {
            const Segment& t = accepted[j];
            if (point_segment_dist_sq(s.a, t) <= tol_sq ||
                point_segment_dist_sq(s.b, t) <= tol_sq)
                return false;
            if (point_segment_dist_sq(t.a, s) <= tol_sq ||
                point_segment_dist_sq(t.b, s) <= tol_sq)
                return false;
            auto r = segment_intersection(s, t);
            if (r.kind == SegmentIntersection::Kind::Overlap)
                return false;
            if (r.kind == SegmentIntersection::Kind::Crossing)
                found.push_back({j, r.point});
        }
        // distinct crossing points along the candidate and along each partner
        for (size_t a = 0; a < found.size(); ++a)
            for (size_t b = a + 1; b < found.size(); ++b)
                if (found[a].second == found[b].second)
                    return false;
        for (const auto& [j, p] : found)
            for (const Point& q : crossings_on[j])
                if (p == q)
                    return false;
        return true;
    };

    int vid = 0, eid = 0;
    long long attempts = 0;
    const long long attempt_cap = 4000LL * count;
    while (eid < count && attempts < attempt_cap) {
        ++attempts;
        int x1 = rng.below(span), y1 = rng.below(span);
        int dx = rng.below(2 * reach + 1) - reach;
        int dy = rng.below(2 * reach + 1) - reach;
        if (dx == 0 && dy == 0)
            continue;
        int x2 = x1 + dx, y2 = y1 + dy;
        if (x2 < 0 || x2 > span || y2 < 0 || y2 > span)
            continue;
        Segment s{{Rational(x1), Rational(y1)}, {Rational(x2), Rational(y2)}};
        std::vector<std::pair<size_t, Point>> found;
        if (!admissible(s, found))
            continue;
        for (const auto& [j, p] : found) {
            crossings_on[j].push_back(p);
        }
        crossings_on.emplace_back();
        for (const auto& [j, p] : found)
            crossings_on.back().push_back(p);
        accepted.push_back(s);
        d.vertices.push_back({vid, s.a});
        d.vertices.push_back({vid + 1, s.b});
        d.edges.push_back({eid, vid, vid + 1});
        vid += 2;
        ++eid;
    }
    if (eid < count)
        throw Error("random-segments: rejection sampling stalled");
    d.normalize();
    return d;
}

namespace {

int int_param(const std::vector<std::string>& params, size_t i, const char* what) {
    if (i >= params.size())
        throw InputError(std::string("missing parameter: ") + what);
    try {
        return std::stoi(params[i]);
    } catch (const std::exception&) {
        throw InputError(std::string("bad parameter for ") + what + ": '" + params[i] + "'");
    }
}

} // namespace

Drawing generate_fixture(const std::string& name, const std::vector<std::string>& params) {
    if (name == "grid") {
        int h = int_param(params, 0, "grid h");
        int v = int_param(params, 1, "grid v");
        Rational spacing = params.size() > 2 ? parse_rational(params[2]) : Rational(1);
        return fixture_grid(h, v, spacing);
    }
    if (name == "triangle")
        return fixture_triangle();
    if (name == "two-triangles")
        return fixture_two_triangles();
    if (name == "pentagram")
        return fixture_pentagram();
    if (name == "parallel-triangles")
        return fixture_parallel_triangles(int_param(params, 0, "p"));
    if (name == "bundle-square")
        return fixture_bundle_square(int_param(params, 0, "c"));
    if (name == "weave-grid")
        return fixture_weave_grid(int_param(params, 0, "c"));
    if (name == "np-slopes-cycle")
        return fixture_np_slopes_cycle(params.empty() ? 8 : int_param(params, 0, "length"));
    if (name == "random-segments") {
        int count = int_param(params, 0, "count");
        int seed = int_param(params, 1, "seed");
        return fixture_random_segments(count, static_cast<uint64_t>(seed));
    }
    throw InputError("unknown fixture '" + name + "'");
}

} // namespace cased
