#ifndef CASED_GEOMETRY_H
#define CASED_GEOMETRY_H

#include "cased/numeric.h"
#include "cased/sqrt_sum.h"

#include <optional>

namespace cased {

struct Point {
    Rational x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    // lexicographic, used for canonical orderings
    bool operator<(const Point& o) const { return x != o.x ? x < o.x : y < o.y; }

    Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
    Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
};

inline Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline Rational norm_sq(const Point& a) { return dot(a, a); }

struct Segment {
    Point a, b;
    Point dir() const { return b - a; }
    Point at(const Rational& t) const { return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)}; }
};

/// Exact squared distance from a point to a closed segment.
Rational point_segment_dist_sq(const Point& p, const Segment& s);

/// True if p lies on the closed segment s.
bool point_on_segment(const Point& p, const Segment& s);

/// Outcome of intersecting two open segments.  A crossing is a single
/// transversal interior intersection; shared endpoints, touchings and
/// disjoint configurations all report None.  Positive-length collinear
/// overlap is a distinct degenerate outcome for the caller to judge.
struct SegmentIntersection {
    enum class Kind { None, Crossing, Overlap };
    Kind kind = Kind::None;
    Point point;      // valid for Crossing
    Rational param_a; // position of the point along the first segment, in (0,1)
    Rational param_b;
};

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2);

/// sin^2 of the acute-or-right angle between the supporting lines of two
/// direction vectors: cross(d1,d2)^2 / (|d1|^2 |d2|^2).
/// Throws Error("parallel") when the directions are parallel.
Rational crossing_sin_sq(const Point& d1, const Point& d2);

/// Length of a tunnel: casing width / sin(alpha), as an exact value.
/// Requires w > 0 and 0 < sin_sq <= 1.
SqrtSum tunnel_length(const Rational& casing_width, const Rational& sin_sq);

} // namespace cased

#endif
