#include "cased/geometry.h"

namespace cased {

Rational point_segment_dist_sq(const Point& p, const Segment& s) {
    Point d = s.dir();
    Rational len_sq = norm_sq(d);
    if (len_sq == 0)
        return norm_sq(p - s.a);
    Rational t = dot(p - s.a, d) / len_sq;
    if (t < 0)
        t = 0;
    else if (t > 1)
        t = 1;
    return norm_sq(p - s.at(t));
}

bool point_on_segment(const Point& p, const Segment& s) {
    if (cross(s.b - s.a, p - s.a) != 0)
        return false;
    Rational d = dot(p - s.a, s.b - s.a);
    return d >= 0 && d <= norm_sq(s.b - s.a);
}

SegmentIntersection segment_intersection(const Segment& s1, const Segment& s2) {
    SegmentIntersection out;
    Point d1 = s1.dir(), d2 = s2.dir();
    Rational denom = cross(d1, d2);
    if (denom == 0) {
        // parallel: either disjoint or collinear; only a positive-length
        // shared stretch is reported
        if (cross(d1, s2.a - s1.a) != 0)
            return out;
        Rational len_sq = norm_sq(d1);
        Rational t0 = dot(s2.a - s1.a, d1) / len_sq;
        Rational t1 = dot(s2.b - s1.a, d1) / len_sq;
        if (t0 > t1)
            std::swap(t0, t1);
        Rational lo = t0 < 0 ? Rational(0) : t0;
        Rational hi = t1 > 1 ? Rational(1) : t1;
        if (lo < hi)
            out.kind = SegmentIntersection::Kind::Overlap;
        return out;
    }
    Rational ta = cross(s2.a - s1.a, d2) / denom;
    Rational tb = cross(s2.a - s1.a, d1) / denom;
    if (ta <= 0 || ta >= 1 || tb <= 0 || tb >= 1)
        return out;
    out.kind = SegmentIntersection::Kind::Crossing;
    out.param_a = ta;
    out.param_b = tb;
    out.point = s1.at(ta);
    return out;
}

Rational crossing_sin_sq(const Point& d1, const Point& d2) {
    Rational c = cross(d1, d2);
    if (c == 0)
        throw Error("parallel");
    return c * c / (norm_sq(d1) * norm_sq(d2));
}

SqrtSum tunnel_length(const Rational& casing_width, const Rational& sin_sq) {
    if (casing_width <= 0)
        throw Error("tunnel_length: casing width must be positive");
    if (sin_sq <= 0 || sin_sq > 1)
        throw Error("tunnel_length: sin^2 out of range");
    return SqrtSum::of_sqrt(casing_width * casing_width / sin_sq);
}

} // namespace cased
