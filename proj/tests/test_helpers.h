#ifndef CASED_TEST_HELPERS_H
#define CASED_TEST_HELPERS_H

#include "cased/drawing.h"

#include <cstdint>
#include <vector>

namespace cased::testing {

/// Small deterministic generator (xorshift), independent of std distributions.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed * 2685821657736338717ULL + 1) {}
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

/// Drawing from raw segment endpoints; ids assigned in order, width w.
inline Drawing make_drawing(const std::vector<std::array<int, 4>>& segs,
                            Rational w = Rational(1, 10)) {
    Drawing d;
    d.casing_width = w;
    int vid = 0;
    for (size_t i = 0; i < segs.size(); ++i) {
        const auto& s = segs[i];
        d.vertices.push_back({vid, {Rational(s[0]), Rational(s[1])}});
        d.vertices.push_back({vid + 1, {Rational(s[2]), Rational(s[3])}});
        d.edges.push_back({static_cast<int>(i), vid, vid + 1});
        vid += 2;
    }
    d.normalize();
    return d;
}

/// 3 horizontals + 3 verticals, unit spacing, integer coordinates.
inline Drawing grid3x3(Rational w = Rational(1, 10)) {
    std::vector<std::array<int, 4>> segs;
    for (int i = 1; i <= 3; ++i)
        segs.push_back({0, i, 4, i}); // horizontals at y = 1..3
    for (int j = 1; j <= 3; ++j)
        segs.push_back({j, 0, j, 4}); // verticals at x = 1..3
    return make_drawing(segs, w);
}

/// Three pairwise-crossing segments forming one inner triangle face.
inline Drawing triangle(Rational w = Rational(1, 10)) {
    return make_drawing({{0, 1, 10, 1}, {1, 0, 6, 10}, {8, 0, 3, 10}}, w);
}

/// Generates a random small drawing that passes validation; segments on a
/// coarse integer grid.
inline Drawing random_drawing(Rng& rng, int segment_count, int span = 12) {
    Drawing d;
    d.casing_width = Rational(1, 10);
    int vid = 0, eid = 0, attempts = 0;
    while (eid < segment_count && attempts < 20000) {
        ++attempts;
        int x1 = rng.below(span), y1 = rng.below(span);
        int x2 = rng.below(span), y2 = rng.below(span);
        if (x1 == x2 && y1 == y2)
            continue;
        Drawing trial = d;
        trial.vertices.push_back({vid, {Rational(x1), Rational(y1)}});
        trial.vertices.push_back({vid + 1, {Rational(x2), Rational(y2)}});
        trial.edges.push_back({eid, vid, vid + 1});
        trial.normalize();
        if (!validate_drawing(trial).ok())
            continue;
        d = std::move(trial);
        vid += 2;
        ++eid;
    }
    return d;
}

} // namespace cased::testing

#endif
