#include "cased/oracle.h"
#include "cased/stacking.h"
#include "test_helpers.h"

#include <doctest.h>

using namespace cased;
using namespace cased::testing;

namespace {

Objective to_objective(StackingObjective obj) {
    switch (obj) {
    case StackingObjective::MinMaxTunnels:
        return Objective::MinMaxTunnels;
    case StackingObjective::MinMaxTunnelLength:
        return Objective::MinMaxTunnelLength;
    case StackingObjective::MaxMinTunnelDistance:
        return Objective::MaxMinTunnelDistance;
    }
    throw Error("unreachable");
}

ObjectiveValue value_of(const StackingSolution& sol, StackingObjective obj) {
    ObjectiveValue v;
    v.objective = to_objective(obj);
    switch (obj) {
    case StackingObjective::MinMaxTunnels:
        v.count = sol.value.tunnels;
        break;
    case StackingObjective::MinMaxTunnelLength:
        v.length = sol.value.length;
        break;
    case StackingObjective::MaxMinTunnelDistance:
        v.distance_sq = sol.value.min_gap_sq;
        break;
    }
    return v;
}

} // namespace

TEST_CASE("edge gap structure maintains the minimum consecutive gap") {
    EdgeGapStructure gaps;
    CHECK_FALSE(gaps.min_gap_sq().has_value());
    auto at = [](int x) { return Point{Rational(x), Rational(0)}; };
    gaps.insert(Rational(1, 10), at(1));
    CHECK_FALSE(gaps.min_gap_sq().has_value());
    gaps.insert(Rational(5, 10), at(5));
    CHECK(gaps.min_gap_sq() == Rational(16));
    gaps.insert(Rational(3, 10), at(3));
    CHECK(gaps.min_gap_sq() == Rational(4));
    gaps.insert(Rational(4, 10), at(4));
    CHECK(gaps.min_gap_sq() == Rational(1));
    // removing an inner position merges its gaps
    gaps.remove(Rational(4, 10));
    CHECK(gaps.min_gap_sq() == Rational(4));
    gaps.remove(Rational(3, 10));
    CHECK(gaps.min_gap_sq() == Rational(16));
    gaps.remove(Rational(1, 10));
    CHECK_FALSE(gaps.min_gap_sq().has_value());
    CHECK(gaps.size() == 1);
}

TEST_CASE("bottom values on fixtures") {
    Arrangement grid = build_arrangement(grid3x3());
    auto tunnels = bottom_values(grid, StackingObjective::MinMaxTunnels);
    for (const auto& v : tunnels)
        CHECK(v.tunnels == 3);
    auto dist = bottom_values(grid, StackingObjective::MaxMinTunnelDistance);
    for (const auto& v : dist)
        CHECK(v.min_gap_sq == Rational(1));

    Arrangement perp = build_arrangement(make_drawing({{0, 0, 2, 2}, {0, 2, 2, 0}}, Rational(1)));
    auto len = bottom_values(perp, StackingObjective::MinMaxTunnelLength);
    for (const auto& v : len)
        CHECK(v.length == SqrtSum::of_rational(Rational(1)));
}

TEST_CASE("solve_stacking on fixtures") {
    auto grid_tunnels = solve_stacking(grid3x3(), StackingObjective::MinMaxTunnels);
    CHECK(grid_tunnels.value.tunnels == 3);
    CHECK(grid_tunnels.report.max_tunnels == 3);

    auto grid_dist = solve_stacking(grid3x3(), StackingObjective::MaxMinTunnelDistance);
    CHECK(grid_dist.value.min_gap_sq == Rational(1));

    Drawing perp = make_drawing({{0, 0, 2, 2}, {0, 2, 2, 0}}, Rational(1));
    CHECK(solve_stacking(perp, StackingObjective::MinMaxTunnels).value.tunnels == 1);
    CHECK(solve_stacking(perp, StackingObjective::MinMaxTunnelLength).value.length ==
          SqrtSum::of_rational(Rational(1)));
    CHECK_FALSE(solve_stacking(perp, StackingObjective::MaxMinTunnelDistance)
                    .value.min_gap_sq.has_value());
}

TEST_CASE("stacking output is stackable and self-consistent") {
    Rng rng(33);
    for (int trial = 0; trial < 8; ++trial) {
        Drawing d = random_drawing(rng, 5);
        Arrangement arr = build_arrangement(d);
        for (auto obj : {StackingObjective::MinMaxTunnels, StackingObjective::MinMaxTunnelLength,
                         StackingObjective::MaxMinTunnelDistance}) {
            auto sol = solve_stacking(d, obj);
            auto order = is_stackable(arr, sol.casing);
            REQUIRE(order.has_value());
            // the emitted order itself is consistent with the casing
            CHECK(order->bottom_first.size() == d.edges.size());
            Casing rebuilt = sol.order.to_casing(arr);
            CHECK(rebuilt.a_on_top == sol.casing.a_on_top);
        }
    }
}

TEST_CASE("greedy stacking equals the permutation oracle (m <= 6)") {
    Rng rng(4242);
    int tested = 0;
    for (int trial = 0; trial < 30 && tested < 10; ++trial) {
        Drawing d = random_drawing(rng, 3 + rng.below(4));
        if (d.edges.size() > 6)
            continue;
        ++tested;
        for (auto obj : {StackingObjective::MinMaxTunnels, StackingObjective::MinMaxTunnelLength,
                         StackingObjective::MaxMinTunnelDistance}) {
            auto sol = solve_stacking(d, obj);
            auto oracle = enumerate_optimal_casing(d, CasingModel::Stacking, to_objective(obj));
            CHECK(objective_order(value_of(sol, obj), oracle.value) == 0);
        }
    }
    CHECK(tested >= 8);
}

TEST_CASE("greedy stored values match recomputation on sub-arrangements") {
    // after each selection, a remaining edge's value equals bottom_values
    // recomputed on the arrangement of the remaining edges
    Drawing d = grid3x3();
    Arrangement arr = build_arrangement(d);
    auto sol = solve_stacking(d, StackingObjective::MaxMinTunnelDistance);
    std::vector<bool> removed(d.edges.size(), false);
    for (EdgeIndex picked : sol.order.bottom_first) {
        // rebuild the sub-drawing of remaining edges
        Drawing sub;
        sub.casing_width = d.casing_width;
        sub.vertices = d.vertices;
        for (size_t e = 0; e < d.edges.size(); ++e)
            if (!removed[e])
                sub.edges.push_back(d.edges[e]);
        sub.normalize();
        Arrangement sub_arr = build_arrangement(sub);
        auto values = bottom_values(sub_arr, StackingObjective::MaxMinTunnelDistance);
        // locate picked within sub (edges keep ids, sorted order)
        for (size_t i = 0; i < sub.edges.size(); ++i) {
            if (sub.edges[i].id == d.edges[picked].id) {
                // the greedy selected the best remaining value; recomputation
                // must not find a strictly better one
                for (size_t j = 0; j < sub.edges.size(); ++j) {
                    auto a = values[i].min_gap_sq, b = values[j].min_gap_sq;
                    bool j_strictly_better = !b.has_value() && a.has_value();
                    if (a && b)
                        j_strictly_better = *b > *a;
                    CHECK_FALSE(j_strictly_better);
                }
            }
        }
        removed[picked] = true;
    }
}
