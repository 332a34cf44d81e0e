#include "cased/stacking.h"

#include <algorithm>

namespace cased {

Casing StackingOrder::to_casing(const Arrangement& arr) const {
    std::vector<int> height(arr.drawing.edges.size(), -1);
    for (size_t i = 0; i < bottom_first.size(); ++i)
        height[bottom_first[i]] = static_cast<int>(i);
    Casing c;
    c.a_on_top.resize(arr.crossing_count());
    for (const auto& cr : arr.crossings)
        c.a_on_top[cr.id] = height[cr.edge_a] > height[cr.edge_b];
    return c;
}

void EdgeGapStructure::insert(const Rational& param, const Point& where) {
    auto [it, fresh] = positions_.emplace(param, where);
    if (!fresh)
        throw Error("EdgeGapStructure: duplicate position");
    auto next = std::next(it);
    if (it != positions_.begin() && next != positions_.end()) {
        auto prev = std::prev(it);
        gaps_sq_.erase(gaps_sq_.find(norm_sq(next->second - prev->second)));
    }
    if (it != positions_.begin())
        gaps_sq_.insert(norm_sq(it->second - std::prev(it)->second));
    if (next != positions_.end())
        gaps_sq_.insert(norm_sq(next->second - it->second));
}

void EdgeGapStructure::remove(const Rational& param) {
    auto it = positions_.find(param);
    if (it == positions_.end())
        throw Error("EdgeGapStructure: removing an absent position");
    auto next = std::next(it);
    if (it != positions_.begin())
        gaps_sq_.erase(gaps_sq_.find(norm_sq(it->second - std::prev(it)->second)));
    if (next != positions_.end())
        gaps_sq_.erase(gaps_sq_.find(norm_sq(next->second - it->second)));
    if (it != positions_.begin() && next != positions_.end())
        gaps_sq_.insert(norm_sq(next->second - std::prev(it)->second));
    positions_.erase(it);
}

std::optional<Rational> EdgeGapStructure::min_gap_sq() const {
    if (gaps_sq_.empty())
        return std::nullopt;
    return *gaps_sq_.begin();
}

std::vector<BottomValue> bottom_values(const Arrangement& arr, StackingObjective objective) {
    const size_t m = arr.drawing.edges.size();
    std::vector<BottomValue> out(m);
    for (size_t e = 0; e < m; ++e) {
        BottomValue& v = out[e];
        v.tunnels = static_cast<int>(arr.per_edge[e].size());
        if (objective == StackingObjective::MinMaxTunnelLength) {
            for (CrossingId cid : arr.per_edge[e])
                v.length += tunnel_length(arr.drawing.casing_width, arr.crossings[cid].sin_sq);
        }
        if (objective == StackingObjective::MaxMinTunnelDistance) {
            std::optional<Point> prev;
            for (CrossingId cid : arr.per_edge[e]) {
                const Point& p = arr.crossings[cid].point;
                if (prev) {
                    Rational gap = norm_sq(p - *prev);
                    if (!v.min_gap_sq || gap < *v.min_gap_sq)
                        v.min_gap_sq = gap;
                }
                prev = p;
            }
        }
    }
    return out;
}

namespace {

struct SelectionState {
    StackingObjective objective;
    std::vector<int> tunnels;
    std::vector<SqrtSum> lengths;
    std::vector<EdgeGapStructure> gaps;

    // true when e should be selected before f under the objective
    bool better(EdgeIndex e, EdgeIndex f) const {
        switch (objective) {
        case StackingObjective::MinMaxTunnels:
            if (tunnels[e] != tunnels[f])
                return tunnels[e] < tunnels[f];
            break;
        case StackingObjective::MinMaxTunnelLength: {
            int c = SqrtSum::compare(lengths[e], lengths[f]);
            if (c != 0)
                return c < 0;
            break;
        }
        case StackingObjective::MaxMinTunnelDistance: {
            auto ge = gaps[e].min_gap_sq();
            auto gf = gaps[f].min_gap_sq();
            if (ge.has_value() != gf.has_value())
                return !ge.has_value(); // unbounded gap wins for max-min
            if (ge && gf && *ge != *gf)
                return *ge > *gf;
            break;
        }
        }
        return e < f;
    }

    BottomValue snapshot(EdgeIndex e) const {
        BottomValue v;
        v.tunnels = tunnels[e];
        v.length = lengths[e];
        v.min_gap_sq = gaps[e].min_gap_sq();
        return v;
    }
};

} // namespace

StackingSolution solve_stacking(const Drawing& d, StackingObjective objective) {
    require_valid(d);
    Arrangement arr = build_arrangement(d);
    const size_t m = arr.drawing.edges.size();

    SelectionState state;
    state.objective = objective;
    state.tunnels.assign(m, 0);
    state.lengths.assign(m, SqrtSum());
    state.gaps.resize(m);
    for (size_t e = 0; e < m; ++e) {
        state.tunnels[e] = static_cast<int>(arr.per_edge[e].size());
        for (CrossingId cid : arr.per_edge[e]) {
            const Crossing& c = arr.crossings[cid];
            if (objective == StackingObjective::MinMaxTunnelLength)
                state.lengths[e] += tunnel_length(arr.drawing.casing_width, c.sin_sq);
            if (objective == StackingObjective::MaxMinTunnelDistance)
                state.gaps[e].insert(c.param_on(static_cast<EdgeIndex>(e)), c.point);
        }
    }

    auto cmp = [&state](EdgeIndex a, EdgeIndex b) { return state.better(a, b); };
    std::set<EdgeIndex, decltype(cmp)> queue(cmp);
    for (size_t e = 0; e < m; ++e)
        queue.insert(static_cast<EdgeIndex>(e));

    StackingSolution sol;
    std::vector<BottomValue> at_selection(m);
    std::vector<bool> selected(m, false);
    while (!queue.empty()) {
        EdgeIndex e = *queue.begin();
        queue.erase(queue.begin());
        selected[e] = true;
        at_selection[e] = state.snapshot(e);
        sol.order.bottom_first.push_back(e);
        for (CrossingId cid : arr.per_edge[e]) {
            const Crossing& c = arr.crossings[cid];
            EdgeIndex f = c.other(e);
            if (selected[f])
                continue;
            queue.erase(f);
            state.tunnels[f]--;
            if (objective == StackingObjective::MinMaxTunnelLength)
                state.lengths[f] -= tunnel_length(arr.drawing.casing_width, c.sin_sq);
            if (objective == StackingObjective::MaxMinTunnelDistance)
                state.gaps[f].remove(c.param_on(f));
            queue.insert(f);
        }
    }

    sol.casing = sol.order.to_casing(arr);
    sol.report = casing_metrics(arr, sol.casing);

    for (size_t e = 0; e < m; ++e) {
        const BottomValue& v = at_selection[e];
        sol.value.tunnels = std::max(sol.value.tunnels, v.tunnels);
        if (SqrtSum::compare(v.length, sol.value.length) > 0)
            sol.value.length = v.length;
        if (v.min_gap_sq && (!sol.value.min_gap_sq || *v.min_gap_sq < *sol.value.min_gap_sq))
            sol.value.min_gap_sq = v.min_gap_sq;
    }

    // the greedy aggregates must agree with a fresh evaluation of the casing
    bool consistent = true;
    switch (objective) {
    case StackingObjective::MinMaxTunnels:
        consistent = sol.value.tunnels == sol.report.max_tunnels;
        break;
    case StackingObjective::MinMaxTunnelLength:
        consistent = sol.value.length == sol.report.max_tunnel_length;
        break;
    case StackingObjective::MaxMinTunnelDistance:
        consistent = sol.value.min_gap_sq == sol.report.min_tunnel_distance_sq;
        break;
    }
    if (!consistent)
        throw Error("internal: greedy stacking value differs from casing metrics");
    return sol;
}

} // namespace cased
