#include "cased/oracle.h"

#include <algorithm>
#include <numeric>
#include <queue>

namespace cased {

const char* to_string(CasingModel model) {
    return model == CasingModel::Stacking ? "stacking" : "weaving";
}

const char* to_string(Objective objective) {
    switch (objective) {
    case Objective::MinTotalSwitches:
        return "min-total-switches";
    case Objective::MinMaxSwitches:
        return "min-max-switches";
    case Objective::MinMaxTunnels:
        return "min-max-tunnels";
    case Objective::MinMaxTunnelLength:
        return "min-max-tunnel-length";
    case Objective::MaxMinTunnelDistance:
        return "max-min-tunnel-distance";
    }
    return "?";
}

std::string ObjectiveValue::str() const {
    switch (objective) {
    case Objective::MinTotalSwitches:
    case Objective::MinMaxSwitches:
    case Objective::MinMaxTunnels:
        return std::to_string(count);
    case Objective::MinMaxTunnelLength:
        return length.str();
    case Objective::MaxMinTunnelDistance:
        if (!distance_sq)
            return "unbounded";
        return "sqrt(" + format_exact(*distance_sq) + ")";
    }
    return "?";
}

int objective_order(const ObjectiveValue& a, const ObjectiveValue& b) {
    switch (a.objective) {
    case Objective::MinTotalSwitches:
    case Objective::MinMaxSwitches:
    case Objective::MinMaxTunnels:
        return a.count < b.count ? -1 : a.count > b.count ? 1 : 0;
    case Objective::MinMaxTunnelLength:
        return SqrtSum::compare(a.length, b.length);
    case Objective::MaxMinTunnelDistance:
        // larger distance is better; no distance at all is unbeatable
        if (!a.distance_sq && !b.distance_sq)
            return 0;
        if (!a.distance_sq)
            return -1;
        if (!b.distance_sq)
            return 1;
        return *a.distance_sq > *b.distance_sq ? -1 : *a.distance_sq < *b.distance_sq ? 1 : 0;
    }
    return 0;
}

ObjectiveValue evaluate_objective(const Arrangement&, const ObjectiveReport& report,
                                  Objective objective) {
    ObjectiveValue v;
    v.objective = objective;
    switch (objective) {
    case Objective::MinTotalSwitches:
        v.count = report.total_switches;
        break;
    case Objective::MinMaxSwitches:
        v.count = report.max_switches;
        break;
    case Objective::MinMaxTunnels:
        v.count = report.max_tunnels;
        break;
    case Objective::MinMaxTunnelLength:
        v.length = report.max_tunnel_length;
        break;
    case Objective::MaxMinTunnelDistance:
        v.distance_sq = report.min_tunnel_distance_sq;
        break;
    }
    return v;
}

namespace {

bool is_switch_objective(Objective objective) {
    return objective == Objective::MinTotalSwitches || objective == Objective::MinMaxSwitches;
}

// Independent switch counting: a plain scan over each edge's crossing
// sequence, bypassing the constraint-graph path entirely.
ObjectiveValue scan_switches(const Arrangement& arr, const Casing& c, Objective objective) {
    long long total = 0;
    long long worst = 0;
    for (size_t e = 0; e < arr.per_edge.size(); ++e) {
        long long here = 0;
        int prev = -1;
        for (CrossingId cid : arr.per_edge[e]) {
            int now = c.on_top(arr.crossings[cid], static_cast<EdgeIndex>(e)) ? 1 : 0;
            if (prev >= 0 && now != prev)
                ++here;
            prev = now;
        }
        total += here;
        worst = std::max(worst, here);
    }
    ObjectiveValue v;
    v.objective = objective;
    v.count = objective == Objective::MinTotalSwitches ? total : worst;
    return v;
}

ObjectiveValue evaluate_casing(const Arrangement& arr, const Casing& c, Objective objective) {
    if (is_switch_objective(objective))
        return scan_switches(arr, c, objective);
    return evaluate_objective(arr, casing_metrics(arr, c), objective);
}

} // namespace

std::string drawing_fingerprint(const Drawing& d) {
    std::string blob;
    for (const auto& v : d.vertices)
        blob += std::to_string(v.id) + ":" + format_exact(v.pos.x) + "," +
                format_exact(v.pos.y) + ";";
    for (const auto& e : d.edges)
        blob += "e" + std::to_string(e.id) + ":" + std::to_string(e.u) + "-" +
                std::to_string(e.v) + ";";
    blob += "w" + format_exact(d.casing_width);
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : blob) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

OracleResult enumerate_optimal_casing(const Drawing& d, CasingModel model, Objective objective,
                                      const OracleLimits& limits) {
    require_valid(d);
    Arrangement arr = build_arrangement(d);
    const size_t k = arr.crossing_count();
    const size_t m = arr.drawing.edges.size();

    OracleResult result;
    result.model = model;
    result.fingerprint = drawing_fingerprint(d);
    bool have = false;

    auto consider = [&](const Casing& c) {
        ObjectiveValue v = evaluate_casing(arr, c, objective);
        if (!have || objective_order(v, result.value) < 0) {
            result.value = v;
            result.witness = c;
            have = true;
        }
    };

    if (model == CasingModel::Weaving) {
        if (k > limits.weaving_max_crossings)
            throw CapExceeded("cap-exceeded: " + std::to_string(k) + " crossings, cap " +
                              std::to_string(limits.weaving_max_crossings));
        Casing c;
        c.a_on_top.assign(k, false);
        for (uint64_t mask = 0; mask < (uint64_t(1) << k); ++mask) {
            for (size_t i = 0; i < k; ++i)
                c.a_on_top[i] = (mask >> i) & 1;
            consider(c);
        }
    } else {
        if (m > limits.stacking_max_edges)
            throw CapExceeded("cap-exceeded: " + std::to_string(m) + " edges, cap " +
                              std::to_string(limits.stacking_max_edges));
        StackingOrder order;
        order.bottom_first.resize(m);
        std::iota(order.bottom_first.begin(), order.bottom_first.end(), 0);
        do {
            consider(order.to_casing(arr));
        } while (std::next_permutation(order.bottom_first.begin(), order.bottom_first.end()));
    }

    if (!have)
        throw Error("internal: oracle evaluated no casing");
    return result;
}

std::optional<StackingOrder> is_stackable(const Arrangement& arr, const Casing& c) {
    if (c.a_on_top.size() != arr.crossing_count())
        throw Error("casing-mismatch");
    const size_t m = arr.drawing.edges.size();
    std::vector<std::vector<EdgeIndex>> above(m); // below -> above arcs
    std::vector<int> indegree(m, 0);
    for (const auto& cr : arr.crossings) {
        EdgeIndex top = c.top(cr), bottom = c.bottom(cr);
        above[bottom].push_back(top);
        indegree[top]++;
    }
    std::priority_queue<EdgeIndex, std::vector<EdgeIndex>, std::greater<EdgeIndex>> ready;
    for (size_t e = 0; e < m; ++e)
        if (indegree[e] == 0)
            ready.push(static_cast<EdgeIndex>(e));
    StackingOrder order;
    while (!ready.empty()) {
        EdgeIndex e = ready.top();
        ready.pop();
        order.bottom_first.push_back(e);
        for (EdgeIndex f : above[e])
            if (--indegree[f] == 0)
                ready.push(f);
    }
    if (order.bottom_first.size() != m)
        return std::nullopt; // cyclic overlap
    return order;
}

} // namespace cased
