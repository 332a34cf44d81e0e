#include "cased/crossing_graph.h"

#include <algorithm>
#include <deque>

namespace cased {

CrossingGraph build_crossing_graph(const Arrangement& arr) {
    CrossingGraph g;
    g.node_count = static_cast<int>(arr.drawing.edges.size());
    g.incident_links.assign(g.node_count, {});
    for (const auto& c : arr.crossings) {
        int idx = static_cast<int>(g.links.size());
        g.links.push_back({c.id, c.edge_a, c.edge_b});
        g.incident_links[c.edge_a].push_back(idx);
        g.incident_links[c.edge_b].push_back(idx);
    }
    return g;
}

Casing Casing::complement() const {
    Casing out = *this;
    out.a_on_top.flip();
    return out;
}

ConstraintGraph build_constraint_graph(const Arrangement& arr) {
    ConstraintGraph g;
    const size_t m = arr.drawing.edges.size();
    g.edge_incidences.assign(m, {});
    std::vector<std::pair<int, int>> per_crossing(arr.crossings.size(), {-1, -1});
    for (size_t e = 0; e < m; ++e) {
        const auto& list = arr.per_edge[e];
        for (size_t r = 0; r < list.size(); ++r) {
            int inc = static_cast<int>(g.incidences.size());
            g.incidences.push_back({static_cast<EdgeIndex>(e), list[r], static_cast<int>(r)});
            g.edge_incidences[e].push_back(inc);
            auto& pc = per_crossing[list[r]];
            (pc.first < 0 ? pc.first : pc.second) = inc;
            if (r > 0) {
                // the portion between consecutive crossings is the one after
                // the previous crossing event: index_on_edge == r
                PortionId sep = arr.edge_portions[e][r];
                g.soft_links.push_back({g.edge_incidences[e][r - 1], inc, sep});
            }
        }
    }
    for (size_t c = 0; c < arr.crossings.size(); ++c)
        g.hard_links.push_back({per_crossing[c].first, per_crossing[c].second,
                                static_cast<CrossingId>(c)});
    return g;
}

std::vector<bool> ConstraintGraph::induced_values(const Arrangement& arr, const Casing& c) const {
    std::vector<bool> val(incidences.size());
    for (size_t i = 0; i < incidences.size(); ++i) {
        const auto& inc = incidences[i];
        val[i] = c.on_top(arr.crossings[inc.crossing], inc.edge);
    }
    return val;
}

int ConstraintGraph::count_violated_soft_links(const Arrangement& arr, const Casing& c) const {
    auto val = induced_values(arr, c);
    int violated = 0;
    for (const auto& s : soft_links)
        if (val[s.inc_a] != val[s.inc_b])
            ++violated;
    return violated;
}

std::optional<Casing> zero_switch_casing(const Arrangement& arr) {
    CrossingGraph g = build_crossing_graph(arr);
    std::vector<int> color(g.node_count, -1);
    for (int root = 0; root < g.node_count; ++root) {
        if (color[root] >= 0)
            continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int li : g.incident_links[u]) {
                const auto& link = g.links[li];
                int v = link.a == u ? link.b : link.a;
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Casing casing;
    casing.a_on_top.resize(arr.crossings.size());
    for (const auto& c : arr.crossings)
        casing.a_on_top[c.id] = color[c.edge_a] == 0;
    return casing;
}

ObjectiveReport casing_metrics(const Arrangement& arr, const Casing& c) {
    if (c.a_on_top.size() != arr.crossings.size())
        throw Error("casing-mismatch: casing covers " + std::to_string(c.a_on_top.size()) +
                    " crossings, arrangement has " + std::to_string(arr.crossings.size()));

    const size_t m = arr.drawing.edges.size();
    ObjectiveReport rep;
    rep.per_edge.resize(m);

    ConstraintGraph cg = build_constraint_graph(arr);
    auto val = cg.induced_values(arr, c);
    for (const auto& s : cg.soft_links) {
        if (val[s.inc_a] != val[s.inc_b])
            rep.per_edge[cg.incidences[s.inc_a].edge].switches++;
    }

    for (size_t e = 0; e < m; ++e) {
        EdgeMetrics& em = rep.per_edge[e];
        std::optional<Point> prev_tunnel;
        for (CrossingId cid : arr.per_edge[e]) {
            const Crossing& cr = arr.crossings[cid];
            if (c.on_top(cr, static_cast<EdgeIndex>(e))) {
                em.bridges++;
                continue;
            }
            em.tunnels++;
            em.tunnel_length_total += tunnel_length(arr.drawing.casing_width, cr.sin_sq);
            if (prev_tunnel) {
                Rational gap_sq = norm_sq(cr.point - *prev_tunnel);
                if (!em.min_tunnel_distance_sq || gap_sq < *em.min_tunnel_distance_sq)
                    em.min_tunnel_distance_sq = gap_sq;
            }
            prev_tunnel = cr.point;
        }

        rep.total_switches += em.switches;
        rep.max_switches = std::max(rep.max_switches, em.switches);
        rep.max_tunnels = std::max(rep.max_tunnels, em.tunnels);
        if (SqrtSum::compare(em.tunnel_length_total, rep.max_tunnel_length) > 0)
            rep.max_tunnel_length = em.tunnel_length_total;
        if (em.min_tunnel_distance_sq &&
            (!rep.min_tunnel_distance_sq ||
             *em.min_tunnel_distance_sq < *rep.min_tunnel_distance_sq))
            rep.min_tunnel_distance_sq = em.min_tunnel_distance_sq;
    }
    return rep;
}

} // namespace cased
