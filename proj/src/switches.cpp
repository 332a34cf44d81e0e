#include "cased/switches.h"

#include <algorithm>
#include <deque>
#include <map>

namespace cased {

namespace {

// Face adjacency through between-crossings portions only: a break anywhere
// else releases no soft constraint and cannot change any face polygon's
// parity, so those arcs never help a break path.
struct DualGraph {
    std::vector<std::vector<std::pair<FaceId, PortionId>>> adj;

    explicit DualGraph(const Arrangement& arr) : adj(arr.faces.size()) {
        for (const auto& p : arr.portions) {
            if (p.kind != PortionKind::BetweenCrossings || p.two_sided())
                continue;
            adj[p.face_fwd].push_back({p.face_rev, p.id});
            adj[p.face_rev].push_back({p.face_fwd, p.id});
        }
    }

    struct Bfs {
        std::vector<int> dist;
        std::vector<PortionId> parent_portion;
        std::vector<FaceId> parent_face;
    };

    Bfs bfs(FaceId source) const {
        Bfs out;
        out.dist.assign(adj.size(), -1);
        out.parent_portion.assign(adj.size(), -1);
        out.parent_face.assign(adj.size(), -1);
        out.dist[source] = 0;
        std::deque<FaceId> queue{source};
        while (!queue.empty()) {
            FaceId f = queue.front();
            queue.pop_front();
            for (const auto& [g, portion] : adj[f]) {
                if (out.dist[g] >= 0)
                    continue;
                out.dist[g] = out.dist[f] + 1;
                out.parent_portion[g] = portion;
                out.parent_face[g] = f;
                queue.push_back(g);
            }
        }
        return out;
    }
};

} // namespace

OddFaceSet odd_face_polygons(const Arrangement& arr) {
    OddFaceSet out;
    for (const auto& rec : arr.face_records)
        if (rec.is_odd)
            out.faces.push_back(rec.face);
    return out;
}

DualDistances dual_distances(const Arrangement& arr, const OddFaceSet& odd) {
    DualGraph dual(arr);
    const int q = odd.count();
    DualDistances out;
    out.dist.assign(q + 1, std::vector<int>(q + 1, DualDistances::kUnreachable));
    std::vector<FaceId> sources = odd.faces;
    sources.push_back(arr.unbounded_face);
    for (int i = 0; i <= q; ++i) {
        auto bfs = dual.bfs(sources[i]);
        for (int j = 0; j <= q; ++j)
            out.dist[i][j] = bfs.dist[sources[j]];
    }
    return out;
}

MatchingInstance build_matching_instance(const DualDistances& dd, const OddFaceSet& odd) {
    MatchingInstance inst;
    const int q = odd.count();
    inst.odd_face_count = q;
    for (int i = 0; i < q; ++i) {
        for (int j = i + 1; j < q; ++j)
            if (dd.between(i, j) >= 0)
                inst.edges.push_back({i, j, dd.between(i, j)});
        if (dd.between(i, q) >= 0)
            inst.edges.push_back({i, q + i, dd.between(i, q)});
    }
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            inst.edges.push_back({q + i, q + j, 0});
    return inst;
}

namespace {

// Greedy lexicographic tie refinement: in node order, pin the cheapest
// partner that keeps the total optimal.  Quadratically many re-solves, so
// only applied to small instances; larger ones stay deterministic anyway.
PerfectMatching canonicalize(int n, const std::vector<MatchingEdge>& edges,
                             const PerfectMatching& first) {
    std::vector<std::vector<long long>> w(n, std::vector<long long>(n, -1));
    for (const auto& e : edges)
        if (w[e.u][e.v] < 0 || e.weight < w[e.u][e.v])
            w[e.u][e.v] = w[e.v][e.u] = e.weight;

    PerfectMatching out;
    out.partner.assign(n, -1);
    out.total_weight = first.total_weight;
    std::vector<bool> fixed(n, false);
    long long remaining = first.total_weight;

    auto solve_rest = [&](int skip_a, int skip_b) -> long long {
        std::vector<int> live;
        for (int v = 0; v < n; ++v)
            if (!fixed[v] && v != skip_a && v != skip_b)
                live.push_back(v);
        if (live.empty())
            return 0;
        std::vector<int> index(n, -1);
        for (size_t i = 0; i < live.size(); ++i)
            index[live[i]] = static_cast<int>(i);
        std::vector<MatchingEdge> sub;
        for (const auto& e : edges)
            if (index[e.u] >= 0 && index[e.v] >= 0)
                sub.push_back({index[e.u], index[e.v], e.weight});
        try {
            return min_weight_perfect_matching(static_cast<int>(live.size()), sub).total_weight;
        } catch (const Error&) {
            return -1;
        }
    };

    for (int i = 0; i < n; ++i) {
        if (fixed[i])
            continue;
        std::vector<std::pair<long long, int>> candidates;
        for (int j = 0; j < n; ++j)
            if (j != i && !fixed[j] && w[i][j] >= 0)
                candidates.push_back({w[i][j], j});
        std::sort(candidates.begin(), candidates.end());
        bool done = false;
        for (const auto& [wij, j] : candidates) {
            long long rest = solve_rest(i, j);
            if (rest >= 0 && wij + rest == remaining) {
                out.partner[i] = j;
                out.partner[j] = i;
                fixed[i] = fixed[j] = true;
                remaining -= wij;
                done = true;
                break;
            }
        }
        if (!done)
            throw Error("matching canonicalization failed");
    }
    return out;
}

} // namespace

PerfectMatching min_weight_perfect_matching(const MatchingInstance& inst) {
    const int n = inst.node_count();
    PerfectMatching pm = min_weight_perfect_matching(n, inst.edges);
    if (n > 0 && n <= 24)
        pm = canonicalize(n, inst.edges, pm);
    return pm;
}

int switch_lower_bound(const Arrangement& arr) {
    Arrangement transformed = build_arrangement(degree_one_transform(arr.drawing));
    int odd = odd_face_polygons(transformed).count();
    return (odd + 1) / 2;
}

namespace {

// 2-colouring of the constraint graph with the given soft links removed:
// hard links force inequality, remaining soft links force equality.
// Components are rooted at their lowest incidence, rooted "on top".
std::vector<bool> colour_relaxed_constraints(const ConstraintGraph& cg, const BreakSet& breaks) {
    struct Arc {
        int to;
        bool flip;
    };
    std::vector<std::vector<Arc>> adj(cg.incidences.size());
    for (const auto& h : cg.hard_links) {
        adj[h.inc_a].push_back({h.inc_b, true});
        adj[h.inc_b].push_back({h.inc_a, true});
    }
    for (const auto& s : cg.soft_links) {
        if (std::binary_search(breaks.portions.begin(), breaks.portions.end(),
                               s.separating_portion))
            continue;
        adj[s.inc_a].push_back({s.inc_b, false});
        adj[s.inc_b].push_back({s.inc_a, false});
    }
    std::vector<int> value(cg.incidences.size(), -1);
    for (size_t root = 0; root < cg.incidences.size(); ++root) {
        if (value[root] >= 0)
            continue;
        value[root] = 1;
        std::deque<int> queue{static_cast<int>(root)};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const auto& arc : adj[u]) {
                int want = arc.flip ? 1 - value[u] : value[u];
                if (value[arc.to] < 0) {
                    value[arc.to] = want;
                    queue.push_back(arc.to);
                } else if (value[arc.to] != want) {
                    throw Error("internal: relaxed constraint graph has an odd parity cycle");
                }
            }
        }
    }
    std::vector<bool> out(value.size());
    for (size_t i = 0; i < value.size(); ++i)
        out[i] = value[i] == 1;
    return out;
}

Casing casing_from_incidences(const Arrangement& arr, const ConstraintGraph& cg,
                              const std::vector<bool>& on_top) {
    Casing casing;
    casing.a_on_top.assign(arr.crossing_count(), false);
    for (const auto& h : cg.hard_links) {
        const auto& inc_a = cg.incidences[h.inc_a];
        bool a_top = on_top[h.inc_a];
        if (on_top[h.inc_a] == on_top[h.inc_b])
            throw Error("internal: hard constraint violated");
        EdgeIndex top_edge = a_top ? inc_a.edge : cg.incidences[h.inc_b].edge;
        casing.a_on_top[h.crossing] = top_edge == arr.crossings[h.crossing].edge_a;
    }
    return casing;
}

// The transform preserves edge ids and crossings, so both arrangements list
// crossings in the same (edge_a, edge_b) order.
Casing map_casing(const Arrangement& from, const Arrangement& to, const Casing& casing) {
    if (from.crossing_count() != to.crossing_count())
        throw Error("internal: crossing sets diverged in the degree-one transform");
    for (size_t i = 0; i < from.crossings.size(); ++i) {
        if (from.crossings[i].edge_a != to.crossings[i].edge_a ||
            from.crossings[i].edge_b != to.crossings[i].edge_b)
            throw Error("internal: crossing order diverged in the degree-one transform");
    }
    return casing;
}

} // namespace

namespace {

// Break paths have to merge the parities of boundary *cycles*, not faces: a
// face with islands has several boundary cycles whose parities matter
// separately (an island's walk can be odd on its own).  Arcs of this dual
// join the two cycles bordering a breakable portion; cycles of the unbounded
// face never need fixing and act as free terminals.
struct CycleDual {
    std::vector<std::vector<std::pair<int, PortionId>>> adj;

    explicit CycleDual(const Arrangement& arr) : adj(arr.boundary_cycles.size()) {
        for (const auto& p : arr.portions) {
            if (p.kind != PortionKind::BetweenCrossings || p.cycle_fwd == p.cycle_rev)
                continue;
            adj[p.cycle_fwd].push_back({p.cycle_rev, p.id});
            adj[p.cycle_rev].push_back({p.cycle_fwd, p.id});
        }
    }

    struct Bfs {
        std::vector<int> dist;
        std::vector<PortionId> parent_portion;
        std::vector<int> parent_cycle;
    };

    Bfs bfs(int source) const {
        Bfs out;
        out.dist.assign(adj.size(), -1);
        out.parent_portion.assign(adj.size(), -1);
        out.parent_cycle.assign(adj.size(), -1);
        out.dist[source] = 0;
        std::deque<int> queue{source};
        while (!queue.empty()) {
            int c = queue.front();
            queue.pop_front();
            for (const auto& [g, portion] : adj[c]) {
                if (out.dist[g] >= 0)
                    continue;
                out.dist[g] = out.dist[c] + 1;
                out.parent_portion[g] = portion;
                out.parent_cycle[g] = c;
                queue.push_back(g);
            }
        }
        return out;
    }
};

} // namespace

SwitchesSolution solve_min_total_switches(const Drawing& d) {
    require_valid(d);
    Arrangement original = build_arrangement(d);
    Drawing transformed_drawing = degree_one_transform(d);
    Arrangement transformed = build_arrangement(transformed_drawing);

    OddFaceSet odd = odd_face_polygons(transformed);
    SwitchesSolution sol;
    sol.odd_face_count = odd.count();

    // terminals: odd boundary cycles outside the unbounded face
    std::vector<int> terminals;
    std::vector<int> exempt; // odd or even cycles of the unbounded face
    for (const auto& cycle : transformed.boundary_cycles) {
        if (cycle.face == transformed.unbounded_face)
            exempt.push_back(cycle.id);
        else if (cycle.odd())
            terminals.push_back(cycle.id);
    }
    if (terminals.empty() != (odd.count() == 0))
        throw Error("internal: odd cycles and odd face polygons disagree");

    if (terminals.empty()) {
        auto zero = zero_switch_casing(transformed);
        if (!zero)
            throw Error("internal: no odd face polygon but crossing graph is not bipartite");
        sol.casing = map_casing(transformed, original, *zero);
        sol.matching_weight = 0;
    } else {
        CycleDual dual(transformed);
        const int q = static_cast<int>(terminals.size());
        std::vector<CycleDual::Bfs> searches;
        searches.reserve(q);
        for (int i = 0; i < q; ++i)
            searches.push_back(dual.bfs(terminals[i]));

        // nearest exempt cycle per terminal (the break path may end in the
        // unbounded region)
        std::vector<int> exempt_dist(q, -1), exempt_target(q, -1);
        for (int i = 0; i < q; ++i) {
            for (int e : exempt) {
                int dist = searches[i].dist[e];
                if (dist >= 0 && (exempt_dist[i] < 0 || dist < exempt_dist[i])) {
                    exempt_dist[i] = dist;
                    exempt_target[i] = e;
                }
            }
        }

        MatchingInstance inst;
        inst.odd_face_count = q;
        for (int i = 0; i < q; ++i) {
            for (int j = i + 1; j < q; ++j) {
                int dist = searches[i].dist[terminals[j]];
                if (dist >= 0)
                    inst.edges.push_back({i, j, dist});
            }
            if (exempt_dist[i] >= 0)
                inst.edges.push_back({i, q + i, exempt_dist[i]});
        }
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j)
                inst.edges.push_back({q + i, q + j, 0});

        PerfectMatching pm = min_weight_perfect_matching(inst);
        sol.matching_weight = pm.total_weight;

        std::vector<PortionId> break_portions;
        auto add_path = [&](int term_index, int target_cycle) {
            const auto& bfs = searches[term_index];
            if (bfs.dist[target_cycle] < 0)
                throw Error("internal: matched cycles unreachable in the dual");
            for (int at = target_cycle; at != terminals[term_index];
                 at = bfs.parent_cycle[at])
                break_portions.push_back(bfs.parent_portion[at]);
        };
        for (int i = 0; i < q; ++i) {
            int j = pm.partner[i];
            if (j < q) {
                if (i < j)
                    add_path(i, terminals[j]);
            } else {
                add_path(i, exempt_target[i]);
            }
        }
        std::sort(break_portions.begin(), break_portions.end());
        break_portions.erase(std::unique(break_portions.begin(), break_portions.end()),
                             break_portions.end());
        sol.breaks.portions = break_portions;

        ConstraintGraph cg = build_constraint_graph(transformed);
        auto on_top = colour_relaxed_constraints(cg, sol.breaks);
        Casing transformed_casing = casing_from_incidences(transformed, cg, on_top);
        sol.casing = map_casing(transformed, original, transformed_casing);
    }

    sol.report = casing_metrics(original, sol.casing);
    sol.report.odd_face_count = sol.odd_face_count;
    sol.report.switch_lower_bound = (sol.odd_face_count + 1) / 2;
    if (sol.report.total_switches != sol.matching_weight)
        throw Error("internal: switch count " + std::to_string(sol.report.total_switches) +
                    " differs from matching weight " + std::to_string(sol.matching_weight));
    return sol;
}

} // namespace cased
