#include "cased/tunnels.h"

#include <algorithm>
#include <limits>

namespace cased {

namespace {

struct Dinic {
    struct Arc {
        int to, rev;
        int cap;
    };
    std::vector<std::vector<Arc>> g;
    std::vector<int> level, iter;

    explicit Dinic(int n) : g(n), level(n), iter(n) {}

    void add_arc(int from, int to, int cap) {
        g[from].push_back({to, static_cast<int>(g[to].size()), cap});
        g[to].push_back({from, static_cast<int>(g[from].size()) - 1, 0});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::vector<int> queue{s};
        level[s] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (const auto& a : g[v])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    queue.push_back(a.to);
                }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t)
            return f;
        for (int& i = iter[v]; i < static_cast<int>(g[v].size()); ++i) {
            Arc& a = g[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    g[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int max_flow(int s, int t) {
        int flow = 0;
        while (bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            while (int f = dfs(s, t, std::numeric_limits<int>::max()))
                flow += f;
        }
        return flow;
    }
};

// network: source -> link (1) -> two endpoint nodes (1) -> sink (bound)
std::optional<std::vector<bool>> orient_with_bound(const CrossingGraph& g, int bound) {
    const int link_count = static_cast<int>(g.links.size());
    const int source = 0;
    const int link_base = 1;
    const int node_base = link_base + link_count;
    const int sink = node_base + g.node_count;
    Dinic flow(sink + 1);
    for (int l = 0; l < link_count; ++l) {
        flow.add_arc(source, link_base + l, 1);
        flow.add_arc(link_base + l, node_base + g.links[l].a, 1);
        flow.add_arc(link_base + l, node_base + g.links[l].b, 1);
    }
    for (int v = 0; v < g.node_count; ++v)
        flow.add_arc(node_base + v, sink, bound);
    if (flow.max_flow(source, sink) != link_count)
        return std::nullopt;
    std::vector<bool> toward_b(link_count);
    for (int l = 0; l < link_count; ++l) {
        for (const auto& a : flow.g[link_base + l]) {
            if (a.to == source || a.cap != 0)
                continue;
            toward_b[l] = a.to == node_base + g.links[l].b;
            break;
        }
    }
    return toward_b;
}

} // namespace

Orientation min_max_indegree_orientation(const CrossingGraph& g) {
    Orientation out;
    if (g.links.empty())
        return out;
    int lo = 0, hi = 0;
    for (const auto& list : g.incident_links)
        hi = std::max(hi, static_cast<int>(list.size()));
    std::optional<std::vector<bool>> best;
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        auto attempt = orient_with_bound(g, mid);
        if (attempt) {
            best = std::move(attempt);
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    if (!best)
        best = orient_with_bound(g, lo);
    if (!best)
        throw Error("internal: orientation infeasible at its own degree bound");
    out.toward_b = *best;
    std::vector<int> indeg(g.node_count, 0);
    for (size_t l = 0; l < g.links.size(); ++l)
        indeg[out.toward_b[l] ? g.links[l].b : g.links[l].a]++;
    out.max_indegree = *std::max_element(indeg.begin(), indeg.end());
    if (out.max_indegree != lo)
        throw Error("internal: orientation bound mismatch");
    return out;
}

Casing Orientation::to_casing(const Arrangement& arr, const CrossingGraph& g) const {
    Casing c;
    c.a_on_top.assign(arr.crossing_count(), false);
    for (size_t l = 0; l < g.links.size(); ++l) {
        // tunnel side below: when the link points at b, a stays on top
        c.a_on_top[g.links[l].crossing] = toward_b[l];
    }
    return c;
}

TunnelsSolution solve_min_max_tunnels_weaving(const Drawing& d) {
    require_valid(d);
    Arrangement arr = build_arrangement(d);
    CrossingGraph g = build_crossing_graph(arr);
    Orientation orientation = min_max_indegree_orientation(g);
    TunnelsSolution sol;
    sol.casing = orientation.to_casing(arr, g);
    sol.report = casing_metrics(arr, sol.casing);
    sol.max_tunnels = orientation.max_indegree;
    if (sol.report.max_tunnels != sol.max_tunnels)
        throw Error("internal: tunnel count differs from orientation indegree");
    return sol;
}

CandidateSet candidate_distances(const Arrangement& arr) {
    CandidateSet out;
    for (const auto& list : arr.per_edge) {
        for (size_t i = 0; i < list.size(); ++i)
            for (size_t j = i + 1; j < list.size(); ++j) {
                out.squared.push_back(norm_sq(arr.crossings[list[j]].point -
                                              arr.crossings[list[i]].point));
                out.pair_count++;
            }
    }
    std::sort(out.squared.begin(), out.squared.end());
    out.squared.erase(std::unique(out.squared.begin(), out.squared.end()), out.squared.end());
    return out;
}

DistanceDecision build_distance_decision(const Arrangement& arr, const Rational& delta_sq) {
    DistanceDecision dec{TwoSat(static_cast<int>(arr.crossing_count())), {}, {}};
    for (size_t e = 0; e < arr.per_edge.size(); ++e) {
        const auto& list = arr.per_edge[e];
        for (size_t i = 0; i < list.size(); ++i) {
            for (size_t j = i + 1; j < list.size(); ++j) {
                const Crossing& c1 = arr.crossings[list[i]];
                const Crossing& c2 = arr.crossings[list[j]];
                if (norm_sq(c2.point - c1.point) >= delta_sq)
                    continue;
                // forbid edge e tunnelling at both crossings; the variable is
                // true when the crossing's lower-indexed edge has the bridge
                bool neg1 = c1.edge_b == static_cast<EdgeIndex>(e);
                bool neg2 = c2.edge_b == static_cast<EdgeIndex>(e);
                dec.formula.add_clause(c1.id, neg1, c2.id, neg2);
                dec.clause_literals.push_back({c1.id, c2.id});
                dec.clause_negated.push_back({neg1, neg2});
            }
        }
    }
    return dec;
}

std::optional<Casing> max_min_distance_feasible(const Arrangement& arr,
                                                const Rational& delta_sq) {
    if (delta_sq <= 0)
        throw Error("max_min_distance_feasible: threshold must be positive");
    DistanceDecision dec = build_distance_decision(arr, delta_sq);
    auto model = dec.formula.solve();
    if (!model)
        return std::nullopt;
    Casing c;
    c.a_on_top.assign(arr.crossing_count(), false);
    for (size_t i = 0; i < arr.crossing_count(); ++i)
        c.a_on_top[i] = (*model)[i];
    return c;
}

MaxMinDistanceSolution solve_max_min_tunnel_distance_weaving(const Drawing& d) {
    require_valid(d);
    Arrangement arr = build_arrangement(d);
    CandidateSet cands = candidate_distances(arr);
    MaxMinDistanceSolution sol;

    if (cands.empty()) {
        sol.unbounded = true;
        auto c = max_min_distance_feasible(arr, Rational(1));
        if (!c)
            throw Error("internal: empty distance formula unsatisfiable");
        sol.casing = *c;
        sol.report = casing_metrics(arr, sol.casing);
        return sol;
    }

    // a casing where no edge gets two tunnels beats every finite candidate
    if (auto free = max_min_distance_feasible(arr, cands.squared.back() + 1)) {
        sol.unbounded = true;
        sol.casing = *free;
        sol.report = casing_metrics(arr, sol.casing);
        if (sol.report.min_tunnel_distance_sq)
            throw Error("internal: unbounded casing still has a tunnel pair");
        return sol;
    }

    // monotone decision: feasible at the smallest candidate (no strictly
    // closer pair exists), infeasible above the largest
    size_t lo = 0, hi = cands.squared.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi + 1) / 2;
        if (max_min_distance_feasible(arr, cands.squared[mid]))
            lo = mid;
        else
            hi = mid - 1;
    }
    auto best = max_min_distance_feasible(arr, cands.squared[lo]);
    if (!best)
        throw Error("internal: smallest candidate infeasible");
    sol.casing = *best;
    sol.best_sq = cands.squared[lo];
    sol.report = casing_metrics(arr, sol.casing);
    if (!sol.report.min_tunnel_distance_sq || *sol.report.min_tunnel_distance_sq < *sol.best_sq)
        throw Error("internal: casing violates its own distance bound");
    return sol;
}

namespace {

struct LengthSearch {
    const Arrangement& arr;
    long long budget;
    long long explored = 0;

    std::vector<SqrtSum> edge_sums;
    std::vector<SqrtSum> terms; // tunnel length of each crossing (side-independent)
    std::vector<bool> choice;
    std::vector<bool> best_choice;
    SqrtSum best_value;
    bool have_best = false;

    explicit LengthSearch(const Arrangement& a, long long b) : arr(a), budget(b) {
        edge_sums.resize(arr.drawing.edges.size());
        choice.resize(arr.crossing_count());
        for (const auto& c : arr.crossings)
            terms.push_back(tunnel_length(arr.drawing.casing_width, c.sin_sq));
    }

    void run(size_t depth, const SqrtSum& current_max) {
        if (++explored > budget)
            throw BudgetExceeded("tunnel-length search exceeded its node budget of " +
                                 std::to_string(budget));
        if (have_best && SqrtSum::compare(current_max, best_value) >= 0)
            return;
        if (depth == arr.crossing_count()) {
            best_value = current_max;
            best_choice = choice;
            have_best = true;
            return;
        }
        const Crossing& c = arr.crossings[depth];
        for (bool a_top : {true, false}) {
            EdgeIndex tunnel_edge = a_top ? c.edge_b : c.edge_a;
            const SqrtSum& term = terms[depth];
            SqrtSum saved = edge_sums[tunnel_edge];
            edge_sums[tunnel_edge] += term;
            choice[depth] = a_top;
            SqrtSum next_max = current_max;
            if (SqrtSum::compare(edge_sums[tunnel_edge], next_max) > 0)
                next_max = edge_sums[tunnel_edge];
            run(depth + 1, next_max);
            edge_sums[tunnel_edge] = std::move(saved);
        }
    }
};

} // namespace

TunnelLengthSolution solve_min_max_tunnel_length_exact(const Drawing& d, long long node_budget) {
    require_valid(d);
    Arrangement arr = build_arrangement(d);
    TunnelLengthSolution sol;

    // seed the incumbent with the indegree-orientation casing
    CrossingGraph g = build_crossing_graph(arr);
    Orientation orientation = min_max_indegree_orientation(g);
    Casing seed = orientation.to_casing(arr, g);
    ObjectiveReport seed_report = casing_metrics(arr, seed);

    LengthSearch search(arr, node_budget);
    search.best_value = seed_report.max_tunnel_length;
    search.best_choice.assign(arr.crossing_count(), false);
    for (size_t i = 0; i < arr.crossing_count(); ++i)
        search.best_choice[i] = seed.a_on_top[i];
    search.have_best = true;
    search.run(0, SqrtSum());

    sol.casing.a_on_top.assign(arr.crossing_count(), false);
    for (size_t i = 0; i < arr.crossing_count(); ++i)
        sol.casing.a_on_top[i] = search.best_choice[i];
    sol.value = search.best_value;
    sol.explored_nodes = search.explored;
    sol.report = casing_metrics(arr, sol.casing);
    if (sol.report.max_tunnel_length != sol.value)
        throw Error("internal: tunnel-length value mismatch");
    return sol;
}

} // namespace cased
