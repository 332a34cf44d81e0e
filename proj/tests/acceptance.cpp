// Acceptance suite: runs every agreed criterion at its stated tolerance and
// prints one pass/fail line per criterion.  Exit code is the failure count.

#include "cased/fixtures.h"
#include "cased/io.h"
#include "cased/oracle.h"
#include "cased/stacking.h"
#include "cased/switches.h"
#include "cased/tunnels.h"

#include <chrono>
#include <deque>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

using namespace cased;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        detail = body();
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!ok)
        ++failures;
    std::ostringstream line;
    line << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " - " << title;
    if (!detail.empty())
        line << " (" << detail << ")";
    line << " [" << static_cast<int>(seconds * 1000) << " ms]";
    std::cout << line.str() << std::endl;
}

struct CheckFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond)
        throw CheckFailed(what);
}

// independent bipartiteness test on the crossing graph
bool crossing_graph_bipartite(const Arrangement& arr) {
    CrossingGraph g = build_crossing_graph(arr);
    std::vector<int> colour(g.node_count, -1);
    for (int root = 0; root < g.node_count; ++root) {
        if (colour[root] >= 0)
            continue;
        colour[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int li : g.incident_links[u]) {
                int v = g.links[li].a == u ? g.links[li].b : g.links[li].a;
                if (colour[v] < 0) {
                    colour[v] = 1 - colour[u];
                    queue.push_back(v);
                } else if (colour[v] == colour[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<Drawing> corpus_max_crossings(size_t max_k, int want, int min_segments,
                                          int max_segments) {
    std::vector<Drawing> out;
    for (uint64_t seed = 1; static_cast<int>(out.size()) < want && seed < 4000; ++seed) {
        int segments = min_segments + static_cast<int>(seed % (max_segments - min_segments + 1));
        Drawing d = fixture_random_segments(segments, seed);
        size_t k = build_arrangement(d).crossing_count();
        if (k >= 1 && k <= max_k)
            out.push_back(std::move(d));
    }
    return out;
}

} // namespace

int main() {
    // 1. exact tunnel-length formula at gamma = 2*arctan(1/4)
    criterion(1, "tunnel length at gamma = 2*arctan(1/4) equals 17w/8 exactly", [] {
        const Rational sin_sq_gamma(64, 289);
        int checked = 0;
        for (const Rational& w :
             {Rational(1), Rational(1, 10), Rational(3, 7), Rational(17, 8), Rational(2)}) {
            SqrtSum expected = SqrtSum::of_rational(w * Rational(17, 8));
            require(tunnel_length(w, sin_sq_gamma) == expected, "17w/8 mismatch");
            ++checked;
        }
        // the same angle arises from mirrored slope-4 directions
        require(crossing_sin_sq({Rational(1), Rational(4)}, {Rational(1), Rational(-4)}) ==
                    sin_sq_gamma,
                "slope +-4 pair does not give sin^2 = (8/17)^2");
        return std::to_string(checked) + " widths, exact rational equality";
    });

    // 2. zero-switch casing <=> bipartite crossing graph <=> no odd face polygon
    criterion(2, "zero-switch / bipartite / odd-face three-way agreement on 200 drawings", [] {
        int with_odd = 0;
        for (uint64_t seed = 1; seed <= 200; ++seed) {
            Drawing d = fixture_random_segments(3 + static_cast<int>(seed % 6), seed);
            Arrangement arr = build_arrangement(d);
            auto zero = zero_switch_casing(arr);
            bool bipartite = crossing_graph_bipartite(arr);
            int q = odd_face_polygons(build_arrangement(degree_one_transform(d))).count();
            require(zero.has_value() == bipartite, "zero-switch vs bipartite disagree");
            require(bipartite == (q == 0), "bipartite vs odd-face disagree");
            if (zero)
                require(casing_metrics(arr, *zero).total_switches == 0,
                        "claimed zero-switch casing has switches");
            if (q > 0)
                ++with_odd;
        }
        return "200 drawings, " + std::to_string(with_odd) + " with odd faces";
    });

    // 3 + 4. exact MinTotalSwitches against the 2^k oracle, with the lower bound
    static std::vector<Drawing> corpus14;
    corpus14 = corpus_max_crossings(14, 100, 4, 7);
    criterion(3, "MinTotalSwitches equals the 2^k oracle on 100 drawings and fixtures", [] {
        require(corpus14.size() == 100, "corpus generation fell short");
        for (const Drawing& d : corpus14) {
            auto sol = solve_min_total_switches(d);
            auto oracle =
                enumerate_optimal_casing(d, CasingModel::Weaving, Objective::MinTotalSwitches);
            require(sol.report.total_switches == oracle.value.count,
                    "solver differs from oracle");
        }
        require(solve_min_total_switches(fixture_triangle()).report.total_switches == 1,
                "triangle != 1");
        require(solve_min_total_switches(fixture_two_triangles()).report.total_switches == 2,
                "two-triangles != 2");
        require(solve_min_total_switches(fixture_pentagram()).report.total_switches == 1,
                "pentagram != 1");
        require(solve_min_total_switches(fixture_grid(3, 3)).report.total_switches == 0,
                "grid3x3 != 0");
        return "100 random drawings + 4 fixtures, exact equality";
    });

    criterion(4, "lower bound ceil(o/2) never exceeds the optimum on the corpus", [] {
        for (const Drawing& d : corpus14) {
            Arrangement arr = build_arrangement(d);
            auto sol = solve_min_total_switches(d);
            require(switch_lower_bound(arr) <= sol.report.total_switches,
                    "lower bound above optimum");
        }
        return std::to_string(corpus14.size()) + " instances";
    });

    // 5. greedy stacking equals the m! oracle for all three objectives
    criterion(5, "greedy stacking equals the m! oracle on 100 instances x 3 objectives", [] {
        int instances = 0;
        for (uint64_t seed = 1; instances < 100 && seed < 2000; ++seed) {
            Drawing d = fixture_random_segments(3 + static_cast<int>(seed % 4), seed * 31 + 7);
            if (d.edges.size() > 6)
                continue;
            ++instances;
            struct Case {
                StackingObjective solver;
                Objective oracle;
            };
            for (auto [sobj, oobj] :
                 {Case{StackingObjective::MinMaxTunnels, Objective::MinMaxTunnels},
                  Case{StackingObjective::MinMaxTunnelLength, Objective::MinMaxTunnelLength},
                  Case{StackingObjective::MaxMinTunnelDistance,
                       Objective::MaxMinTunnelDistance}}) {
                auto sol = solve_stacking(d, sobj);
                auto oracle = enumerate_optimal_casing(d, CasingModel::Stacking, oobj);
                ObjectiveValue got;
                got.objective = oobj;
                got.count = sol.value.tunnels;
                got.length = sol.value.length;
                got.distance_sq = sol.value.min_gap_sq;
                require(objective_order(got, oracle.value) == 0,
                        std::string("greedy non-optimal for ") + to_string(oobj));
            }
        }
        require(instances == 100, "corpus generation fell short");
        return "100 instances, exact equality";
    });

    // 6. weaving MinMaxTunnels: grid values and oracle agreement
    criterion(6, "MinMaxTunnels: grid3x3 weaving 2 vs stacking 3; orientation = oracle", [] {
        Drawing grid = fixture_grid(3, 3);
        require(solve_min_max_tunnels_weaving(grid).max_tunnels == 2, "grid weaving != 2");
        require(enumerate_optimal_casing(grid, CasingModel::Weaving, Objective::MinMaxTunnels)
                        .value.count == 2,
                "grid weaving oracle != 2");
        require(enumerate_optimal_casing(grid, CasingModel::Stacking, Objective::MinMaxTunnels)
                        .value.count == 3,
                "grid stacking oracle != 3");
        int tested = 0;
        for (const Drawing& d : corpus14) {
            if (build_arrangement(d).crossing_count() > 12)
                continue;
            ++tested;
            auto sol = solve_min_max_tunnels_weaving(d);
            auto oracle =
                enumerate_optimal_casing(d, CasingModel::Weaving, Objective::MinMaxTunnels);
            require(sol.max_tunnels == oracle.value.count, "orientation differs from oracle");
        }
        return "grid values + " + std::to_string(tested) + " corpus instances";
    });

    // 7. MaxMinTunnelDistance: grid optimum, monotone decisions, figure formula
    criterion(7, "MaxMinTunnelDistance: grid delta*=2, monotone 2-SAT, figure clause shape", [] {
        Drawing grid = fixture_grid(3, 3);
        auto sol = solve_max_min_tunnel_distance_weaving(grid);
        require(!sol.unbounded && sol.best_sq == Rational(4), "grid delta*^2 != 4");
        auto oracle = enumerate_optimal_casing(grid, CasingModel::Weaving,
                                               Objective::MaxMinTunnelDistance);
        require(oracle.value.distance_sq == Rational(4), "grid oracle != 4");

        int tested = 0;
        for (const Drawing& d : corpus14) {
            Arrangement arr = build_arrangement(d);
            CandidateSet cands = candidate_distances(arr);
            bool infeasible_seen = false;
            for (const Rational& delta_sq : cands.squared) {
                bool feasible = max_min_distance_feasible(arr, delta_sq).has_value();
                if (!feasible)
                    infeasible_seen = true;
                else
                    require(!infeasible_seen, "2-SAT feasibility is not monotone");
            }
            ++tested;
        }

        // five segments shaped like the figure: one spine crossed by four
        // verticals at 0, 1, 7/2 and 4; threshold delta^2 = (16/5)^2
        Drawing fig;
        fig.casing_width = Rational(1, 10);
        int vid = 0;
        auto add = [&](Rational x1, Rational y1, Rational x2, Rational y2) {
            fig.vertices.push_back({vid, {x1, y1}});
            fig.vertices.push_back({vid + 1, {x2, y2}});
            fig.edges.push_back({static_cast<int>(fig.edges.size()) + 1, vid, vid + 1});
            vid += 2;
        };
        add(0, -1, 0, 1);                             // e1
        add(1, -1, 1, 1);                             // e2
        add(-1, 0, 5, 0);                             // e3, the spine
        add(Rational(7, 2), -1, Rational(7, 2), 1);   // e4
        add(4, -1, 4, 1);                             // e5
        fig.normalize();
        Arrangement arr = build_arrangement(fig);
        DistanceDecision dec = build_distance_decision(arr, Rational(256, 25));
        require(dec.clause_literals.size() == 4, "figure formula clause count != 4");
        // expected structure over crossings of (edge ids) with negation flags
        auto edge_ids = [&](CrossingId c) {
            return std::make_pair(fig.edges[arr.crossings[c].edge_a].id,
                                  fig.edges[arr.crossings[c].edge_b].id);
        };
        std::vector<std::string> got;
        for (size_t i = 0; i < dec.clause_literals.size(); ++i) {
            std::ostringstream ss;
            for (int side = 0; side < 2; ++side) {
                auto [a, b] = edge_ids(dec.clause_literals[i][side]);
                ss << (side ? " or " : "(") << (dec.clause_negated[i][side] ? "!" : "") << "x"
                   << a << b;
            }
            ss << ")";
            got.push_back(ss.str());
        }
        std::sort(got.begin(), got.end());
        std::vector<std::string> expect = {"(!x13 or !x23)", "(!x23 or x34)", "(!x23 or x35)",
                                           "(x34 or x35)"};
        std::sort(expect.begin(), expect.end());
        require(got == expect, "clause polarity differs from the figure");
        return "grid + " + std::to_string(tested) + " monotone corpora + figure formula";
    });

    // 8. exact NP-hard tunnel-length solver vs oracle, budget error honoured
    criterion(8, "MinMaxTunnelLength exact solver = oracle (k <= 12), budget respected", [] {
        int tested = 0;
        for (const Drawing& d : corpus14) {
            if (build_arrangement(d).crossing_count() > 12)
                continue;
            ++tested;
            auto sol = solve_min_max_tunnel_length_exact(d);
            auto oracle = enumerate_optimal_casing(d, CasingModel::Weaving,
                                                   Objective::MinMaxTunnelLength);
            require(sol.value == oracle.value.length, "exact solver differs from oracle");
        }
        bool budget_hit = false;
        try {
            solve_min_max_tunnel_length_exact(fixture_grid(3, 3), 5);
        } catch (const BudgetExceeded&) {
            budget_hit = true;
        }
        require(budget_hit, "budget exhaustion not reported");
        return std::to_string(tested) + " corpus instances + budget error";
    });

    // 9. figure fixtures
    criterion(9, "figure fixtures: bundle-square optimum 4, weave-grid optimum 12", [] {
        // smallest oracle-tractable bundle size: full 2^16 enumeration
        Drawing small = fixture_bundle_square(1);
        auto small_sol = solve_min_total_switches(small);
        auto small_oracle =
            enumerate_optimal_casing(small, CasingModel::Weaving, Objective::MinTotalSwitches);
        require(small_sol.report.total_switches == small_oracle.value.count,
                "bundle-square(1) solver differs from oracle");

        // the depicted size: four bundles of five, reported optimum four
        auto big = solve_min_total_switches(fixture_bundle_square(5));
        require(big.report.total_switches == 4, "bundle-square(5) != 4");

        // weave grid: lower bound, explicit certificate, reported optimum 12
        Drawing weave = fixture_weave_grid(1);
        Arrangement arr = build_arrangement(weave);
        auto sol = solve_min_total_switches(weave);
        require(*sol.report.switch_lower_bound <= sol.report.total_switches,
                "lower bound above weave-grid optimum");
        require(sol.report.total_switches == 12, "weave-grid optimum != 12");
        require(!is_stackable(arr, sol.casing).has_value(),
                "weave-grid optimum unexpectedly stackable");

        // explicit certificate: bundles cased canonically, the sixteen central
        // crossings brute-forced; independent of the matching pipeline
        CrossingGraph g = build_crossing_graph(arr);
        std::vector<int> central; // link indices between two normal segments
        Casing base;
        base.a_on_top.assign(arr.crossing_count(), false);
        auto is_normal = [&](EdgeIndex e) { return e >= 4; }; // edges 0..3 are bundle sides
        auto diag_class = [&](EdgeIndex e) {
            // slope -1 sides (NE, SW) are edges 0 and 2 of the frame
            return e == 0 || e == 2;
        };
        for (const auto& cr : arr.crossings) {
            bool na = is_normal(cr.edge_a), nb = is_normal(cr.edge_b);
            if (na && nb) {
                central.push_back(cr.id);
            } else if (!na && !nb) {
                base.a_on_top[cr.id] = diag_class(cr.edge_a);
            } else {
                base.a_on_top[cr.id] = !na ? diag_class(cr.edge_a) : !diag_class(cr.edge_b);
            }
        }
        require(central.size() == 16, "weave-grid central grid is not 4x4");
        long long best = -1;
        for (uint32_t mask = 0; mask < (1u << 16); ++mask) {
            Casing c = base;
            for (int i = 0; i < 16; ++i)
                c.a_on_top[central[i]] = (mask >> i) & 1;
            long long switches = casing_metrics(arr, c).total_switches;
            if (best < 0 || switches < best)
                best = switches;
        }
        require(best == 12, "explicit certificate family does not reach 12");
        return "bundle-square(1) oracle-exact, bundle-square(5) = 4, weave-grid = 12 "
               "(non-stackable, certificate 12, bound " +
               std::to_string(*sol.report.switch_lower_bound) + ")";
    });

    // 10. asymptotic claims out of scope; a 500-segment smoke benchmark instead
    criterion(10, "500-segment smoke benchmark: every in-scope objective under 60 s", [] {
        Drawing d = fixture_random_segments(500, 1);
        std::ostringstream times;
        auto timed = [&](const char* label, const std::function<void()>& run) {
            auto start = std::chrono::steady_clock::now();
            run();
            double s =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            times << label << " " << static_cast<int>(s * 1000) << "ms ";
            require(s < 60.0, std::string(label) + " exceeded 60 s");
        };
        timed("stack-tunnels",
              [&] { solve_stacking(d, StackingObjective::MinMaxTunnels); });
        timed("stack-length",
              [&] { solve_stacking(d, StackingObjective::MinMaxTunnelLength); });
        timed("stack-distance",
              [&] { solve_stacking(d, StackingObjective::MaxMinTunnelDistance); });
        timed("weave-switches", [&] { solve_min_total_switches(d); });
        timed("weave-tunnels", [&] { solve_min_max_tunnels_weaving(d); });
        timed("weave-distance", [&] { solve_max_min_tunnel_distance_weaving(d); });
        return times.str();
    });

    if (failures == 0)
        std::cout << "acceptance: all criteria passed" << std::endl;
    else
        std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
    return failures;
}
