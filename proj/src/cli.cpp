#include "cased/cli.h"

#include "cased/fixtures.h"
#include "cased/io.h"
#include "cased/oracle.h"
#include "cased/stacking.h"
#include "cased/svg.h"
#include "cased/switches.h"
#include "cased/tunnels.h"

#include <CLI11.hpp>

namespace cased {

namespace {

constexpr const char* kVersion = "cased 1.0.0";

const std::vector<std::string> kModels = {"stacking", "weaving"};
const std::vector<std::string> kObjectives = {"min-total-switches", "min-max-switches",
                                              "min-max-tunnels", "min-max-tunnel-length",
                                              "max-min-tunnel-distance"};

CasingModel parse_model(const std::string& s) {
    return s == "stacking" ? CasingModel::Stacking : CasingModel::Weaving;
}

Objective parse_objective(const std::string& s) {
    if (s == "min-total-switches")
        return Objective::MinTotalSwitches;
    if (s == "min-max-switches")
        return Objective::MinMaxSwitches;
    if (s == "min-max-tunnels")
        return Objective::MinMaxTunnels;
    if (s == "min-max-tunnel-length")
        return Objective::MinMaxTunnelLength;
    return Objective::MaxMinTunnelDistance;
}

// pairs Table 1 leaves open are not served by solve or oracle
bool open_problem(CasingModel model, Objective objective, std::string& why) {
    if (objective == Objective::MinMaxSwitches) {
        why = "min-max-switches is an open problem (Table 1) in either model";
        return true;
    }
    if (model == CasingModel::Stacking && objective == Objective::MinTotalSwitches) {
        why = "min-total-switches in the stacking model is an open problem (Table 1)";
        return true;
    }
    return false;
}

void emit(const std::string& payload, const std::string& path, std::ostream& out) {
    if (path.empty())
        out << payload;
    else
        save_text(path, payload);
}

int run_validate(const std::string& input, std::ostream& out, std::ostream& err) {
    Drawing d = load_drawing(input);
    ValidationReport rep = validate_drawing(d);
    for (const auto& e : rep.errors)
        err << "error: " << e.message << "\n";
    for (const auto& w : rep.warnings)
        err << "warning: " << w.message << "\n";
    Arrangement arr;
    if (rep.ok()) {
        arr = build_arrangement(d);
        out << "ok: " << d.vertices.size() << " vertices, " << d.edges.size() << " edges, "
            << arr.crossing_count() << " crossings, " << rep.warnings.size() << " warnings\n";
        return 0;
    }
    out << "invalid: " << rep.errors.size() << " errors, " << rep.warnings.size()
        << " warnings\n";
    return 2;
}

int run_solve(const std::string& model_name, const std::string& objective_name,
              const std::string& input, const std::string& output, long long budget,
              std::ostream& out, std::ostream& err) {
    CasingModel model = parse_model(model_name);
    Objective objective = parse_objective(objective_name);
    std::string why;
    if (open_problem(model, objective, why)) {
        err << "cannot solve: " << why << "\n";
        return 1;
    }

    Drawing d = load_drawing(input);
    require_valid(d);
    Arrangement arr = build_arrangement(d);

    Casing casing;
    ObjectiveReport report;
    if (model == CasingModel::Weaving) {
        switch (objective) {
        case Objective::MinTotalSwitches: {
            auto sol = solve_min_total_switches(d);
            casing = sol.casing;
            report = sol.report;
            break;
        }
        case Objective::MinMaxTunnels: {
            auto sol = solve_min_max_tunnels_weaving(d);
            casing = sol.casing;
            report = sol.report;
            break;
        }
        case Objective::MinMaxTunnelLength: {
            auto sol = solve_min_max_tunnel_length_exact(d, budget);
            casing = sol.casing;
            report = sol.report;
            break;
        }
        case Objective::MaxMinTunnelDistance: {
            auto sol = solve_max_min_tunnel_distance_weaving(d);
            casing = sol.casing;
            report = sol.report;
            if (sol.unbounded)
                err << "min tunnel distance: unbounded (no edge needs two tunnels)\n";
            break;
        }
        default:
            throw Error("unreachable");
        }
    } else {
        StackingObjective objective_s = objective == Objective::MinMaxTunnels
                                            ? StackingObjective::MinMaxTunnels
                                        : objective == Objective::MinMaxTunnelLength
                                            ? StackingObjective::MinMaxTunnelLength
                                            : StackingObjective::MaxMinTunnelDistance;
        auto sol = solve_stacking(d, objective_s);
        casing = sol.casing;
        report = sol.report;
    }

    ObjectiveValue value = evaluate_objective(arr, report, objective);
    err << objective_name << " (" << model_name << ") = " << value.str() << "\n";
    emit(serialize_casing(arr, casing, &report, {model_name, objective_name, kVersion}), output,
         out);
    return 0;
}

int run_oracle(const std::string& model_name, const std::string& objective_name,
               const std::string& input, const std::string& output, size_t weaving_cap,
               size_t stacking_cap, std::ostream& out, std::ostream& err) {
    CasingModel model = parse_model(model_name);
    Objective objective = parse_objective(objective_name);
    std::string why;
    if (open_problem(model, objective, why)) {
        err << "cannot enumerate: " << why << "\n";
        return 1;
    }
    Drawing d = load_drawing(input);
    OracleLimits limits;
    limits.weaving_max_crossings = weaving_cap;
    limits.stacking_max_edges = stacking_cap;
    OracleResult result = enumerate_optimal_casing(d, model, objective, limits);
    out << objective_name << " (" << model_name << ", exhaustive) = " << result.value.str()
        << "\n";
    if (!output.empty()) {
        Arrangement arr = build_arrangement(d);
        ObjectiveReport report = casing_metrics(arr, result.witness);
        save_text(output, serialize_casing(arr, result.witness, &report,
                                           {model_name, std::string(objective_name) + " (oracle)",
                                            kVersion}));
    }
    return 0;
}

int run_render(const std::string& input, const std::string& casing_path,
               const std::string& output, double margin, double scale, std::ostream& out) {
    Drawing d = load_drawing(input);
    require_valid(d);
    Arrangement arr = build_arrangement(d);
    Casing casing = parse_casing(load_text(casing_path), arr);
    SvgStyle style;
    style.scale = scale;
    if (margin > 0)
        style.casing_margin = margin;
    emit(render_svg(arr, casing, style), output, out);
    return 0;
}

int run_gen(const std::string& fixture, const std::vector<std::string>& params,
            const std::string& width, const std::string& output, std::ostream& out) {
    Drawing d = generate_fixture(fixture, params);
    if (!width.empty()) {
        d.casing_width = parse_rational(width);
        d.normalize();
    }
    emit(serialize_drawing(d), output, out);
    return 0;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"cased drawings: optimal edge casings for straight-line graph drawings"};
    app.name("cased");
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto* validate = app.add_subcommand("validate", "check the input restrictions");
    std::string v_input;
    validate->add_option("input", v_input, "drawing document")->required();

    auto* solve = app.add_subcommand("solve", "case a drawing optimally");
    std::string s_model, s_objective, s_input, s_output;
    long long s_budget = 4'000'000;
    solve->add_option("--model", s_model, "casing model")
        ->required()
        ->check(CLI::IsMember(kModels));
    solve->add_option("--objective", s_objective, "objective to optimize")
        ->required()
        ->check(CLI::IsMember(kObjectives));
    solve->add_option("--exact-budget", s_budget,
                      "search node budget for min-max-tunnel-length (weaving)");
    solve->add_option("input", s_input, "drawing document")->required();
    solve->add_option("-o,--output", s_output, "casing document destination");

    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    std::string o_model, o_objective, o_input, o_output;
    size_t o_wcap = 16, o_scap = 7;
    oracle->add_option("--model", o_model)->required()->check(CLI::IsMember(kModels));
    oracle->add_option("--objective", o_objective)
        ->required()
        ->check(CLI::IsMember(kObjectives));
    oracle->add_option("--weaving-cap", o_wcap, "max crossings for 2^k enumeration");
    oracle->add_option("--stacking-cap", o_scap, "max edges for m! enumeration");
    oracle->add_option("input", o_input, "drawing document")->required();
    oracle->add_option("-o,--output", o_output, "witness casing destination");

    auto* render = app.add_subcommand("render", "draw a cased drawing as SVG");
    std::string r_input, r_casing, r_output;
    double r_margin = 0, r_scale = 32;
    render->add_option("input", r_input, "drawing document")->required();
    render->add_option("casing", r_casing, "casing document")->required();
    render->add_option("-o,--output", r_output, "SVG destination");
    render->add_option("--margin", r_margin, "casing margin in drawing units");
    render->add_option("--scale", r_scale, "SVG units per drawing unit");

    auto* gen = app.add_subcommand("gen", "generate a fixture drawing");
    std::string g_fixture, g_width, g_output;
    std::vector<std::string> g_params;
    gen->add_option("fixture", g_fixture,
                    "grid | triangle | two-triangles | pentagram | parallel-triangles | "
                    "bundle-square | weave-grid | np-slopes-cycle | random-segments")
        ->required();
    gen->add_option("params", g_params, "fixture parameters");
    gen->add_option("--width", g_width, "casing width override");
    gen->add_option("-o,--output", g_output, "drawing destination");

    std::vector<const char*> argv;
    argv.push_back("cased");
    for (const auto& a : args)
        argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(validate))
            return run_validate(v_input, out, err);
        if (app.got_subcommand(solve))
            return run_solve(s_model, s_objective, s_input, s_output, s_budget, out, err);
        if (app.got_subcommand(oracle))
            return run_oracle(o_model, o_objective, o_input, o_output, o_wcap, o_scap, out, err);
        if (app.got_subcommand(render))
            return run_render(r_input, r_casing, r_output, r_margin, r_scale, out);
        if (app.got_subcommand(gen))
            return run_gen(g_fixture, g_params, g_width, g_output, out);
    } catch (const ValidationFailed& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const BudgetExceeded& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const CapExceeded& e) {
        err << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 1;
}

} // namespace cased
