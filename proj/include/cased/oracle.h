#ifndef CASED_ORACLE_H
#define CASED_ORACLE_H

#include "cased/crossing_graph.h"
#include "cased/stacking.h"

#include <optional>
#include <string>

namespace cased {

enum class CasingModel { Stacking, Weaving };

enum class Objective {
    MinTotalSwitches,
    MinMaxSwitches,
    MinMaxTunnels,
    MinMaxTunnelLength,
    MaxMinTunnelDistance,
};

const char* to_string(CasingModel model);
const char* to_string(Objective objective);

/// Objective value in whichever field the objective uses; distances use the
/// empty optional for "no two tunnels anywhere" (vacuously unbounded).
struct ObjectiveValue {
    Objective objective;
    long long count = 0;                  // switch/tunnel objectives
    SqrtSum length;                       // tunnel length
    std::optional<Rational> distance_sq;  // min tunnel distance (squared)

    std::string str() const;
};

/// Compares two casing evaluations for the objective; negative when `a` is
/// better (we minimize the min-max objectives, maximize the distance).
int objective_order(const ObjectiveValue& a, const ObjectiveValue& b);

ObjectiveValue evaluate_objective(const Arrangement& arr, const ObjectiveReport& report,
                                  Objective objective);

struct OracleLimits {
    size_t weaving_max_crossings = 16;
    size_t stacking_max_edges = 7;
};

struct OracleResult {
    ObjectiveValue value;
    Casing witness;
    CasingModel model;
    std::string fingerprint; // hash of the drawing
};

/// Brute-force ground truth: every casing (weaving, 2^k) or every stacking
/// order (m!).  Deliberately dumb; the first optimum in enumeration order
/// wins.  Switch objectives are counted by a direct scan, independent of
/// the constraint-graph path used by casing_metrics.
/// Throws CapExceeded over the limits.
OracleResult enumerate_optimal_casing(const Drawing& d, CasingModel model, Objective objective,
                                      const OracleLimits& limits = {});

/// Topological order of the "above" relation when the casing is stackable,
/// otherwise nothing.
std::optional<StackingOrder> is_stackable(const Arrangement& arr, const Casing& c);

std::string drawing_fingerprint(const Drawing& d);

} // namespace cased

#endif
