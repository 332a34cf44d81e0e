#ifndef CASED_STACKING_H
#define CASED_STACKING_H

#include "cased/crossing_graph.h"

#include <map>
#include <optional>
#include <set>
#include <vector>

namespace cased {

enum class StackingObjective {
    MinMaxTunnels,
    MinMaxTunnelLength,
    MaxMinTunnelDistance,
};

/// Global bottom-to-top order on the edges; the later edge wins every
/// crossing it is involved in.
struct StackingOrder {
    std::vector<EdgeIndex> bottom_first;
    Casing to_casing(const Arrangement& arr) const;
};

/// Live tunnel positions of one edge with their minimum consecutive gap,
/// under removals.  Positions are crossing points along the edge; gaps are
/// exact squared euclidean distances.  Removal merges the two adjacent gaps
/// in O(log n).
class EdgeGapStructure {
  public:
    void insert(const Rational& param, const Point& where);
    void remove(const Rational& param);
    size_t size() const { return positions_.size(); }
    /// smallest squared consecutive gap; empty when fewer than 2 positions
    std::optional<Rational> min_gap_sq() const;

  private:
    std::map<Rational, Point> positions_;
    std::multiset<Rational> gaps_sq_;
};

/// Per-objective value of an edge "if it were bottommost": its tunnel count,
/// its total tunnel length, or its minimum gap (empty = unbounded).
struct BottomValue {
    int tunnels = 0;
    SqrtSum length;
    std::optional<Rational> min_gap_sq;
};

std::vector<BottomValue> bottom_values(const Arrangement& arr, StackingObjective objective);

struct StackingSolution {
    StackingOrder order;
    Casing casing;
    ObjectiveReport report;
    /// aggregate objective value over edges at their selection time:
    /// max for the min-max objectives, min for max-min
    BottomValue value;
};

/// Greedy bottommost selection: repeatedly pick the remaining edge whose
/// current value is best for the objective (ties to the lowest edge id),
/// then update its crossing partners.  Selection state is kept in ordered
/// structures with logarithmic update.
StackingSolution solve_stacking(const Drawing& d, StackingObjective objective);

} // namespace cased

#endif
