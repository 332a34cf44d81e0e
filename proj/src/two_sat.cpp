#include "cased/two_sat.h"

#include <algorithm>

namespace cased {

TwoSat::TwoSat(int variable_count) : n_(variable_count), implications_(2 * variable_count) {}

void TwoSat::add_clause(int a, bool negate_a, int b, bool negate_b) {
    // (la or lb) == (!la -> lb) and (!lb -> la)
    implications_[literal(a, !negate_a)].push_back(literal(b, negate_b));
    implications_[literal(b, !negate_b)].push_back(literal(a, negate_a));
    ++clause_count_;
}

std::optional<std::vector<bool>> TwoSat::solve() const {
    const int nodes = 2 * n_;
    // iterative Tarjan
    std::vector<int> index(nodes, -1), low(nodes, 0), comp(nodes, -1);
    std::vector<bool> on_stack(nodes, false);
    std::vector<int> stack;
    int next_index = 0, next_comp = 0;

    struct Frame {
        int v;
        size_t child;
    };
    std::vector<Frame> frames;
    for (int start = 0; start < nodes; ++start) {
        if (index[start] >= 0)
            continue;
        frames.push_back({start, 0});
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            if (child < implications_[v].size()) {
                int w = implications_[v][child++];
                if (index[w] < 0) {
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                for (;;) {
                    int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if (w == v)
                        break;
                }
                ++next_comp;
            }
            int finished = v;
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().v] = std::min(low[frames.back().v], low[finished]);
        }
    }

    std::vector<bool> model(n_);
    for (int x = 0; x < n_; ++x) {
        if (comp[2 * x] == comp[2 * x + 1])
            return std::nullopt;
        // Tarjan numbers sink components first; a literal is safe to assert
        // when its component sits closer to the sinks (smaller number).
        model[x] = comp[2 * x] < comp[2 * x + 1];
    }
    return model;
}

} // namespace cased
