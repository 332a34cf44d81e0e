#ifndef CASED_TWO_SAT_H
#define CASED_TWO_SAT_H

#include <optional>
#include <vector>

namespace cased {

/// 2-SAT over variables 0..n-1, solved with the implication graph and
/// Tarjan's strongly connected components; a satisfying assignment is read
/// off the reverse-topological component order, which makes the model
/// deterministic.
class TwoSat {
  public:
    explicit TwoSat(int variable_count);

    /// Adds the clause (a or b); negate_* flips the literal.
    void add_clause(int a, bool negate_a, int b, bool negate_b);

    int variable_count() const { return n_; }
    int clause_count() const { return clause_count_; }

    /// Satisfying assignment, or nothing when unsatisfiable.
    std::optional<std::vector<bool>> solve() const;

  private:
    int literal(int var, bool negated) const { return 2 * var + (negated ? 1 : 0); }
    int n_;
    int clause_count_ = 0;
    std::vector<std::vector<int>> implications_; // literal -> implied literals
};

} // namespace cased

#endif
