#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace dartcover {

/// Literal 2v is variable v, 2v+1 its negation.
using Literal = int;

inline Literal pos(int var) { return 2 * var; }
inline Literal neg(int var) { return 2 * var + 1; }
inline Literal negate(Literal l) { return l ^ 1; }

class TwoSatFormula {
public:
    explicit TwoSatFormula(int num_vars = 0) : num_vars_(num_vars) {}

    int num_vars() const noexcept { return num_vars_; }
    const std::vector<std::pair<Literal, Literal>>& clauses() const noexcept { return clauses_; }

    /// (a or b). Throws std::out_of_range for undeclared variables.
    void add_clause(Literal a, Literal b);
    void add_unit(Literal a) { add_clause(a, a); }
    void add_equal(int x, int y);
    void add_different(int x, int y);

private:
    int num_vars_;
    std::vector<std::pair<Literal, Literal>> clauses_;
};

/// Satisfying assignment via strongly connected components of the
/// implication graph, or nullopt. An unconstrained variable comes out false.
std::optional<std::vector<bool>> two_sat_solve(const TwoSatFormula& f);

}  // namespace dartcover
