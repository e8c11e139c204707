#include "dartcover/two_sat.hpp"

#include <stdexcept>

namespace dartcover {

void TwoSatFormula::add_clause(Literal a, Literal b)
{
    if (a < 0 || a >= 2 * num_vars_ || b < 0 || b >= 2 * num_vars_)
        throw std::out_of_range("2-SAT literal references an undeclared variable");
    clauses_.emplace_back(a, b);
}

void TwoSatFormula::add_equal(int x, int y)
{
    add_clause(pos(x), neg(y));
    add_clause(neg(x), pos(y));
}

void TwoSatFormula::add_different(int x, int y)
{
    add_clause(pos(x), pos(y));
    add_clause(neg(x), neg(y));
}

std::optional<std::vector<bool>> two_sat_solve(const TwoSatFormula& f)
{
    const int n = 2 * f.num_vars();
    std::vector<int> start(n + 1, 0);
    for (auto [a, b] : f.clauses()) {
        ++start[negate(a) + 1];
        ++start[negate(b) + 1];
    }
    for (int i = 0; i < n; ++i)
        start[i + 1] += start[i];
    std::vector<int> adj(start[n]);
    std::vector<int> fill(start.begin(), start.end() - 1);
    for (auto [a, b] : f.clauses()) {
        adj[fill[negate(a)]++] = b;
        adj[fill[negate(b)]++] = a;
    }

    // Iterative Tarjan; components are numbered in reverse topological order.
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<int> stack, call, edge_pos(n, 0);
    std::vector<char> on_stack(n, 0);
    int counter = 0, comps = 0;
    auto visit = [&](int root) {
        call.push_back(root);
        while (!call.empty()) {
            const int v = call.back();
            if (index[v] < 0) {
                index[v] = low[v] = counter++;
                edge_pos[v] = start[v];
                stack.push_back(v);
                on_stack[v] = 1;
            }
            if (edge_pos[v] < start[v + 1]) {
                const int w = adj[edge_pos[v]++];
                if (index[w] < 0)
                    call.push_back(w);
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
                continue;
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp[w] = comps;
                } while (w != v);
                ++comps;
            }
            call.pop_back();
            if (!call.empty())
                low[call.back()] = std::min(low[call.back()], low[v]);
        }
    };
    for (int var = 0; var < f.num_vars(); ++var) {
        if (index[neg(var)] < 0)
            visit(neg(var));
        if (index[pos(var)] < 0)
            visit(pos(var));
    }

    std::vector<bool> assignment(f.num_vars());
    for (int var = 0; var < f.num_vars(); ++var) {
        if (comp[pos(var)] == comp[neg(var)])
            return std::nullopt;
        assignment[var] = comp[pos(var)] < comp[neg(var)];
    }
    return assignment;
}

}  // namespace dartcover
