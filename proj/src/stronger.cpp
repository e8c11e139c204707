#include "dartcover/stronger.hpp"

#include "dartcover/errors.hpp"
#include "dartcover/generate.hpp"

#include <algorithm>
#include <exception>

#include <omp.h>

namespace dartcover {

namespace {

int regular_degree_of(const Graph& a)
{
    require_valid(a);
    if (!is_connected(a))
        throw OutOfScope("stronger-than search needs a connected graph");
    const auto p = structural_predicates(a);
    if (!p.is_regular)
        throw UnsupportedFamily("stronger-than search supports regular graphs only");
    return p.regular_degree;
}

struct Tested {
    std::optional<DartMapping> to_a;
    bool covers_b = true;
};

Tested test_one(const Graph& g, const Graph& a, const Graph* b)
{
    Tested t;
    t.to_a = find_cover(g, a);
    if (t.to_a && b)
        t.covers_b = find_cover(g, *b).has_value();
    return t;
}

StrongerReport run(const Graph& a, const Graph* b, int n_max, int jobs, bool parallel)
{
    const int d = regular_degree_of(a);
    if (b)
        require_valid(*b);
    StrongerReport report;
    report.n_max = n_max;

    std::vector<std::vector<Graph>> by_order(std::max(n_max, 0) + 1);
    generate_simple_graphs({n_max, d, true}, [&](const SimpleGraph& s) {
        if (s.n % a.num_vertices() == 0)
            by_order[s.n].push_back(from_simple(s));
    });

    for (int n = 1; n <= n_max; ++n) {
        const auto& cands = by_order[n];
        const long count = static_cast<long>(cands.size());
        std::vector<Tested> results(count);
        std::vector<std::exception_ptr> errors(count);
        if (parallel) {
#pragma omp parallel for schedule(dynamic) num_threads(std::max(jobs, 1))
            for (long i = 0; i < count; ++i) {
                try {
                    results[i] = test_one(cands[i], a, b);
                }
                catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        }
        else {
            for (long i = 0; i < count; ++i)
                results[i] = test_one(cands[i], a, b);
        }
        for (const auto& e : errors)
            if (e)
                std::rethrow_exception(e);

        report.graphs_generated += count;
        for (long i = 0; i < count; ++i) {
            if (!results[i].to_a)
                continue;
            report.covers_of_a.push_back(cands[i]);
            if (results[i].covers_b)
                continue;
            if (!report.counterexample) {
                report.counterexample = cands[i];
                report.witness_to_a = results[i].to_a;
            }
            report.minimum_counterexamples.push_back(cands[i]);
        }
        if (report.counterexample) {
            report.outcome = StrongerReport::Outcome::Counterexample;
            break;
        }
    }
    return report;
}

}  // namespace

std::vector<Graph> enumerate_simple_covers(const Graph& a, int n_max, int jobs)
{
    return run(a, nullptr, n_max, jobs, true).covers_of_a;
}

StrongerReport check_stronger(const Graph& a, const Graph& b, int n_max, int jobs)
{
    return run(a, &b, n_max, jobs, true);
}

StrongerReport check_stronger_serial(const Graph& a, const Graph& b, int n_max)
{
    return run(a, &b, n_max, 1, false);
}

EquivalenceReport check_equivalent(const Graph& a, const Graph& b, int n_max, int jobs)
{
    return {check_stronger(a, b, n_max, jobs), check_stronger(b, a, n_max, jobs)};
}

}  // namespace dartcover
