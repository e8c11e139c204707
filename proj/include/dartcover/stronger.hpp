#pragma once

#include "dartcover/cover.hpp"
#include "dartcover/graph.hpp"

#include <optional>
#include <vector>

namespace dartcover {

/// Connected simple graphs on at most n_max vertices covering A, one per
/// isomorphism class, in increasing order. A must be connected and regular
/// (UnsupportedFamily otherwise).
std::vector<Graph> enumerate_simple_covers(const Graph& a, int n_max, int jobs = 1);

struct StrongerReport {
    enum class Outcome { VerifiedUpTo, Counterexample };

    Outcome outcome = Outcome::VerifiedUpTo;
    int n_max = 0;
    /// First failing graph in generation order; all failures share its order.
    std::optional<Graph> counterexample;
    std::optional<DartMapping> witness_to_a;
    std::vector<Graph> minimum_counterexamples;
    /// Every simple cover of A that was tested, in generation order.
    std::vector<Graph> covers_of_a;
    long graphs_generated = 0;
};

/// Tests every simple cover of A up to n_max against B, stopping after the
/// first order that has a failure. Candidates are tested on `jobs` threads.
StrongerReport check_stronger(const Graph& a, const Graph& b, int n_max, int jobs = 1);

/// Single-threaded reference for check_stronger.
StrongerReport check_stronger_serial(const Graph& a, const Graph& b, int n_max);

struct EquivalenceReport {
    StrongerReport forward;   // A over B
    StrongerReport backward;  // B over A

    bool equivalent() const
    {
        return forward.outcome == StrongerReport::Outcome::VerifiedUpTo &&
               backward.outcome == StrongerReport::Outcome::VerifiedUpTo;
    }
};

EquivalenceReport check_equivalent(const Graph& a, const Graph& b, int n_max, int jobs = 1);

}  // namespace dartcover
