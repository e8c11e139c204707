#pragma once

#include "dartcover/canonical.hpp"

#include <functional>
#include <vector>

namespace dartcover {

struct GenerateOptions {
    int n_max = 0;
    /// When >= 0, only d-regular graphs are produced; intermediate graphs
    /// have maximum degree <= d and a deficiency that n_max still allows.
    int regular_degree = -1;
    bool connected_only = true;
};

/// Calls `visit` once per isomorphism class of simple graphs on 1..n_max
/// vertices, in increasing order, deterministically. Graphs are grown one
/// vertex at a time and deduplicated per order by canonical certificate.
void generate_simple_graphs(const GenerateOptions& options, const std::function<void(const SimpleGraph&)>& visit);

/// Convenience: all visited graphs of order exactly n.
std::vector<SimpleGraph> simple_graphs_of_order(int n, int regular_degree = -1, bool connected_only = true);

bool is_connected(const SimpleGraph& g);

}  // namespace dartcover
