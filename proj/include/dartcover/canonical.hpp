#pragma once

#include "dartcover/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dartcover {

/// Simple graph on at most 64 vertices as adjacency bit rows.
struct SimpleGraph {
    int n = 0;
    std::vector<std::uint64_t> rows;

    bool adjacent(int u, int v) const { return (rows[u] >> v) & 1U; }
    void add_edge(int u, int v)
    {
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }
    int degree(int v) const;

    bool operator==(const SimpleGraph&) const = default;
};

/// Throws InvalidGraph when g is not simple or has more than 64 vertices.
SimpleGraph to_simple(const Graph& g);
Graph from_simple(const SimpleGraph& s);

/// Canonical labelling: lab[v] is the new index of vertex v. Isomorphic
/// graphs relabel to identical graphs.
std::vector<int> canonical_labeling(const SimpleGraph& g);

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& lab);
SimpleGraph canonical_form(const SimpleGraph& g);

/// Byte string of the canonical form, usable as a hash key.
std::string certificate(const SimpleGraph& g);

}  // namespace dartcover
