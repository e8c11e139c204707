#pragma once

#include "dartcover/graph.hpp"

#include <optional>
#include <vector>

namespace dartcover {

struct BipartiteMatching {
    std::vector<int> match_left;   // right partner or -1
    std::vector<int> match_right;  // left partner or -1
    int size = 0;
};

/// Maximum-cardinality matching by augmenting paths. Neighbours are tried
/// in list order, so the result is deterministic.
BipartiteMatching max_bipartite_matching(int n_left, int n_right, const std::vector<std::vector<int>>& adj);

struct BipartiteEdge {
    int left;
    int right;
};

/// Splits a k-regular bipartite multigraph into k perfect matchings, each a
/// list of edge indices ordered by left endpoint. Returns nullopt when the
/// graph is not k-regular on equal sides.
std::optional<std::vector<std::vector<int>>> split_regular_bipartite(int n_left, int n_right,
                                                                     const std::vector<BipartiteEdge>& edges,
                                                                     int k);

struct MatchingEdge {
    int u;
    int v;
};

/// Maximum matching in a general multigraph (Edmonds' blossoms). Returns,
/// per vertex, the index of its matched edge or -1. Loops are ignored.
std::vector<int> max_general_matching(int n, const std::vector<MatchingEdge>& edges);

/// Set of links covering every vertex exactly once, where a semi-edge covers
/// its own vertex and loops are unusable.
std::optional<std::vector<LinkId>> general_perfect_matching(const Graph& g);

}  // namespace dartcover
