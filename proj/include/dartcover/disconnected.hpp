#pragma once

#include "dartcover/cover.hpp"
#include "dartcover/graph.hpp"
#include "dartcover/matching.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dartcover {

struct PatternEdge {
    int i;       // component of G
    int j;       // component of H
    int weight;  // |V(G_i)| / |V(H_j)|
    DartMapping witness;  // component-local cover G_i -> H_j

    bool operator==(const PatternEdge&) const = default;
};

/// Weighted bipartite graph over the components of G and H with an edge
/// wherever G_i covers H_j. Edges are sorted by (i, j).
struct CoveringPattern {
    std::vector<int> g_sizes;  // vertices per component of G
    std::vector<int> h_sizes;
    std::vector<PatternEdge> edges;

    int p() const { return static_cast<int>(g_sizes.size()); }
    int q() const { return static_cast<int>(h_sizes.size()); }
    /// Neighbours of g_i, ascending.
    std::vector<int> neighbours(int i) const;
    const PatternEdge* edge(int i, int j) const;

    bool operator==(const CoveringPattern&) const = default;
};

/// Decides A -> B for connected A and B, returning a witness or nullopt.
using CellDecider = std::function<std::optional<DartMapping>(const Graph& a, const Graph& b)>;

/// Polynomial decider where the target classifies as P, otherwise the
/// exact search, refused with ResourceLimit above `dart_budget` darts.
CellDecider default_cell_decider(int dart_budget = 96);

/// Resolves all p*q cells in parallel over `jobs` OpenMP threads. A failing
/// cell is rethrown with its (i,j) pair; the lowest failing cell wins.
CoveringPattern build_pattern(const Graph& g, const Graph& h, const CellDecider& decider, int jobs = 1);

/// Single-threaded reference for build_pattern.
CoveringPattern build_pattern_serial(const Graph& g, const Graph& h, const CellDecider& decider);

/// Pattern from explicit weights, for testing the semantic deciders;
/// weights[i][j] = 0 means no edge.
CoveringPattern pattern_from_weights(const std::vector<std::vector<int>>& weights, std::vector<int> g_sizes,
                                     std::vector<int> h_sizes);

enum class Semantics { LBHom, Surjective, Equitable, Cover };

const char* to_string(Semantics s);
std::optional<Semantics> parse_semantics(const std::string& s);

struct Decision {
    Semantics semantics = Semantics::LBHom;
    bool answer = false;
    std::vector<int> sigma;  // target component per source component; empty on no
    std::optional<std::vector<int>> fiber_profile;  // per H vertex, with a witness
    CoveringPattern pattern;
    std::optional<DartMapping> witness;
    std::string reason;
};

BipartiteMatching max_pattern_matching(const CoveringPattern& p);

/// Every g_i has a neighbour; sigma takes the smallest.
Decision decide_lbhom(const CoveringPattern& p);

/// Non-isolated g_i plus a matching saturating every h_j; sigma is the
/// lexicographically smallest onto assignment.
Decision decide_surjective(const CoveringPattern& p);

/// Every h_j receives exactly k = nG/nH fibre; sigma is the lexicographically
/// smallest such assignment.
Decision decide_equitable(const CoveringPattern& p, long long n_g, long long n_h);

struct DecideOptions {
    int dart_budget = 96;
    int jobs = 1;
};

/// Full pipeline: components, pattern, semantic decision and, on request,
/// a stitched witness that is verified before it is returned. `Cover`
/// requires connected H.
Decision decide(const Graph& g, const Graph& h, Semantics semantics, bool want_witness,
                const DecideOptions& options = {});

}  // namespace dartcover
