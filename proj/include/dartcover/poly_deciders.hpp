#pragma once

#include "dartcover/cover.hpp"
#include "dartcover/graph.hpp"

#include <optional>
#include <string>

namespace dartcover {

enum class DeciderMethod {
    Regularity,
    Matching,
    TwoFactor,
    BipartiteDecomposition,
    TwoSat,
    Partition,
    BruteForceFallback,
};

const char* to_string(DeciderMethod m);

struct DeciderVerdict {
    bool answer = false;
    DeciderMethod method = DeciderMethod::Regularity;
    std::optional<DartMapping> witness;  // present on every yes
    std::string reason;                  // why not, on a no
};

/// G -> F(b,c) for b <= 1 or (b,c) = (2,0). Colours are ignored; the
/// witness targets build_F(b,c). Throws UnsupportedFamily otherwise.
DeciderVerdict decide_one_vertex(const Graph& g, int b, int c);

/// G -> W(0,0,k,0,0), k >= 1: bipartite and k-regular without loops or
/// semi-edges. Colours are ignored; the witness targets build_W(0,0,k,0,0).
DeciderVerdict decide_bipartite_bars(const Graph& g, int k);

/// Two-vertex coloured H whose vertices are told apart by colour, degree
/// signature or per-colour-set profile. Throws UnsupportedFamily when a
/// loop/semi-edge piece at a vertex is a hard bouquet.
DeciderVerdict decide_two_vertex_nonregular(const Graph& g, const Graph& h);

/// Two-vertex coloured H whose vertices look alike. Builds a 2-SAT formula
/// with x_u true iff u maps to vertex 0 and expands a model into a witness.
/// Throws UnsupportedFamily for a piece without a clause schema.
DeciderVerdict decide_two_vertex_regular_2sat(const Graph& g, const Graph& h);

}  // namespace dartcover
