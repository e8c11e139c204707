#pragma once

#include "dartcover/cover.hpp"
#include "dartcover/graph.hpp"
#include "dartcover/poly_deciders.hpp"

#include <string>
#include <vector>

namespace dartcover {

/// Recognised shape of a piece with at most two vertices.
struct FamilyShape {
    enum class Kind {
        F,                // params b, c
        W,                // params k, m, l, p, q
        WD,               // params m, l, m2
        DirectedBouquet,  // one vertex, params m (directed loops)
        Other,
    };
    Kind kind = Kind::Other;
    std::vector<int> params;

    std::string to_string() const;
    bool operator==(const FamilyShape&) const = default;
};

/// Throws OutOfScope for more than two vertices.
FamilyShape recognize_shape(const Graph& piece);

enum class Verdict { P, NPComplete };

const char* to_string(Verdict v);

struct PieceVerdict {
    std::string piece;  // e.g. "colour 0 at vertex v" or "colours {0,1}"
    FamilyShape shape;
    Verdict verdict = Verdict::P;
    std::string rule;
};

struct Classification {
    Verdict verdict = Verdict::P;
    int branch = 0;  // 1 one vertex, 2 distinguishable vertices, 3 alike vertices
    std::vector<std::string> rule_chain;
    std::vector<PieceVerdict> pieces;
};

/// P / NP-complete verdict for H-Cover, H connected with at most two
/// vertices. Throws OutOfScope otherwise.
Classification classify(const Graph& h);

/// Folds vertex colours into dart colours by Cantor pairing; vertex colours
/// become 0 except on dart-free vertices, which keep theirs.
Graph shade_vertex_colors(const Graph& g);

/// Colour-respecting G -> H for connected H with at most two vertices.
/// Polynomial branches dispatch to the matching decider; NP-complete targets
/// fall back to the exact search under `limits`.
DeciderVerdict decide_colored(const Graph& g, const Graph& h, const SearchLimits& limits = {});

}  // namespace dartcover
