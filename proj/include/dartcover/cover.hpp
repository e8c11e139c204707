#pragma once

#include "dartcover/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dartcover {

/// Candidate covering projection: a dart map plus an explicit vertex map.
/// The vertex map is redundant for vertices that own darts but is the only
/// record of where dart-free vertices go.
struct DartMapping {
    std::vector<Dart> dart_map;
    std::vector<VertexId> vertex_map;

    bool operator==(const DartMapping&) const = default;
};

/// Vertex map induced by the dart map; dart-free vertices get kNoVertex.
std::vector<VertexId> induced_vertex_map(const Graph& g, const Graph& h, const std::vector<Dart>& dart_map);

enum class CoverViolationKind {
    NotLocalBijection,
    LinkBroken,
    ColorMismatch,
    NotSurjective,
    VertexColorMismatch,
};

const char* to_string(CoverViolationKind kind);

struct CoverViolation {
    CoverViolationKind kind;
    std::vector<Dart> darts;          // G darts involved (H darts for NotSurjective)
    std::vector<VertexId> vertices;   // G vertices involved (H vertices for NotSurjective)
    std::string detail;
};

/// Checks that `f` is a colour-respecting covering projection G -> H:
/// every vertex star maps bijectively onto one target star, every link maps
/// onto a link (an edge may fold onto a semi-edge), and colours agree.
/// With `require_surjective`, every H vertex and dart must be hit.
/// Throws std::invalid_argument when `f` is not total.
std::vector<CoverViolation> verify_cover(const Graph& g, const Graph& h, const DartMapping& f,
                                         bool require_surjective = true);

/// Redundant check in the standard model: the preimage of every H link is a
/// spanning matching / cycle union / edge-and-semi-edge union of the right
/// fibres. Only meaningful when the vertex map is a local bijection.
bool fiber_conditions_hold(const Graph& g, const Graph& h, const DartMapping& f);

/// Limits for the exact search. Zero means unlimited.
struct SearchLimits {
    std::uint64_t max_nodes = 0;
};

/// Exhaustive search for a covering projection onto connected H. Every
/// component of G is searched independently. Returns nullopt when none
/// exists. Throws OutOfScope when H is disconnected and ResourceLimit when
/// `limits` run out.
std::optional<DartMapping> find_cover(const Graph& g, const Graph& h, const SearchLimits& limits = {});

struct CoverEnumeration {
    std::vector<DartMapping> covers;
    bool limit_reached = false;
};

/// All covering projections onto connected H, in deterministic search order,
/// stopping after `limit` of them.
CoverEnumeration enumerate_covers(const Graph& g, const Graph& h, std::size_t limit);

/// Number of G vertices over each H vertex. Throws std::invalid_argument
/// when `f` does not verify as a local covering projection.
std::vector<int> preimage_profile(const Graph& g, const Graph& h, const DartMapping& f);

/// f2 after f1.
DartMapping compose(const DartMapping& f1, const DartMapping& f2);

}  // namespace dartcover
