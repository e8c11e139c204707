#pragma once

#include "dartcover/cover.hpp"
#include "dartcover/graph.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dartcover {

/// F(b,c)-Cover is polynomial exactly for b <= 1 or (b,c) = (2,0).
inline bool bouquet_is_polynomial(int b, int c) { return b <= 1 || (b == 2 && c == 0); }

/// Maps every dart of `piece` onto a one-vertex target given by its semi-edge
/// darts and loop dart pairs, ignoring colours. Writes `image` (indexed by
/// piece dart) and returns false when no cover exists. Throws
/// UnsupportedFamily for bouquets outside the polynomial range.
bool factor_onto_bouquet(const Graph& piece, std::span<const Dart> semis,
                         std::span<const std::pair<Dart, Dart>> loops, std::vector<Dart>& image);

/// Per colour set {a,b} (a <= b): sorted colours of the vertex's own darts
/// on links of that set. Any cover preserves it.
using ClassProfile = std::map<std::pair<Color, Color>, std::vector<Color>>;

ClassProfile class_profile(const Graph& g, VertexId v);

/// Cover G -> H (H with one or two vertices) sending vertex u to side[u],
/// or nullopt when that vertex map does not extend. Every monochromatic
/// loop/semi-edge piece is factored, directed loops and bars are split into
/// perfect matchings. On failure `why` (when given) names the piece that
/// failed. Throws UnsupportedFamily when a piece is a hard bouquet.
std::optional<DartMapping> cover_from_partition(const Graph& g, const Graph& h, const std::vector<int>& side,
                                                std::string* why = nullptr);

}  // namespace dartcover
