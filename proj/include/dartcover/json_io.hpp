#pragma once

#include "dartcover/cover.hpp"
#include "dartcover/dichotomy.hpp"
#include "dartcover/disconnected.hpp"
#include "dartcover/poly_deciders.hpp"
#include "dartcover/stronger.hpp"

#include <json.hpp>

namespace dartcover {

using Json = nlohmann::ordered_json;

/// {vertex_map, dart_map, fiber_sizes}
Json witness_json(const Graph& g, const Graph& h, const DartMapping& f);

/// {nodes, edges, weights}; nodes are "g<i>" / "h<j>" with their sizes.
Json pattern_json(const CoveringPattern& p);

/// {semantics, answer, sigma, fiber_profile?, pattern, reason?, witness?}
Json decision_json(const Graph& g, const Graph& h, const Decision& d);

Json classification_json(const Classification& c);

Json verdict_json(const Graph& g, const Graph& h, const DeciderVerdict& v);

/// Graphs are embedded in their text serialization.
Json stronger_json(const StrongerReport& r);

}  // namespace dartcover
