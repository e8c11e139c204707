#pragma once

#include "dartcover/graph.hpp"

#include <string>
#include <string_view>

namespace dartcover {

/// Parses the line-based graph format:
///
///     vertex <id> [color=<n>]
///     edge <u> <v> [colors=<i>,<j>]
///     loop <u> [colors=<i>,<j>]
///     semi <u> [color=<i>]
///
/// '#' starts a comment. Throws ParseError on malformed input.
Graph parse_graph(std::string_view text);

Graph read_graph_file(const std::string& path);

/// Canonical text: vertices in id order, then edges, loops and semi-edges
/// sorted by endpoints and colours. Zero colours are omitted.
std::string serialize_graph(const Graph& g);

void write_graph_file(const std::string& path, const Graph& g);

}  // namespace dartcover
