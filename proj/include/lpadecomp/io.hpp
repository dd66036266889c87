#pragma once

#include "lpadecomp/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace lpadecomp {

/// Reads a graph document:
///   {"vertices": ["u", ...],
///    "bundles": [{"id": "e", "source": "u", "target": "v", "multiplicity": 1 | "omega"}, ...]}
/// Unknown fields are rejected. Syntax errors report line and column;
/// validation errors name the offending entity. Both throw InputError.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::filesystem::path& file);

/// Canonical JSON form; parse_graph(serialize_graph(g)) == g.
std::string serialize_graph(const Graph& g);

/// DOT rendering of the graph itself; ω bundles are labelled "∞", bundles
/// of multiplicity n > 1 are labelled "id ×n".
std::string graph_dot(const Graph& g);

} // namespace lpadecomp
