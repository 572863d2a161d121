#pragma once

#include <iosfwd>
#include <string>

#include "rigidlink/graph.hpp"

namespace rigidlink {

enum class GraphFormat { EdgeList, Json };

/// Edge-list format: '#' comment lines, a header "n m", then m lines
/// "u v" with 0 <= u < v < n. JSON format: {"n": int, "edges": [[u,v],...],
/// "labels": {"id": "name", ...}} with labels optional.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph parse_graph(const std::string& text, GraphFormat format);

/// Picks the format by the first non-whitespace character ('{' means JSON).
Graph parse_graph_auto(const std::string& text);

/// Canonical text: edges sorted lexicographically in both formats.
std::string serialize_graph(const Graph& g, GraphFormat format);

/// FNV-1a hash of the canonical JSON serialization, as 16 hex digits.
std::string graph_digest(const Graph& g);

}  // namespace rigidlink
