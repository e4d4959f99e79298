#pragma once

#include <string>
#include <string_view>

#include "dualgraph/graph.hpp"

namespace dualgraph {

struct ParseOptions {
  bool require_negative_definite = true;
};

// Parses either the line-oriented text format
//   vertex <name> weight=<int> [genus=<int>] [conductor=<int>]
//   edge <name> <name> [mult=<int>]
// (statements separated by newlines or ';', comments from '#') or the JSON
// format { "vertices": [...], "edges": [...] }. The format is sniffed from
// the first non-space character. Unknown keys are rejected with a location.
WeightedDualGraph parse_graph(std::string_view text, ParseOptions options = {});
WeightedDualGraph parse_graph_file(const std::string& path, ParseOptions options = {});

// Canonical text form; parse(serialize_text(g)) reproduces g.
std::string serialize_text(const WeightedDualGraph& g);
std::string serialize_json(const WeightedDualGraph& g);

// Graphviz export with weight/genus labels.
std::string to_dot(const WeightedDualGraph& g);

}  // namespace dualgraph
