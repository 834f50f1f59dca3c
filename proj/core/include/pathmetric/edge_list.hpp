#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "pathmetric/graph.hpp"

namespace pathmetric {

/// How an edge-list value is interpreted.
enum class GraphMode { weight, conductance };

// Edge-list documents: one `<label> <label> <value>` per line, where value is
// a nonnegative decimal or `inf`; `vertex <label>` declares a vertex; `#`
// starts a comment; blank lines are ignored. Labels get ids in order of first
// appearance.
//
// Throws ParseError, AsymmetryError (conflicting duplicate), DiagonalError,
// NegativeWeightError or ZeroWeightError.
WeightedGraph parse_weighted_graph(std::string_view text);
ConductanceGraph parse_conductance_graph(std::string_view text);

std::variant<WeightedGraph, ConductanceGraph> parse_graph(std::string_view text, GraphMode mode);

/// Canonical form: every vertex declared in id order, then each stored
/// unordered pair once (x < y) with its shortest round-trip value.
std::string serialize(const WeightedGraph& g);
std::string serialize(const ConductanceGraph& b);

}  // namespace pathmetric
