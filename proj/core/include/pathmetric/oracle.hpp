#pragma once

#include <cstddef>
#include <vector>

#include "pathmetric/graph.hpp"
#include "pathmetric/rational.hpp"

// Exact brute-force references. Nothing here shares code with the search,
// linear-algebra or decomposition routines it is used to check, and every
// computation is exhaustive enumeration in exact arithmetic. Enumeration caps
// are hard errors (TooLarge); an oracle never truncates.
//
// Graph values are rationalized through their shortest round-trip decimal,
// so decimal inputs such as 0.1 are read as exactly 1/10.
namespace pathmetric::oracle {

inline constexpr std::size_t kPathVertexCap = 12;
inline constexpr std::size_t kForestVertexCap = 8;

/// All injective paths from x to y in lexicographic order. With
/// `include_infinite_steps`, pairs with infinite weight count as steps too.
std::vector<Path> enumerate_simple_paths(const WeightedGraph& g, VertexId x, VertexId y,
                                         std::size_t max_vertices = kPathVertexCap,
                                         bool include_infinite_steps = false);

/// Same over the positive-conductance edges.
std::vector<Path> enumerate_simple_paths(const ConductanceGraph& b, VertexId x, VertexId y,
                                         std::size_t max_vertices = kPathVertexCap);

/// Exact length of a path (nullopt if any step is infinite).
ExactWeight exact_length(const WeightedGraph& g, const Path& p);

/// Minimum exact length over every simple path from x to y.
ExactWeight brute_metric(const WeightedGraph& g, VertexId x, VertexId y, std::size_t max_vertices = kPathVertexCap);

/// brute_metric from x to every vertex, from a single exhaustive walk.
std::vector<ExactWeight> brute_metric_from(const WeightedGraph& g, VertexId x,
                                           std::size_t max_vertices = kPathVertexCap);

/// Effective resistance as (weight of spanning 2-forests separating x and y)
/// divided by (weight of spanning trees), forest weight being the product of
/// its conductances. Throws SameVertex, Disconnected, TooLarge.
Rational spanning_tree_resistance(const ConductanceGraph& b, VertexId x, VertexId y);

/// Every pairwise spanning-forest resistance from one enumeration; entry
/// [x][y] for x != y, zero on the diagonal. Throws Disconnected, TooLarge.
std::vector<std::vector<Rational>> spanning_tree_resistances(const ConductanceGraph& b);

struct InducedPaths {
    bool unique = false;
    /// At most two chordless paths, in lexicographic order.
    std::vector<Path> paths;
};

/// Searches chordless paths from x to y, stopping at two. Throws TooLarge and
/// Disconnected (no path at all).
InducedPaths unique_induced_path(const ConductanceGraph& b, VertexId x, VertexId y,
                                 std::size_t max_vertices = kPathVertexCap);

/// Unique induced path between every pair (the definition of a block graph).
/// Throws Disconnected, TooLarge.
bool is_block_graph_by_definition(const ConductanceGraph& b, std::size_t max_vertices = kPathVertexCap);

}  // namespace pathmetric::oracle
