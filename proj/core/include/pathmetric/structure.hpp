#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "pathmetric/graph.hpp"
#include "pathmetric/metric_table.hpp"
#include "pathmetric/resistance.hpp"

namespace pathmetric {

/// y separates x from z: the components of x and z in b - y, with the
/// invariants (disjoint sides, y on neither, no conductance across) rechecked.
struct SeparationCertificate {
    VertexId separator;
    std::vector<VertexId> side_x;
    std::vector<VertexId> side_z;
    bool verified = false;
};

/// A path from x to z that avoids the candidate separator.
struct NotSeparated {
    Path witness;
};

using SeparationResult = std::variant<SeparationCertificate, NotSeparated>;

/// Does every path from x to z pass through y? Decided by deleting y and
/// searching from x. Throws NotDistinct, Disconnected (x, z not connected).
SeparationResult separates(const ConductanceGraph& b, VertexId y, VertexId x, VertexId z);

/// Re-derives the certificate invariants from the graph.
bool certificate_holds(const ConductanceGraph& b, const SeparationCertificate& c);

struct TriangleReport {
    double lhs = 0.0;  // R(x, z)
    double rhs = 0.0;  // R(x, y) + R(y, z)
    bool equal = false;
    bool separated = false;
    /// equal <=> separated.
    bool consistent = false;
    SeparationResult separation;
};

/// Compares R(x, z) with R(x, y) + R(y, z) against the separation test.
TriangleReport check_triangle_equality(const ConductanceGraph& b, VertexId x, VertexId y, VertexId z,
                                       double rel_tol = kResistanceTolerance);

/// Triangle check against a precomputed resistance table (used for sweeps).
TriangleReport check_triangle_equality(const ConductanceGraph& b, const MetricTable& resistance, VertexId x,
                                       VertexId y, VertexId z, double rel_tol = kResistanceTolerance);

/// Connected with exactly n - 1 positive-conductance edges.
bool is_tree(const ConductanceGraph& b);

/// Biconnected components of the positive-edge graph, each as an ascending
/// vertex list; blocks are ordered by their smallest vertex.
std::vector<std::vector<VertexId>> biconnected_components(const ConductanceGraph& b);

struct BlockGraphResult {
    bool is_block_graph = false;
    std::vector<std::vector<VertexId>> blocks;
    /// First block that is not a clique.
    std::optional<std::vector<VertexId>> offending_block;
};

/// Every biconnected component is a clique. Throws Disconnected.
BlockGraphResult is_block_graph(const ConductanceGraph& b);

enum class Compatibility { compatible, incompatible };

struct CompatibilityCounterexample {
    VertexId x;
    VertexId y;
    Weight path_metric;
    Weight resistance;
};

struct CompatibilityCertificate {
    Compatibility verdict = Compatibility::incompatible;
    /// R on positive edges, infinity elsewhere; present iff compatible.
    std::optional<WeightedGraph> weight;
    std::optional<CompatibilityCounterexample> counterexample;
    /// The characterization assumes a locally finite graph; finite graphs always are.
    bool locally_finite = true;
};

/// Builds w = R on edges (infinity off edges) and compares delta_w with R.
/// Throws Disconnected.
CompatibilityCertificate compatible_resistance_weight(const ConductanceGraph& b,
                                                      double rel_tol = kResistanceTolerance);

struct TreeTheoremReport {
    bool is_tree = false;
    bool metrics_equal = false;
    bool consistent = false;
    std::optional<CompatibilityCounterexample> mismatch;
};

/// Compares delta_{1/b} with R and checks that they agree exactly on trees.
/// Throws Disconnected.
TreeTheoremReport check_tree_theorem(const ConductanceGraph& b, double rel_tol = kResistanceTolerance);

}  // namespace pathmetric
