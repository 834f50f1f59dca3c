#pragma once

#include <cstddef>
#include <vector>

#include "pathmetric/graph.hpp"
#include "pathmetric/metric_table.hpp"
#include "pathmetric/weight.hpp"

namespace pathmetric {

/// Relative tolerance for metric equalities (betweenness, table comparison).
inline constexpr double kEqualityTolerance = 1e-9;
/// Relative tolerance for geodesic length tests on inexact inputs.
inline constexpr double kGeodesicTolerance = 1e-12;

/// Sum of w over consecutive steps; 0 for a single vertex. Throws UnknownVertex.
Weight path_length(const WeightedGraph& g, const Path& p);

/// Single-source distances by label-setting (Dijkstra) over finite-weight
/// edges. Ties are settled in VertexId order.
std::vector<Weight> distances_from(const WeightedGraph& g, VertexId source);

/// The path pseudo-metric between x and y: infinity iff no finite-weight path.
Weight path_metric(const WeightedGraph& g, VertexId x, VertexId y);

/// Every pairwise distance. The (x, y) and (y, x) entries both come from the
/// search rooted at min(x, y), so the table is exactly symmetric. On inputs
/// without exact lengths the table is then closed under floating-point
/// triangle sums, which moves entries by at most rounding error and makes
/// feeding the table back in as a weight reproduce it exactly. On exact
/// inputs every entry equals path_metric bit-for-bit.
MetricTable all_pairs_metric(const WeightedGraph& g);

struct GeodesicList {
    std::vector<Path> paths;
    /// More geodesics exist beyond the cap.
    bool truncated = false;
    Weight distance;
};

/// All w-geodesics from x to y in lexicographic VertexId order, at most `cap`.
/// Throws Unreachable when the distance is infinite.
GeodesicList enumerate_geodesics(const WeightedGraph& g, VertexId x, VertexId y, std::size_t cap);

/// True when every finite weight is an integer and their total is below 2^53,
/// i.e. every path length is computed without rounding.
bool has_exact_lengths(const WeightedGraph& g);

/// The geodesic weight: t(x, y) where no z outside {x, y} satisfies
/// t(x, z) + t(z, y) = t(x, y) (relative tolerance kEqualityTolerance), infinity
/// otherwise and wherever t is infinite. Throws InvalidMetric when t fails the
/// pseudo-metric axioms.
GeodesicWeight geodesic_weight(const MetricTable& t);

/// True when all_pairs_metric(g) matches t: infinities exactly, finite entries
/// within kEqualityTolerance. Throws SizeMismatch.
bool is_generating(const WeightedGraph& g, const MetricTable& t);

/// Entrywise comparison of two tables (infinities exact, finite entries relative).
bool tables_match(const MetricTable& a, const MetricTable& b, double rel_tol);

/// Evidence for essential local finiteness at one vertex and radius.
struct ElfReport {
    VertexId vertex = 0;
    double radius = 0.0;
    /// #{y != vertex : w(vertex, y) < radius} among scanned vertices.
    std::size_t count = 0;
    std::size_t scanned = 0;
    /// The whole vertex set was scanned.
    bool exhausted = false;
};

/// Counts y != x with w(x, y) < R. Throws QueryError unless R > 0.
ElfReport check_elf(const WeightedGraph& g, VertexId x, double radius);

}  // namespace pathmetric
