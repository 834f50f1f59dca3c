#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "pathmetric/family.hpp"
#include "pathmetric/graph.hpp"
#include "pathmetric/metric_table.hpp"
#include "pathmetric/path_metric.hpp"

namespace pathmetric {

// Evidence for the equivalence of ball finiteness, completeness with
// essential local finiteness, and geodesic completeness. On finite graphs all
// of these hold, so the checks here guard the implementation; on infinite
// families a budgeted scan can only ever produce evidence of failure.

enum class ScanVerdict { bounded_so_far, exceeds_threshold };

std::string_view to_string(ScanVerdict v);

/// Ball-count evidence from a budgeted truncation of a family.
struct BallScan {
    std::size_t center = 0;
    double radius = 0.0;
    /// Scanned vertices at distance <= radius (center included).
    std::size_t found = 0;
    /// Vertices enumerated (center first).
    std::size_t budget = 0;
    std::size_t threshold = 0;
    ScanVerdict verdict = ScanVerdict::bounded_so_far;
    /// Stream index and truncated distance of each scanned vertex, in scan order.
    std::vector<std::size_t> vertices;
    std::vector<Weight> distances;
};

/// Enumerates `budget` vertices (the center, then the stream in order skipping
/// it), computes distances to the center inside that truncation and counts
/// those <= R. Distances are upper bounds in general and exact for the builtin
/// families, whose routes from the center are unique.
BallScan family_ball_scan(const GraphFamily& family, std::size_t center, double radius, std::size_t budget,
                          std::size_t threshold);

/// ELF evidence over a family: the report counts y != x among the first
/// `budget` stream vertices other than x with w(x, y) < R.
struct ElfScan {
    ElfReport report;
    std::size_t threshold = 0;
    ScanVerdict verdict = ScanVerdict::bounded_so_far;
};

ElfScan family_elf_scan(const GraphFamily& family, std::size_t x, double radius, std::size_t budget,
                        std::size_t threshold);

/// Paths sharing a start vertex, merged by common prefix. Node 0 is the root
/// (the shared start); each node counts the input paths through its prefix.
class PrefixTrie {
public:
    struct Node {
        VertexId vertex;
        std::size_t multiplicity = 0;
        std::map<VertexId, std::size_t> children;  // vertex -> node index, ascending
    };

    /// Throws EmptyInput, MixedStart, DuplicatePath.
    explicit PrefixTrie(const std::vector<Path>& paths);

    const Node& node(std::size_t i) const { return nodes_.at(i); }
    const Node& root() const { return nodes_.front(); }
    std::size_t node_count() const noexcept { return nodes_.size(); }

private:
    std::vector<Node> nodes_;
};

struct CommonPrefix {
    Path path;
    /// Input paths through each prefix of `path`, starting with the root.
    std::vector<std::size_t> multiplicities;
    Weight length;
    Weight longest_input;
};

using WeightOracle = std::function<Weight(VertexId, VertexId)>;

/// Descends the prefix trie, at each node taking the smallest child shared by
/// at least `k` input paths, and stops when no child qualifies.
/// Throws EmptyInput, MixedStart, DuplicatePath, QueryError (k < 2).
CommonPrefix extract_common_prefix_path(const std::vector<Path>& paths, const WeightOracle& weight,
                                        std::size_t k = 2);
CommonPrefix extract_common_prefix_path(const std::vector<Path>& paths, const WeightedGraph& g, std::size_t k = 2);

struct WeightPair {
    VertexId x;
    VertexId y;
};

struct MaximalWeightReport {
    MetricTable metric;
    GeodesicWeight geodesic;
    /// The geodesic weight reproduces the metric.
    bool generates = false;
    /// w <= geodesic weight on every pair.
    bool dominates = false;
    /// Pairs where the recomputed metric of the geodesic weight differs.
    std::vector<WeightPair> generation_failures;
    /// Pairs with finite w(x, y) > geodesic weight.
    std::vector<WeightPair> domination_failures;
};

/// Checks that the geodesic weight of delta_w generates delta_w and dominates w.
MaximalWeightReport verify_maximal_weight(const WeightedGraph& g);

struct PairGeodesics {
    VertexId x;
    VertexId y;
    Weight distance;
    std::size_t count;
    bool truncated;
};

struct ComponentReport {
    std::vector<VertexId> vertices;  // ids in the input graph, ascending
    bool balls_finite = true;
    bool geodesics_exist = false;
    bool discrete = false;
    bool maximal_weight = false;
    std::vector<PairGeodesics> geodesics;
    bool pass() const { return balls_finite && geodesics_exist && discrete && maximal_weight; }
};

struct EquivalenceReport {
    std::vector<ComponentReport> components;
    /// Pairs at infinite distance (flagged, not failures).
    std::vector<WeightPair> unreachable;
    bool disconnected() const { return components.size() > 1; }
    bool pass() const;
};

/// Finite-graph consequences of the equivalence, per metric component: finite
/// balls, a geodesic for every pair, a positive first-step lower bound on
/// distances, and the geodesic-weight characterization.
EquivalenceReport finite_equivalence_report(const WeightedGraph& g, std::size_t geodesic_cap = 16);

}  // namespace pathmetric
