#pragma once

#include <cstddef>
#include <vector>

#include "pathmetric/graph.hpp"
#include "pathmetric/weight.hpp"

namespace pathmetric {

/// Dense symmetric n x n matrix of Weights. `Tag` keeps tables with different
/// meaning (a metric, a geodesic weight) from being mixed up.
template <class Tag>
class DenseTable {
public:
    DenseTable() = default;
    explicit DenseTable(std::size_t n, Weight fill = kInfinity) : n_(n), cells_(n * n, fill) {
        for (std::size_t i = 0; i < n; ++i) {
            cells_[i * n + i] = Weight::zero();
        }
    }

    std::size_t size() const noexcept { return n_; }
    Weight at(VertexId x, VertexId y) const { return cells_.at(x * n_ + y); }

    /// Writes both (x, y) and (y, x).
    void set(VertexId x, VertexId y, Weight w) {
        cells_.at(x * n_ + y) = w;
        cells_.at(y * n_ + x) = w;
    }
    /// Writes only (x, y).
    void set_entry(VertexId x, VertexId y, Weight w) { cells_.at(x * n_ + y) = w; }

    friend bool operator==(const DenseTable&, const DenseTable&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Weight> cells_;
};

struct MetricTag {};
struct GeodesicWeightTag {};

/// All-pairs pseudo-metric values.
using MetricTable = DenseTable<MetricTag>;
/// The geodesic weight of a metric: the metric value on pairs whose only
/// geodesic is the direct step, infinity elsewhere.
using GeodesicWeight = DenseTable<GeodesicWeightTag>;

/// Pseudo-metric axioms: zero diagonal, exact symmetry, triangle inequality
/// up to relative tolerance `rel_tol`. Zero off-diagonal entries are
/// representable but flagged with rule "zero off diagonal".
std::vector<Diagnostic> validate(const MetricTable& t, double rel_tol = 1e-9);

/// Reads a table as a weight function (infinite entries become absent).
template <class Tag>
WeightedGraph as_weighted_graph(const DenseTable<Tag>& t, const LabelTable* labels = nullptr) {
    WeightedGraph g;
    for (std::size_t v = 0; v < t.size(); ++v) {
        g.add_vertex(labels ? (*labels)[v] : std::to_string(v));
    }
    for (VertexId x = 0; x < t.size(); ++x) {
        for (VertexId y = x + 1; y < t.size(); ++y) {
            if (t.at(x, y).is_finite()) {
                g.set_weight(x, y, t.at(x, y));
            }
        }
    }
    return g;
}

}  // namespace pathmetric
