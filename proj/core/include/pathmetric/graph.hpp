#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pathmetric/weight.hpp"

namespace pathmetric {

/// Dense vertex index, 0..n-1.
using VertexId = std::size_t;

/// A stored (neighbor, value) entry of one adjacency row.
struct Entry {
    VertexId to;
    double value;
};

namespace detail {

// Sorted per-row storage of directed entries. Symmetric setters write both
// directions; the raw setter exists so invalid inputs stay representable.
class SparseRows {
public:
    explicit SparseRows(std::size_t n = 0) : rows_(n) {}

    std::size_t size() const noexcept { return rows_.size(); }
    void add_row() { rows_.emplace_back(); }

    std::optional<double> get(VertexId x, VertexId y) const;
    void put(VertexId x, VertexId y, double value);
    const std::vector<Entry>& row(VertexId x) const { return rows_.at(x); }

private:
    std::vector<std::vector<Entry>> rows_;
};

}  // namespace detail

/// Vertex names; ids are assigned in insertion order.
class LabelTable {
public:
    LabelTable() = default;
    explicit LabelTable(std::size_t n);

    std::size_t size() const noexcept { return labels_.size(); }
    const std::string& operator[](VertexId v) const { return labels_.at(v); }
    const std::vector<std::string>& all() const noexcept { return labels_; }

    /// Returns the existing id when the label is already present.
    VertexId intern(const std::string& label);
    std::optional<VertexId> find(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, VertexId> index_;
};

/// A weight function on a finite vertex set: symmetric, zero exactly on the
/// diagonal, absent entries read as infinity.
///
/// The class does not enforce its invariants on mutation; `validate` reports
/// violations and `parse_graph` refuses to return an invalid graph.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(std::size_t n) : labels_(n), rows_(n) {}

    std::size_t size() const noexcept { return rows_.size(); }
    const LabelTable& labels() const noexcept { return labels_; }
    const std::string& label(VertexId v) const { return labels_[v]; }

    VertexId add_vertex(const std::string& label);
    /// Throws UnknownVertex.
    VertexId id(const std::string& label) const;

    /// w(x, y); infinity when absent, 0 on an absent diagonal entry.
    Weight weight(VertexId x, VertexId y) const;
    void set_weight(VertexId x, VertexId y, Weight w);
    /// Writes only the (x, y) direction with an unchecked value.
    void set_raw_entry(VertexId x, VertexId y, double value) { rows_.put(x, y, value); }

    const std::vector<Entry>& row(VertexId x) const { return rows_.row(x); }

    /// Calls f(y, w) for every y != x with finite w(x, y), ascending in y.
    template <class F>
    void for_each_finite_neighbor(VertexId x, F&& f) const {
        for (const Entry& e : rows_.row(x)) {
            if (e.to != x && e.value != std::numeric_limits<double>::infinity()) {
                f(e.to, Weight(e.value));
            }
        }
    }

    void check_vertex(VertexId v) const;

private:
    LabelTable labels_;
    detail::SparseRows rows_;
};

/// Symmetric nonnegative conductances b, zero diagonal, absent entries read as 0.
class ConductanceGraph {
public:
    ConductanceGraph() = default;
    explicit ConductanceGraph(std::size_t n) : labels_(n), rows_(n) {}

    std::size_t size() const noexcept { return rows_.size(); }
    const LabelTable& labels() const noexcept { return labels_; }
    const std::string& label(VertexId v) const { return labels_[v]; }

    VertexId add_vertex(const std::string& label);
    VertexId id(const std::string& label) const;

    double conductance(VertexId x, VertexId y) const;
    void set_conductance(VertexId x, VertexId y, double b);
    void set_raw_entry(VertexId x, VertexId y, double value) { rows_.put(x, y, value); }

    const std::vector<Entry>& row(VertexId x) const { return rows_.row(x); }

    /// Calls f(y, b) for every y != x with b(x, y) > 0, ascending in y.
    template <class F>
    void for_each_neighbor(VertexId x, F&& f) const {
        for (const Entry& e : rows_.row(x)) {
            if (e.to != x && e.value > 0.0) {
                f(e.to, e.value);
            }
        }
    }

    std::size_t degree(VertexId x) const;
    /// Number of unordered pairs with positive conductance.
    std::size_t edge_count() const;

    void check_vertex(VertexId v) const;

private:
    LabelTable labels_;
    detail::SparseRows rows_;
};

/// Injective finite vertex sequence with at least one entry.
class Path {
public:
    /// Throws InvalidPath when empty or not injective.
    explicit Path(std::vector<VertexId> vertices);

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    VertexId front() const { return vertices_.front(); }
    VertexId back() const { return vertices_.back(); }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }

    /// True when `other` starts with every vertex of this path.
    bool is_prefix_of(const Path& other) const;

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path& a, const Path& b) { return a.vertices_ <=> b.vertices_; }

private:
    std::vector<VertexId> vertices_;
};

/// Renders a path as labels joined by " - ".
std::string format_path(const LabelTable& labels, const Path& p);

/// One violated invariant.
struct Diagnostic {
    std::string rule;
    VertexId x;
    VertexId y;
    std::string message;
};

/// Every violated graph invariant, in row order. Empty iff the graph is valid.
std::vector<Diagnostic> validate(const WeightedGraph& g);
std::vector<Diagnostic> validate(const ConductanceGraph& b);

/// Connected components of the positive-conductance edge set, as a component
/// index per vertex (components numbered by smallest member).
std::vector<std::size_t> connected_components(const ConductanceGraph& b);

/// Components of the finite-weight edge set.
std::vector<std::size_t> connected_components(const WeightedGraph& g);

/// The weight 1/b on positive edges, infinity elsewhere.
WeightedGraph reciprocal_weight(const ConductanceGraph& b);

}  // namespace pathmetric
