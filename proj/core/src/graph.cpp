#include "pathmetric/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "pathmetric/errors.hpp"

namespace pathmetric {

namespace detail {

std::optional<double> SparseRows::get(VertexId x, VertexId y) const {
    const auto& r = rows_.at(x);
    auto it = std::lower_bound(r.begin(), r.end(), y, [](const Entry& e, VertexId v) { return e.to < v; });
    if (it == r.end() || it->to != y) {
        return std::nullopt;
    }
    return it->value;
}

void SparseRows::put(VertexId x, VertexId y, double value) {
    auto& r = rows_.at(x);
    if (y >= rows_.size()) {
        throw UnknownVertex("vertex id " + std::to_string(y) + " out of range");
    }
    auto it = std::lower_bound(r.begin(), r.end(), y, [](const Entry& e, VertexId v) { return e.to < v; });
    if (it != r.end() && it->to == y) {
        it->value = value;
    } else {
        r.insert(it, Entry{y, value});
    }
}

}  // namespace detail

LabelTable::LabelTable(std::size_t n) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        intern(std::to_string(i));
    }
}

VertexId LabelTable::intern(const std::string& label) {
    auto [it, inserted] = index_.try_emplace(label, labels_.size());
    if (inserted) {
        labels_.push_back(label);
    }
    return it->second;
}

std::optional<VertexId> LabelTable::find(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

namespace {

template <class G>
VertexId lookup(const G& g, const std::string& label) {
    if (auto v = g.labels().find(label)) {
        return *v;
    }
    throw UnknownVertex("unknown vertex '" + label + "'");
}

void check_range(std::size_t n, VertexId v) {
    if (v >= n) {
        throw UnknownVertex("vertex id " + std::to_string(v) + " out of range (n=" + std::to_string(n) + ")");
    }
}

}  // namespace

VertexId WeightedGraph::add_vertex(const std::string& label) {
    const VertexId v = labels_.intern(label);
    if (v == rows_.size()) {
        rows_.add_row();
    }
    return v;
}

VertexId WeightedGraph::id(const std::string& label) const { return lookup(*this, label); }

Weight WeightedGraph::weight(VertexId x, VertexId y) const {
    check_vertex(x);
    check_vertex(y);
    if (auto v = rows_.get(x, y)) {
        return Weight(*v);
    }
    return x == y ? Weight::zero() : kInfinity;
}

void WeightedGraph::set_weight(VertexId x, VertexId y, Weight w) {
    check_vertex(x);
    check_vertex(y);
    rows_.put(x, y, w.value());
    rows_.put(y, x, w.value());
}

void WeightedGraph::check_vertex(VertexId v) const { check_range(size(), v); }

VertexId ConductanceGraph::add_vertex(const std::string& label) {
    const VertexId v = labels_.intern(label);
    if (v == rows_.size()) {
        rows_.add_row();
    }
    return v;
}

VertexId ConductanceGraph::id(const std::string& label) const { return lookup(*this, label); }

double ConductanceGraph::conductance(VertexId x, VertexId y) const {
    check_vertex(x);
    check_vertex(y);
    return rows_.get(x, y).value_or(0.0);
}

void ConductanceGraph::set_conductance(VertexId x, VertexId y, double b) {
    check_vertex(x);
    check_vertex(y);
    if (std::isnan(b) || b < 0.0) {
        throw NegativeWeightError("conductance must be nonnegative");
    }
    rows_.put(x, y, b);
    rows_.put(y, x, b);
}

std::size_t ConductanceGraph::degree(VertexId x) const {
    std::size_t d = 0;
    for_each_neighbor(x, [&](VertexId, double) { ++d; });
    return d;
}

std::size_t ConductanceGraph::edge_count() const {
    std::size_t twice = 0;
    for (VertexId x = 0; x < size(); ++x) {
        twice += degree(x);
    }
    return twice / 2;
}

void ConductanceGraph::check_vertex(VertexId v) const { check_range(size(), v); }

Path::Path(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
        throw InvalidPath("path must contain at least one vertex");
    }
    std::unordered_set<VertexId> seen;
    for (VertexId v : vertices_) {
        if (!seen.insert(v).second) {
            throw InvalidPath("path visits vertex " + std::to_string(v) + " twice");
        }
    }
}

bool Path::is_prefix_of(const Path& other) const {
    return vertices_.size() <= other.vertices_.size() &&
           std::equal(vertices_.begin(), vertices_.end(), other.vertices_.begin());
}

std::string format_path(const LabelTable& labels, const Path& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) {
            out += " - ";
        }
        out += labels[p[i]];
    }
    return out;
}

namespace {

std::string pair_text(const LabelTable& labels, VertexId x, VertexId y) {
    return "(" + labels[x] + ", " + labels[y] + ")";
}

std::string value_text(double v) { return std::isinf(v) ? std::string("inf") : format_fixed17(v); }

}  // namespace

std::vector<Diagnostic> validate(const WeightedGraph& g) {
    std::vector<Diagnostic> out;
    const auto& labels = g.labels();
    for (VertexId x = 0; x < g.size(); ++x) {
        for (const Entry& e : g.row(x)) {
            const VertexId y = e.to;
            const std::string where = pair_text(labels, x, y);
            if (std::isnan(e.value)) {
                out.push_back({"nan", x, y, "weight at " + where + " is NaN"});
                continue;
            }
            if (e.value < 0.0) {
                out.push_back({"negative", x, y, "weight at " + where + " is negative: " + value_text(e.value)});
            }
            if (x == y && e.value != 0.0) {
                out.push_back({"nonzero diagonal", x, y, "diagonal weight at " + where + " is " + value_text(e.value)});
            }
            if (x != y && e.value == 0.0) {
                out.push_back({"zero off diagonal", x, y, "weight at " + where + " is zero but " + labels[x] +
                                                               " != " + labels[y]});
            }
            if (x != y) {
                // Missing reverse entry reads as infinity.
                const double back = [&] {
                    for (const Entry& r : g.row(y)) {
                        if (r.to == x) {
                            return r.value;
                        }
                    }
                    return std::numeric_limits<double>::infinity();
                }();
                if (!(back == e.value)) {
                    out.push_back({"asymmetric", x, y, "w" + where + " = " + value_text(e.value) + " but w" +
                                                           pair_text(labels, y, x) + " = " + value_text(back)});
                }
            }
        }
    }
    return out;
}

std::vector<Diagnostic> validate(const ConductanceGraph& b) {
    std::vector<Diagnostic> out;
    const auto& labels = b.labels();
    for (VertexId x = 0; x < b.size(); ++x) {
        double row_sum = 0.0;
        for (const Entry& e : b.row(x)) {
            const VertexId y = e.to;
            const std::string where = pair_text(labels, x, y);
            if (std::isnan(e.value)) {
                out.push_back({"nan", x, y, "conductance at " + where + " is NaN"});
                continue;
            }
            if (e.value < 0.0) {
                out.push_back({"negative", x, y, "conductance at " + where + " is negative"});
            }
            if (std::isinf(e.value)) {
                out.push_back({"infinite conductance", x, y, "conductance at " + where + " is infinite"});
            }
            if (x == y && e.value != 0.0) {
                out.push_back({"nonzero diagonal", x, y, "self-loop conductance at " + where});
            }
            if (x != y && !(b.conductance(y, x) == e.value)) {
                out.push_back({"asymmetric", x, y, "b" + where + " = " + value_text(e.value) + " but b" +
                                                       pair_text(labels, y, x) + " = " +
                                                       value_text(b.conductance(y, x))});
            }
            row_sum += e.value;
        }
        if (!std::isfinite(row_sum) && !std::isnan(row_sum)) {
            out.push_back({"row not summable", x, x, "conductances at " + labels[x] + " do not sum to a finite value"});
        }
    }
    return out;
}

namespace {

template <class ForEachNeighbor>
std::vector<std::size_t> components(std::size_t n, ForEachNeighbor&& neighbors) {
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> comp(n, kUnset);
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] != kUnset) {
            continue;
        }
        comp[s] = s;
        stack.push_back(s);
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            neighbors(v, [&](VertexId u) {
                if (comp[u] == kUnset) {
                    comp[u] = s;
                    stack.push_back(u);
                }
            });
        }
    }
    return comp;
}

}  // namespace

std::vector<std::size_t> connected_components(const ConductanceGraph& b) {
    return components(b.size(), [&](VertexId v, auto&& visit) {
        b.for_each_neighbor(v, [&](VertexId u, double) { visit(u); });
    });
}

std::vector<std::size_t> connected_components(const WeightedGraph& g) {
    return components(g.size(), [&](VertexId v, auto&& visit) {
        g.for_each_finite_neighbor(v, [&](VertexId u, Weight) { visit(u); });
    });
}

WeightedGraph reciprocal_weight(const ConductanceGraph& b) {
    WeightedGraph w;
    for (const auto& label : b.labels().all()) {
        w.add_vertex(label);
    }
    for (VertexId x = 0; x < b.size(); ++x) {
        b.for_each_neighbor(x, [&](VertexId y, double c) {
            if (x < y) {
                w.set_weight(x, y, Weight(1.0 / c));
            }
        });
    }
    return w;
}

}  // namespace pathmetric
