#include "pathmetric/oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>

#include "pathmetric/errors.hpp"

namespace pathmetric::oracle {

namespace {

void check_cap(std::size_t n, std::size_t cap, const char* what) {
    if (n > cap) {
        throw TooLarge(std::string(what) + ": " + std::to_string(n) + " vertices exceeds the oracle cap of " +
                       std::to_string(cap));
    }
}

// Exhaustive depth-first walk over simple paths from `start`, visiting
// neighbors in ascending order. `visit(path)` returns false to stop extending.
template <class Neighbors, class Visit>
void walk_simple_paths(std::size_t n, VertexId start, Neighbors&& neighbors, Visit&& visit) {
    std::vector<VertexId> path{start};
    std::vector<bool> used(n, false);
    used[start] = true;
    std::function<void()> step = [&] {
        if (!visit(path)) {
            return;
        }
        for (VertexId u : neighbors(path.back())) {
            if (used[u]) {
                continue;
            }
            used[u] = true;
            path.push_back(u);
            step();
            path.pop_back();
            used[u] = false;
        }
    };
    step();
}

std::vector<VertexId> weight_neighbors(const WeightedGraph& g, VertexId v, bool include_infinite) {
    std::vector<VertexId> out;
    for (VertexId u = 0; u < g.size(); ++u) {
        if (u != v && (include_infinite || g.weight(v, u).is_finite())) {
            out.push_back(u);
        }
    }
    return out;
}

std::vector<VertexId> conductance_neighbors(const ConductanceGraph& b, VertexId v) {
    std::vector<VertexId> out;
    for (VertexId u = 0; u < b.size(); ++u) {
        if (u != v && b.conductance(v, u) > 0.0) {
            out.push_back(u);
        }
    }
    return out;
}

// Rationalized values scaled to a common denominator: value = numerator / denominator.
struct ScaledValues {
    BigInt denominator = 1;
    std::vector<std::vector<std::optional<BigInt>>> numerator;  // nullopt = absent / infinite
};

template <class ValueAt>
ScaledValues scale_to_common_denominator(std::size_t n, ValueAt&& value_at) {
    std::vector<std::vector<std::optional<Rational>>> exact(n, std::vector<std::optional<Rational>>(n));
    BigInt lcd = 1;
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = 0; y < n; ++y) {
            if (auto v = value_at(x, y)) {
                exact[x][y] = rationalize_shortest(*v);
                const BigInt& d = boost::multiprecision::denominator(*exact[x][y]);
                lcd = lcd / boost::multiprecision::gcd(lcd, d) * d;
            }
        }
    }
    ScaledValues out;
    out.denominator = lcd;
    out.numerator.assign(n, std::vector<std::optional<BigInt>>(n));
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = 0; y < n; ++y) {
            if (exact[x][y]) {
                const Rational scaled = *exact[x][y] * lcd;
                out.numerator[x][y] = boost::multiprecision::numerator(scaled);
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Path> enumerate_simple_paths(const WeightedGraph& g, VertexId x, VertexId y, std::size_t max_vertices,
                                         bool include_infinite_steps) {
    check_cap(g.size(), max_vertices, "simple-path enumeration");
    g.check_vertex(x);
    g.check_vertex(y);
    std::vector<std::vector<VertexId>> adjacency(g.size());
    for (VertexId v = 0; v < g.size(); ++v) {
        adjacency[v] = weight_neighbors(g, v, include_infinite_steps);
    }
    std::vector<Path> out;
    walk_simple_paths(
        g.size(), x, [&](VertexId v) -> const std::vector<VertexId>& { return adjacency[v]; },
        [&](const std::vector<VertexId>& path) {
            if (path.back() == y) {
                out.emplace_back(path);
                return false;
            }
            return true;
        });
    return out;
}

std::vector<Path> enumerate_simple_paths(const ConductanceGraph& b, VertexId x, VertexId y, std::size_t max_vertices) {
    check_cap(b.size(), max_vertices, "simple-path enumeration");
    b.check_vertex(x);
    b.check_vertex(y);
    std::vector<std::vector<VertexId>> adjacency(b.size());
    for (VertexId v = 0; v < b.size(); ++v) {
        adjacency[v] = conductance_neighbors(b, v);
    }
    std::vector<Path> out;
    walk_simple_paths(
        b.size(), x, [&](VertexId v) -> const std::vector<VertexId>& { return adjacency[v]; },
        [&](const std::vector<VertexId>& path) {
            if (path.back() == y) {
                out.emplace_back(path);
                return false;
            }
            return true;
        });
    return out;
}

ExactWeight exact_length(const WeightedGraph& g, const Path& p) {
    Rational total = 0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        const Weight w = g.weight(p[i - 1], p[i]);
        if (w.is_infinite()) {
            return std::nullopt;
        }
        total += rationalize_shortest(w.value());
    }
    return total;
}

std::vector<ExactWeight> brute_metric_from(const WeightedGraph& g, VertexId x, std::size_t max_vertices) {
    check_cap(g.size(), max_vertices, "brute-force metric");
    g.check_vertex(x);
    const std::size_t n = g.size();
    const ScaledValues scaled = scale_to_common_denominator(n, [&](VertexId a, VertexId b) -> std::optional<double> {
        if (a == b) {
            return std::nullopt;
        }
        const Weight w = g.weight(a, b);
        return w.is_finite() ? std::optional<double>(w.value()) : std::nullopt;
    });
    std::vector<std::vector<VertexId>> adjacency(n);
    BigInt total = 0;
    for (VertexId v = 0; v < n; ++v) {
        adjacency[v] = weight_neighbors(g, v, false);
        for (VertexId u : adjacency[v]) {
            total += *scaled.numerator[v][u];
        }
    }
    auto neighbors = [&](VertexId v) -> const std::vector<VertexId>& { return adjacency[v]; };

    std::vector<std::optional<BigInt>> best(n);
    if (total < BigInt(std::numeric_limits<std::int64_t>::max())) {
        // Every path length fits in 64 bits.
        std::vector<std::vector<std::int64_t>> small(n, std::vector<std::int64_t>(n, 0));
        for (VertexId v = 0; v < n; ++v) {
            for (VertexId u : adjacency[v]) {
                small[v][u] = scaled.numerator[v][u]->convert_to<std::int64_t>();
            }
        }
        std::vector<std::int64_t> prefix{0};
        std::vector<std::optional<std::int64_t>> best_small(n);
        walk_simple_paths(n, x, neighbors, [&](const std::vector<VertexId>& path) {
            prefix.resize(path.size());
            if (path.size() > 1) {
                prefix.back() = prefix[path.size() - 2] + small[path[path.size() - 2]][path.back()];
            }
            auto& slot = best_small[path.back()];
            if (!slot || prefix.back() < *slot) {
                slot = prefix.back();
            }
            return true;
        });
        for (VertexId v = 0; v < n; ++v) {
            if (best_small[v]) {
                best[v] = BigInt(*best_small[v]);
            }
        }
    } else {
        std::vector<BigInt> prefix{0};
        walk_simple_paths(n, x, neighbors, [&](const std::vector<VertexId>& path) {
            prefix.resize(path.size());
            if (path.size() > 1) {
                prefix.back() = prefix[path.size() - 2] + *scaled.numerator[path[path.size() - 2]][path.back()];
            }
            auto& slot = best[path.back()];
            if (!slot || prefix.back() < *slot) {
                slot = prefix.back();
            }
            return true;
        });
    }

    std::vector<ExactWeight> out(n);
    for (VertexId v = 0; v < n; ++v) {
        if (best[v]) {
            out[v] = Rational(*best[v], scaled.denominator);
        }
    }
    return out;
}

ExactWeight brute_metric(const WeightedGraph& g, VertexId x, VertexId y, std::size_t max_vertices) {
    g.check_vertex(y);
    return brute_metric_from(g, x, max_vertices)[y];
}

namespace {

// Union-find without path compression so unions can be undone in LIFO order.
class UndoUnionFind {
public:
    explicit UndoUnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    VertexId find(VertexId v) const {
        while (parent_[v] != v) {
            v = parent_[v];
        }
        return v;
    }

    bool unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            return false;
        }
        if (size_[a] < size_[b]) {
            std::swap(a, b);
        }
        parent_[b] = a;
        size_[a] += size_[b];
        history_.push_back(b);
        return true;
    }

    void undo() {
        const VertexId b = history_.back();
        history_.pop_back();
        size_[parent_[b]] -= size_[b];
        parent_[b] = b;
    }

private:
    std::vector<VertexId> parent_;
    std::vector<std::size_t> size_;
    std::vector<VertexId> history_;
};

struct ForestSums {
    BigInt trees = 0;                      // sum over spanning trees of the scaled product
    std::vector<std::vector<BigInt>> two;  // [x][y]: sum over 2-forests separating x, y
    BigInt denominator = 1;
};

ForestSums enumerate_forests(const ConductanceGraph& b) {
    const std::size_t n = b.size();
    check_cap(n, kForestVertexCap, "spanning-forest enumeration");
    if (n == 0) {
        throw Disconnected("empty graph");
    }
    const auto comp = connected_components(b);
    for (VertexId v = 0; v < n; ++v) {
        if (comp[v] != comp[0]) {
            throw Disconnected("conductance graph is not connected");
        }
    }

    const ScaledValues scaled = scale_to_common_denominator(n, [&](VertexId x, VertexId y) -> std::optional<double> {
        const double c = x == y ? 0.0 : b.conductance(x, y);
        return c > 0.0 ? std::optional<double>(c) : std::nullopt;
    });
    struct Edge {
        VertexId a;
        VertexId b;
        BigInt value;
    };
    std::vector<Edge> edges;
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = x + 1; y < n; ++y) {
            if (scaled.numerator[x][y]) {
                edges.push_back({x, y, *scaled.numerator[x][y]});
            }
        }
    }

    ForestSums sums;
    sums.denominator = scaled.denominator;
    sums.two.assign(n, std::vector<BigInt>(n, 0));
    if (n == 1) {
        sums.trees = 1;
        return sums;
    }

    UndoUnionFind uf(n);
    const std::size_t m = edges.size();
    const std::size_t need = n - 2;  // smallest forest of interest
    std::vector<BigInt> product{1};
    std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t i, std::size_t k) {
        if (i == m) {
            if (k == n - 1) {
                sums.trees += product.back();
            } else if (k == n - 2) {
                for (VertexId x = 0; x < n; ++x) {
                    for (VertexId y = 0; y < n; ++y) {
                        if (uf.find(x) != uf.find(y)) {
                            sums.two[x][y] += product.back();
                        }
                    }
                }
            }
            return;
        }
        const Edge& e = edges[i];
        if (k < n - 1 && uf.unite(e.a, e.b)) {
            product.push_back(product.back() * e.value);
            choose(i + 1, k + 1);
            product.pop_back();
            uf.undo();
        }
        if (k + (m - i - 1) >= need) {
            choose(i + 1, k);
        }
    };
    choose(0, 0);
    return sums;
}

}  // namespace

std::vector<std::vector<Rational>> spanning_tree_resistances(const ConductanceGraph& b) {
    const ForestSums sums = enumerate_forests(b);
    const std::size_t n = b.size();
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n, Rational(0)));
    // Each 2-forest has one edge fewer than a tree, hence one spare factor of
    // the common denominator.
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = 0; y < n; ++y) {
            if (x != y) {
                out[x][y] = Rational(sums.two[x][y] * sums.denominator, sums.trees);
            }
        }
    }
    return out;
}

Rational spanning_tree_resistance(const ConductanceGraph& b, VertexId x, VertexId y) {
    b.check_vertex(x);
    b.check_vertex(y);
    if (x == y) {
        throw SameVertex("resistance needs two distinct vertices");
    }
    return spanning_tree_resistances(b)[x][y];
}

InducedPaths unique_induced_path(const ConductanceGraph& b, VertexId x, VertexId y, std::size_t max_vertices) {
    check_cap(b.size(), max_vertices, "induced-path enumeration");
    b.check_vertex(x);
    b.check_vertex(y);
    InducedPaths out;
    if (x == y) {
        out.paths.emplace_back(std::vector<VertexId>{x});
        out.unique = true;
        return out;
    }
    const std::size_t n = b.size();
    std::vector<std::vector<VertexId>> adjacency(n);
    std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
    for (VertexId v = 0; v < n; ++v) {
        adjacency[v] = conductance_neighbors(b, v);
        for (VertexId u : adjacency[v]) {
            adjacent[v][u] = true;
        }
    }
    walk_simple_paths(
        n, x, [&](VertexId v) -> const std::vector<VertexId>& { return adjacency[v]; },
        [&](const std::vector<VertexId>& path) {
            if (out.paths.size() >= 2) {
                return false;
            }
            // A chord from the new end to any earlier non-consecutive vertex
            // disqualifies this path and all of its extensions.
            const VertexId last = path.back();
            for (std::size_t i = 0; i + 2 < path.size(); ++i) {
                if (adjacent[path[i]][last]) {
                    return false;
                }
            }
            if (last == y) {
                out.paths.emplace_back(path);
                return false;
            }
            return true;
        });
    if (out.paths.empty()) {
        throw Disconnected("no path between " + b.label(x) + " and " + b.label(y));
    }
    out.unique = out.paths.size() == 1;
    return out;
}

bool is_block_graph_by_definition(const ConductanceGraph& b, std::size_t max_vertices) {
    for (VertexId x = 0; x < b.size(); ++x) {
        for (VertexId y = x + 1; y < b.size(); ++y) {
            if (!unique_induced_path(b, x, y, max_vertices).unique) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace pathmetric::oracle
