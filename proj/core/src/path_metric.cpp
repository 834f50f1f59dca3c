#include "pathmetric/path_metric.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>

#include "pathmetric/errors.hpp"

namespace pathmetric {

Weight path_length(const WeightedGraph& g, const Path& p) {
    for (VertexId v : p.vertices()) {
        g.check_vertex(v);
    }
    Weight total = Weight::zero();
    for (std::size_t i = 1; i < p.size(); ++i) {
        total += g.weight(p[i - 1], p[i]);
    }
    return total;
}

std::vector<Weight> distances_from(const WeightedGraph& g, VertexId source) {
    g.check_vertex(source);
    const std::size_t n = g.size();
    std::vector<Weight> dist(n, kInfinity);
    std::vector<bool> settled(n, false);
    using Item = std::pair<double, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;

    dist[source] = Weight::zero();
    queue.emplace(0.0, source);
    while (!queue.empty()) {
        const auto [d, v] = queue.top();
        queue.pop();
        if (settled[v]) {
            continue;
        }
        settled[v] = true;
        g.for_each_finite_neighbor(v, [&](VertexId u, Weight w) {
            if (settled[u]) {
                return;
            }
            const Weight candidate = dist[v] + w;
            if (candidate < dist[u]) {
                dist[u] = candidate;
                queue.emplace(candidate.value(), u);
            }
        });
    }
    return dist;
}

Weight path_metric(const WeightedGraph& g, VertexId x, VertexId y) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y) {
        return Weight::zero();
    }
    const auto [lo, hi] = std::minmax(x, y);
    return distances_from(g, lo)[hi];
}

namespace {

// Tightens d(x, y) to fl(d(x, z) + d(z, y)) until no entry changes. Only
// rounding-level changes happen here: the searches sum each route in one
// association order, and a route viewed through a midpoint may round lower.
void close_under_float_triangle(MetricTable& t) {
    const std::size_t n = t.size();
    bool changed = true;
    while (changed) {
        changed = false;
        for (VertexId z = 0; z < n; ++z) {
            for (VertexId x = 0; x < n; ++x) {
                if (x == z || t.at(x, z).is_infinite()) {
                    continue;
                }
                for (VertexId y = x + 1; y < n; ++y) {
                    if (y == z) {
                        continue;
                    }
                    const Weight via = t.at(x, z) + t.at(z, y);
                    if (via < t.at(x, y)) {
                        t.set(x, y, via);
                        changed = true;
                    }
                }
            }
        }
    }
}

}  // namespace

MetricTable all_pairs_metric(const WeightedGraph& g) {
    const std::size_t n = g.size();
    MetricTable t(n);
    for (VertexId x = 0; x < n; ++x) {
        const auto row = distances_from(g, x);
        for (VertexId y = x + 1; y < n; ++y) {
            t.set(x, y, row[y]);
        }
    }
    if (!has_exact_lengths(g)) {
        close_under_float_triangle(t);
    }
    return t;
}

bool has_exact_lengths(const WeightedGraph& g) {
    double total = 0.0;
    for (VertexId x = 0; x < g.size(); ++x) {
        bool integral = true;
        g.for_each_finite_neighbor(x, [&](VertexId, Weight w) {
            if (std::floor(w.value()) != w.value()) {
                integral = false;
            }
            total += w.value();
        });
        if (!integral) {
            return false;
        }
    }
    return total < 9007199254740992.0;  // 2^53
}

namespace {

bool within(Weight a, Weight b, double rel_tol) { return a <= b || approx_equal(a, b, rel_tol); }

}  // namespace

GeodesicList enumerate_geodesics(const WeightedGraph& g, VertexId x, VertexId y, std::size_t cap) {
    g.check_vertex(x);
    g.check_vertex(y);
    GeodesicList out;
    out.distance = path_metric(g, x, y);
    if (out.distance.is_infinite()) {
        throw Unreachable("no finite-weight path from " + g.label(x) + " to " + g.label(y));
    }
    if (x == y) {
        if (cap > 0) {
            out.paths.emplace_back(std::vector<VertexId>{x});
        } else {
            out.truncated = true;
        }
        return out;
    }

    const double tol = has_exact_lengths(g) ? 0.0 : kGeodesicTolerance;
    const auto to_target = distances_from(g, y);
    struct Frame {
        VertexId v;
        Weight length;
        std::size_t next = 0;
    };
    std::vector<Frame> frames{{x, Weight::zero()}};
    std::vector<VertexId> path{x};
    std::vector<bool> on_path(g.size(), false);
    on_path[x] = true;
    while (!frames.empty()) {
        Frame& f = frames.back();
        const auto& row = g.row(f.v);
        if (f.v == y || f.next == row.size()) {
            if (f.v == y && approx_equal(f.length, out.distance, tol)) {
                if (out.paths.size() == cap) {
                    out.truncated = true;
                    break;
                }
                out.paths.emplace_back(path);
            }
            on_path[f.v] = false;
            path.pop_back();
            frames.pop_back();
            continue;
        }
        const Entry e = row[f.next++];
        const VertexId u = e.to;
        if (u == f.v || on_path[u] || std::isinf(e.value)) {
            continue;
        }
        const Weight extended = f.length + Weight(e.value);
        if (!within(extended + to_target[u], out.distance, tol)) {
            continue;
        }
        on_path[u] = true;
        path.push_back(u);
        frames.push_back({u, extended});
    }
    return out;
}

GeodesicWeight geodesic_weight(const MetricTable& t) {
    for (const Diagnostic& d : validate(t, kEqualityTolerance)) {
        if (d.rule != "zero off diagonal") {
            throw InvalidMetric("input is not a pseudo-metric: " + d.rule + " at (" + std::to_string(d.x) + ", " +
                                std::to_string(d.y) + ")");
        }
    }
    const std::size_t n = t.size();
    GeodesicWeight out(n);
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = x + 1; y < n; ++y) {
            const Weight d = t.at(x, y);
            if (d.is_infinite()) {
                continue;
            }
            bool unique = true;
            for (VertexId z = 0; z < n && unique; ++z) {
                if (z != x && z != y && approx_equal(t.at(x, z) + t.at(z, y), d, kEqualityTolerance)) {
                    unique = false;
                }
            }
            if (unique) {
                out.set(x, y, d);
            }
        }
    }
    return out;
}

bool tables_match(const MetricTable& a, const MetricTable& b, double rel_tol) {
    if (a.size() != b.size()) {
        return false;
    }
    for (VertexId x = 0; x < a.size(); ++x) {
        for (VertexId y = 0; y < a.size(); ++y) {
            if (!approx_equal(a.at(x, y), b.at(x, y), rel_tol)) {
                return false;
            }
        }
    }
    return true;
}

bool is_generating(const WeightedGraph& g, const MetricTable& t) {
    if (g.size() != t.size()) {
        throw SizeMismatch("graph has " + std::to_string(g.size()) + " vertices but table has " +
                           std::to_string(t.size()));
    }
    return tables_match(all_pairs_metric(g), t, kEqualityTolerance);
}

ElfReport check_elf(const WeightedGraph& g, VertexId x, double radius) {
    g.check_vertex(x);
    if (!(radius > 0.0)) {
        throw QueryError("radius must be positive");
    }
    ElfReport report;
    report.vertex = x;
    report.radius = radius;
    report.scanned = g.size();
    report.exhausted = true;
    g.for_each_finite_neighbor(x, [&](VertexId, Weight w) {
        if (w.value() < radius) {
            ++report.count;
        }
    });
    return report;
}

}  // namespace pathmetric
