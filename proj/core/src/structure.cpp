#include "pathmetric/structure.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "pathmetric/errors.hpp"
#include "pathmetric/path_metric.hpp"

namespace pathmetric {

namespace {

void require_connected(const ConductanceGraph& b) {
    const auto comp = connected_components(b);
    for (VertexId v = 0; v < b.size(); ++v) {
        if (comp[v] != 0) {
            throw Disconnected("conductance graph is not connected (" + b.label(v) + " is cut off from " +
                               b.label(0) + ")");
        }
    }
}

// Breadth-first search from `source` that never enters `blocked`; parent of
// unreached vertices is `none`.
std::vector<VertexId> search_avoiding(const ConductanceGraph& b, VertexId source, std::optional<VertexId> blocked) {
    const VertexId none = b.size();
    std::vector<VertexId> parent(b.size(), none);
    parent[source] = source;
    std::queue<VertexId> queue;
    queue.push(source);
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop();
        b.for_each_neighbor(v, [&](VertexId u, double) {
            if (parent[u] == none && u != blocked) {
                parent[u] = v;
                queue.push(u);
            }
        });
    }
    return parent;
}

std::vector<VertexId> reached(const std::vector<VertexId>& parent) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < parent.size(); ++v) {
        if (parent[v] != parent.size()) {
            out.push_back(v);
        }
    }
    return out;
}

std::optional<CompatibilityCounterexample> first_mismatch(const MetricTable& metric, const MetricTable& resistance,
                                                          double rel_tol) {
    for (VertexId x = 0; x < metric.size(); ++x) {
        for (VertexId y = x + 1; y < metric.size(); ++y) {
            if (!approx_equal(metric.at(x, y), resistance.at(x, y), rel_tol)) {
                return CompatibilityCounterexample{x, y, metric.at(x, y), resistance.at(x, y)};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

SeparationResult separates(const ConductanceGraph& b, VertexId y, VertexId x, VertexId z) {
    b.check_vertex(x);
    b.check_vertex(y);
    b.check_vertex(z);
    if (x == y || y == z || x == z) {
        throw NotDistinct("separation needs three distinct vertices");
    }
    const auto comp = connected_components(b);
    if (comp[x] != comp[z]) {
        throw Disconnected(b.label(x) + " and " + b.label(z) + " are not connected");
    }

    const auto from_x = search_avoiding(b, x, y);
    if (from_x[z] != b.size()) {
        std::vector<VertexId> route;
        for (VertexId v = z; v != x; v = from_x[v]) {
            route.push_back(v);
        }
        route.push_back(x);
        std::reverse(route.begin(), route.end());
        return NotSeparated{Path(std::move(route))};
    }

    SeparationCertificate cert;
    cert.separator = y;
    cert.side_x = reached(from_x);
    cert.side_z = reached(search_avoiding(b, z, y));
    cert.verified = certificate_holds(b, cert);
    return cert;
}

bool certificate_holds(const ConductanceGraph& b, const SeparationCertificate& c) {
    std::vector<int> side(b.size(), 0);
    for (VertexId v : c.side_x) {
        side[v] |= 1;
    }
    for (VertexId v : c.side_z) {
        side[v] |= 2;
    }
    if (side[c.separator] != 0) {
        return false;
    }
    for (VertexId v = 0; v < b.size(); ++v) {
        if (side[v] == 3) {
            return false;
        }
    }
    for (VertexId v : c.side_x) {
        bool crosses = false;
        b.for_each_neighbor(v, [&](VertexId u, double) { crosses = crosses || side[u] == 2; });
        if (crosses) {
            return false;
        }
    }
    return true;
}

TriangleReport check_triangle_equality(const ConductanceGraph& b, const MetricTable& resistance, VertexId x,
                                       VertexId y, VertexId z, double rel_tol) {
    TriangleReport report{0.0, 0.0, false, false, false, separates(b, y, x, z)};
    report.lhs = resistance.at(x, z).value();
    report.rhs = (resistance.at(x, y) + resistance.at(y, z)).value();
    report.equal = std::fabs(report.lhs - report.rhs) <= rel_tol * std::max(report.lhs, report.rhs);
    report.separated = std::holds_alternative<SeparationCertificate>(report.separation);
    report.consistent = report.equal == report.separated;
    return report;
}

TriangleReport check_triangle_equality(const ConductanceGraph& b, VertexId x, VertexId y, VertexId z,
                                       double rel_tol) {
    b.check_vertex(x);
    b.check_vertex(y);
    b.check_vertex(z);
    if (x == y || y == z || x == z) {
        throw NotDistinct("triangle check needs three distinct vertices");
    }
    const auto comp = connected_components(b);
    if (comp[x] != comp[y] || comp[y] != comp[z]) {
        throw Disconnected("triangle check needs three connected vertices");
    }
    MetricTable r(b.size());
    r.set(x, z, effective_resistance(b, x, z));
    r.set(x, y, effective_resistance(b, x, y));
    r.set(y, z, effective_resistance(b, y, z));
    return check_triangle_equality(b, r, x, y, z, rel_tol);
}

bool is_tree(const ConductanceGraph& b) {
    if (b.size() == 0) {
        return false;
    }
    const auto comp = connected_components(b);
    const bool connected = std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
    return connected && b.edge_count() == b.size() - 1;
}

std::vector<std::vector<VertexId>> biconnected_components(const ConductanceGraph& b) {
    const std::size_t n = b.size();
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> order(n, kUnvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::vector<VertexId>> blocks;
    std::size_t clock = 0;

    auto close_block = [&](VertexId v, VertexId u) {
        std::vector<VertexId> block;
        while (true) {
            const auto e = edges.back();
            edges.pop_back();
            block.push_back(e.first);
            block.push_back(e.second);
            if (e == std::make_pair(v, u)) {
                break;
            }
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
    };

    // Explicit stack so long paths cannot exhaust the call stack.
    struct Frame {
        VertexId v;
        VertexId parent;
        std::size_t next = 0;
    };
    std::vector<Frame> stack;
    for (VertexId start = 0; start < n; ++start) {
        if (order[start] != kUnvisited) {
            continue;
        }
        order[start] = low[start] = clock++;
        stack.push_back({start, n});
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& row = b.row(f.v);
            if (f.next < row.size()) {
                const Entry e = row[f.next++];
                const VertexId u = e.to;
                if (u == f.v || u == f.parent || !(e.value > 0.0)) {
                    continue;
                }
                if (order[u] == kUnvisited) {
                    edges.emplace_back(f.v, u);
                    order[u] = low[u] = clock++;
                    stack.push_back({u, f.v});
                } else if (order[u] < order[f.v]) {
                    edges.emplace_back(f.v, u);
                    low[f.v] = std::min(low[f.v], order[u]);
                }
                continue;
            }
            const VertexId u = f.v;
            const VertexId v = f.parent;
            stack.pop_back();
            if (v == n) {
                continue;
            }
            low[v] = std::min(low[v], low[u]);
            if (low[u] >= order[v]) {
                // v is an articulation point (or the root) for the subtree at u.
                close_block(v, u);
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

BlockGraphResult is_block_graph(const ConductanceGraph& b) {
    require_connected(b);
    BlockGraphResult result;
    result.blocks = biconnected_components(b);
    for (const auto& block : result.blocks) {
        bool clique = true;
        for (std::size_t i = 0; i < block.size() && clique; ++i) {
            for (std::size_t j = i + 1; j < block.size() && clique; ++j) {
                clique = b.conductance(block[i], block[j]) > 0.0;
            }
        }
        if (!clique) {
            result.offending_block = block;
            break;
        }
    }
    result.is_block_graph = !result.offending_block.has_value();
    return result;
}

CompatibilityCertificate compatible_resistance_weight(const ConductanceGraph& b, double rel_tol) {
    require_connected(b);
    const MetricTable resistance = resistance_matrix(b);
    WeightedGraph w;
    for (const auto& label : b.labels().all()) {
        w.add_vertex(label);
    }
    for (VertexId x = 0; x < b.size(); ++x) {
        b.for_each_neighbor(x, [&](VertexId y, double) {
            if (x < y) {
                w.set_weight(x, y, resistance.at(x, y));
            }
        });
    }
    CompatibilityCertificate cert;
    cert.counterexample = first_mismatch(all_pairs_metric(w), resistance, rel_tol);
    if (cert.counterexample) {
        cert.verdict = Compatibility::incompatible;
    } else {
        cert.verdict = Compatibility::compatible;
        cert.weight = std::move(w);
    }
    return cert;
}

TreeTheoremReport check_tree_theorem(const ConductanceGraph& b, double rel_tol) {
    require_connected(b);
    TreeTheoremReport report;
    report.is_tree = is_tree(b);
    report.mismatch = first_mismatch(all_pairs_metric(reciprocal_weight(b)), resistance_matrix(b), rel_tol);
    report.metrics_equal = !report.mismatch.has_value();
    report.consistent = report.is_tree == report.metrics_equal;
    return report;
}

}  // namespace pathmetric
