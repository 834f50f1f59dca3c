#include "pathmetric/hopf_rinow.hpp"

#include <algorithm>

#include "pathmetric/errors.hpp"

namespace pathmetric {

std::string_view to_string(ScanVerdict v) {
    return v == ScanVerdict::exceeds_threshold ? "EXCEEDS_THRESHOLD" : "BOUNDED_SO_FAR";
}

namespace {

void check_scan_arguments(double radius, std::size_t budget, std::size_t threshold) {
    if (!(radius > 0.0)) {
        throw QueryError("radius must be positive");
    }
    if (budget == 0) {
        throw QueryError("budget must be at least 1");
    }
    if (threshold == 0) {
        throw QueryError("threshold must be at least 1");
    }
}

ScanVerdict verdict_for(std::size_t count, std::size_t threshold) {
    return count >= threshold ? ScanVerdict::exceeds_threshold : ScanVerdict::bounded_so_far;
}

}  // namespace

BallScan family_ball_scan(const GraphFamily& family, std::size_t center, double radius, std::size_t budget,
                          std::size_t threshold) {
    check_scan_arguments(radius, budget, threshold);
    BallScan scan;
    scan.center = center;
    scan.radius = radius;
    scan.budget = budget;
    scan.threshold = threshold;
    scan.vertices.reserve(budget);
    scan.vertices.push_back(center);
    for (std::size_t k = 0; scan.vertices.size() < budget; ++k) {
        if (k != center) {
            scan.vertices.push_back(k);
        }
    }
    const WeightedGraph g = truncate(family, scan.vertices);
    scan.distances = distances_from(g, 0);
    scan.found = static_cast<std::size_t>(std::count_if(scan.distances.begin(), scan.distances.end(),
                                                        [&](Weight d) { return d.value() <= radius; }));
    scan.verdict = verdict_for(scan.found, threshold);
    return scan;
}

ElfScan family_elf_scan(const GraphFamily& family, std::size_t x, double radius, std::size_t budget,
                        std::size_t threshold) {
    check_scan_arguments(radius, budget, threshold);
    ElfScan scan;
    scan.threshold = threshold;
    scan.report.vertex = x;
    scan.report.radius = radius;
    scan.report.exhausted = false;
    for (std::size_t k = 0; scan.report.scanned < budget; ++k) {
        if (k == x) {
            continue;
        }
        ++scan.report.scanned;
        if (family.weight(x, k).value() < radius) {
            ++scan.report.count;
        }
    }
    scan.verdict = verdict_for(scan.report.count, threshold);
    return scan;
}

PrefixTrie::PrefixTrie(const std::vector<Path>& paths) {
    if (paths.empty()) {
        throw EmptyInput("no paths given");
    }
    const VertexId start = paths.front().front();
    nodes_.push_back(Node{start, 0, {}});
    std::vector<Path> sorted = paths;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DuplicatePath("paths must be distinct");
    }
    for (const Path& p : paths) {
        if (p.front() != start) {
            throw MixedStart("paths do not share a starting vertex");
        }
        std::size_t at = 0;
        ++nodes_[0].multiplicity;
        for (std::size_t i = 1; i < p.size(); ++i) {
            auto it = nodes_[at].children.find(p[i]);
            if (it == nodes_[at].children.end()) {
                nodes_.push_back(Node{p[i], 0, {}});
                it = nodes_[at].children.emplace(p[i], nodes_.size() - 1).first;
            }
            at = it->second;
            ++nodes_[at].multiplicity;
        }
    }
}

CommonPrefix extract_common_prefix_path(const std::vector<Path>& paths, const WeightOracle& weight, std::size_t k) {
    if (k < 2) {
        throw QueryError("multiplicity threshold must be at least 2");
    }
    const PrefixTrie trie(paths);
    std::vector<VertexId> vertices{trie.root().vertex};
    std::vector<std::size_t> multiplicities{trie.root().multiplicity};
    std::size_t at = 0;
    while (true) {
        std::optional<std::size_t> next;
        for (const auto& [vertex, child] : trie.node(at).children) {
            if (trie.node(child).multiplicity >= k) {
                next = child;
                break;
            }
        }
        if (!next) {
            break;
        }
        at = *next;
        vertices.push_back(trie.node(at).vertex);
        multiplicities.push_back(trie.node(at).multiplicity);
    }

    auto length_of = [&](const Path& p) {
        Weight total = Weight::zero();
        for (std::size_t i = 1; i < p.size(); ++i) {
            total += weight(p[i - 1], p[i]);
        }
        return total;
    };
    CommonPrefix out{Path(std::move(vertices)), std::move(multiplicities), Weight::zero(), Weight::zero()};
    out.length = length_of(out.path);
    for (const Path& p : paths) {
        out.longest_input = std::max(out.longest_input, length_of(p));
    }
    return out;
}

CommonPrefix extract_common_prefix_path(const std::vector<Path>& paths, const WeightedGraph& g, std::size_t k) {
    return extract_common_prefix_path(paths, [&](VertexId a, VertexId b) { return g.weight(a, b); }, k);
}

MaximalWeightReport verify_maximal_weight(const WeightedGraph& g) {
    MaximalWeightReport report;
    report.metric = all_pairs_metric(g);
    report.geodesic = geodesic_weight(report.metric);
    const MetricTable regenerated = all_pairs_metric(as_weighted_graph(report.geodesic));
    const std::size_t n = g.size();
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = x + 1; y < n; ++y) {
            if (!approx_equal(regenerated.at(x, y), report.metric.at(x, y), kEqualityTolerance)) {
                report.generation_failures.push_back({x, y});
            }
            const Weight w = g.weight(x, y);
            const Weight bound = report.geodesic.at(x, y);
            if (w.is_finite() && w > bound && !approx_equal(w, bound, kEqualityTolerance)) {
                report.domination_failures.push_back({x, y});
            }
        }
    }
    report.generates = report.generation_failures.empty();
    report.dominates = report.domination_failures.empty();
    return report;
}

namespace {

WeightedGraph induced_subgraph(const WeightedGraph& g, const std::vector<VertexId>& vertices) {
    WeightedGraph sub;
    for (VertexId v : vertices) {
        sub.add_vertex(g.label(v));
    }
    for (VertexId i = 0; i < vertices.size(); ++i) {
        for (VertexId j = i + 1; j < vertices.size(); ++j) {
            const Weight w = g.weight(vertices[i], vertices[j]);
            if (w.is_finite()) {
                sub.set_weight(i, j, w);
            }
        }
    }
    return sub;
}

ComponentReport check_component(const WeightedGraph& g, std::vector<VertexId> vertices, std::size_t geodesic_cap) {
    ComponentReport report;
    report.vertices = std::move(vertices);
    const WeightedGraph sub = induced_subgraph(g, report.vertices);
    const std::size_t n = sub.size();
    const MetricTable metric = all_pairs_metric(sub);

    // Finite graph: every ball is a subset of a finite set.
    report.balls_finite = true;

    report.geodesics_exist = true;
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = x + 1; y < n; ++y) {
            const GeodesicList list = enumerate_geodesics(sub, x, y, geodesic_cap);
            report.geodesics.push_back(
                {report.vertices[x], report.vertices[y], list.distance, list.paths.size(), list.truncated});
            if (list.paths.empty()) {
                report.geodesics_exist = false;
            }
        }
    }

    // Every route leaves x through some first step, so distances from x are
    // bounded below by the lightest weight at x.
    report.discrete = true;
    for (VertexId x = 0; x < n && n > 1; ++x) {
        Weight lightest = kInfinity;
        sub.for_each_finite_neighbor(x, [&](VertexId, Weight w) { lightest = std::min(lightest, w); });
        Weight nearest = kInfinity;
        for (VertexId y = 0; y < n; ++y) {
            if (y != x) {
                nearest = std::min(nearest, metric.at(x, y));
            }
        }
        if (!(nearest >= lightest) || !(nearest > Weight::zero())) {
            report.discrete = false;
        }
    }

    const MaximalWeightReport maximal = verify_maximal_weight(sub);
    report.maximal_weight = maximal.generates && maximal.dominates;
    return report;
}

}  // namespace

bool EquivalenceReport::pass() const {
    return std::all_of(components.begin(), components.end(), [](const ComponentReport& c) { return c.pass(); });
}

EquivalenceReport finite_equivalence_report(const WeightedGraph& g, std::size_t geodesic_cap) {
    EquivalenceReport report;
    const auto comp = connected_components(g);
    std::map<std::size_t, std::vector<VertexId>> members;
    for (VertexId v = 0; v < g.size(); ++v) {
        members[comp[v]].push_back(v);
    }
    for (auto& [root, vertices] : members) {
        report.components.push_back(check_component(g, vertices, geodesic_cap));
    }
    for (VertexId x = 0; x < g.size(); ++x) {
        for (VertexId y = x + 1; y < g.size(); ++y) {
            if (comp[x] != comp[y]) {
                report.unreachable.push_back({x, y});
            }
        }
    }
    return report;
}

}  // namespace pathmetric
