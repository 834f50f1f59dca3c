// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "pathmetric/family.hpp"
#include "pathmetric/hopf_rinow.hpp"
#include "pathmetric/oracle.hpp"
#include "pathmetric/path_metric.hpp"
#include "pathmetric/rational.hpp"
#include "pathmetric/resistance.hpp"
#include "pathmetric/structure.hpp"

using namespace pathmetric;
using namespace pathmetric::testing;

namespace {

constexpr double kTol = 1e-9;
constexpr double kResidualTol = 1e-8;
constexpr std::size_t kSuiteGraphs = 300;
constexpr std::uint64_t kSuiteSeed = 20240601;

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* name, const Outcome& o, double seconds) {
    std::printf("%s %2d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), seconds);
    std::fflush(stdout);
    if (!o.pass) {
        ++failures;
    }
}

void run(int id, const char* name, const std::function<Outcome()>& body) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    report(id, name, o, std::chrono::duration<double>(Clock::now() - t0).count());
}

bool rel_close(double a, double b, double tol) {
    if (std::isinf(a) || std::isinf(b)) {
        return a == b;
    }
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

struct SuiteGraph {
    WeightedGraph g;
    bool integer = false;
};

/// The seeded weighted-graph suite shared by criteria 1-3: n in 2..9,
/// weights k/10 (k = 1..100) or integers 1..10, absent pairs infinite.
std::vector<SuiteGraph> weighted_suite() {
    std::mt19937_64 rng(kSuiteSeed);
    std::uniform_int_distribution<std::size_t> size(2, 9);
    std::uniform_real_distribution<double> density(0.25, 0.9);
    std::vector<SuiteGraph> suite;
    for (std::size_t i = 0; i < kSuiteGraphs; ++i) {
        const bool integer = i % 2 == 0;
        const std::size_t n = size(rng);
        suite.push_back({random_weighted_graph(rng, n, density(rng), integer), integer});
    }
    return suite;
}

WeightedGraph induced(const WeightedGraph& g, const std::vector<VertexId>& keep) {
    WeightedGraph h(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        for (std::size_t j = i + 1; j < keep.size(); ++j) {
            const Weight w = g.weight(keep[i], keep[j]);
            if (!w.is_infinite()) {
                h.set_weight(i, j, w);
            }
        }
    }
    return h;
}

std::map<std::size_t, std::vector<VertexId>> components_of(const std::vector<std::size_t>& comp) {
    std::map<std::size_t, std::vector<VertexId>> out;
    for (VertexId v = 0; v < comp.size(); ++v) {
        out[comp[v]].push_back(v);
    }
    return out;
}

Outcome metric_oracle(const std::vector<SuiteGraph>& suite) {
    std::size_t pairs = 0;
    std::size_t mismatches = 0;
    std::size_t exact_checked = 0;
    for (const auto& [g, integer] : suite) {
        const MetricTable t = all_pairs_metric(g);
        for (VertexId x = 0; x < g.size(); ++x) {
            const std::vector<ExactWeight> exact = oracle::brute_metric_from(g, x);
            for (VertexId y = 0; y < g.size(); ++y) {
                ++pairs;
                const Weight d = path_metric(g, x, y);
                const double want = exact[y] ? to_double(*exact[y]) : kInfinity.value();
                bool ok = d == t.at(x, y) || rel_close(d.value(), t.at(x, y).value(), kTol);
                if (integer) {
                    ++exact_checked;
                    ok = ok && d.value() == want && t.at(x, y).value() == want;
                    if (exact[y]) {
                        ok = ok && *exact[y] == rational_exact(d.value());
                    }
                } else {
                    ok = ok && rel_close(d.value(), want, kTol) && rel_close(t.at(x, y).value(), want, kTol);
                }
                mismatches += ok ? 0 : 1;
            }
        }
    }
    return {mismatches == 0, std::to_string(suite.size()) + " graphs, " + std::to_string(pairs) + " pairs (" +
                                 std::to_string(exact_checked) + " exact), " + std::to_string(mismatches) +
                                 " mismatches"};
}

Outcome metric_axioms(const std::vector<SuiteGraph>& suite) {
    std::size_t above_weight = 0;
    std::size_t not_idempotent = 0;
    for (const auto& sg : suite) {
        const MetricTable t = all_pairs_metric(sg.g);
        for (VertexId x = 0; x < sg.g.size(); ++x) {
            for (VertexId y = 0; y < sg.g.size(); ++y) {
                above_weight += sg.g.weight(x, y) < t.at(x, y) ? 1 : 0;
            }
        }
        const MetricTable again = all_pairs_metric(as_weighted_graph(t));
        not_idempotent += again == t ? 0 : 1;
    }
    return {above_weight == 0 && not_idempotent == 0,
            std::to_string(above_weight) + " pairs with d > w, " + std::to_string(not_idempotent) +
                " graphs where the metric of the metric differs"};
}

Outcome geodesic_weight_theorem(const std::vector<SuiteGraph>& suite) {
    std::size_t components = 0;
    std::size_t generation = 0;
    std::size_t domination = 0;
    std::size_t report_disagreements = 0;
    for (const auto& sg : suite) {
        for (const auto& [root, keep] : components_of(connected_components(sg.g))) {
            ++components;
            const WeightedGraph h = induced(sg.g, keep);
            const MetricTable t = all_pairs_metric(h);
            const GeodesicWeight wd = geodesic_weight(t);
            const MetricTable regenerated = all_pairs_metric(as_weighted_graph(wd));
            bool gen_ok = true;
            bool dom_ok = true;
            for (VertexId x = 0; x < h.size(); ++x) {
                for (VertexId y = 0; y < h.size(); ++y) {
                    gen_ok = gen_ok && rel_close(regenerated.at(x, y).value(), t.at(x, y).value(), kTol);
                    const Weight w = h.weight(x, y);
                    dom_ok = dom_ok && (w.is_infinite() ? wd.at(x, y).is_infinite()
                                                        : w.value() <= wd.at(x, y).value() * (1 + kTol));
                }
            }
            generation += gen_ok ? 0 : 1;
            domination += dom_ok ? 0 : 1;
            const MaximalWeightReport m = verify_maximal_weight(h);
            report_disagreements += (m.generates == gen_ok && m.dominates == dom_ok) ? 0 : 1;
        }
    }
    return {generation == 0 && domination == 0 && report_disagreements == 0,
            std::to_string(components) + " components, " + std::to_string(generation) +
                " generation violations, " + std::to_string(domination) + " domination violations, " +
                std::to_string(report_disagreements) + " verifier disagreements"};
}

Outcome resistance_exactness() {
    struct Case {
        const char* text;
        const char* x;
        const char* y;
        Rational value;
    };
    const std::vector<Case> cases = {
        {kTriangle, "x", "y", Rational(2, 3)},
        {kCycle4, "a", "b", Rational(3, 4)},
        {kCycle4, "a", "c", Rational(1)},
        {kPath3, "a", "c", Rational(2)},
    };
    std::size_t bad = 0;
    std::string values;
    for (const auto& c : cases) {
        const ConductanceGraph b = conductances(c.text);
        const VertexId x = b.id(c.x);
        const VertexId y = b.id(c.y);
        const Weight r = effective_resistance(b, x, y);
        const Rational exact = oracle::spanning_tree_resistance(b, x, y);
        const bool ok = rel_close(r.value(), to_double(c.value), kTol) && exact == c.value;
        bad += ok ? 0 : 1;
        values += (values.empty() ? "" : ", ") + to_string(exact);
    }
    return {bad == 0, "oracle " + values + ", " + std::to_string(bad) + " mismatches"};
}

/// Separation decided from the components of b with y deleted.
bool separated_by_deletion(const ConductanceGraph& b, VertexId y, VertexId x, VertexId z) {
    ConductanceGraph cut(b.size());
    for (VertexId u = 0; u < b.size(); ++u) {
        if (u == y) {
            continue;
        }
        b.for_each_neighbor(u, [&](VertexId v, double c) {
            if (v != y && u < v) {
                cut.set_conductance(u, v, c);
            }
        });
    }
    const auto comp = connected_components(cut);
    return comp[x] != comp[z];
}

Outcome triangle_equality() {
    std::mt19937_64 rng(kSuiteSeed + 5);
    std::uniform_int_distribution<std::size_t> size(3, 9);
    std::uniform_real_distribution<double> extra(0.0, 0.6);
    std::size_t triples = 0;
    std::size_t separated = 0;
    std::size_t inconsistent = 0;
    std::size_t thin_margin = 0;
    for (int i = 0; i < 200; ++i) {
        const ConductanceGraph b = random_connected_graph(rng, size(rng), extra(rng), 3);
        const MetricTable r = resistance_matrix(b);
        for (VertexId x = 0; x < b.size(); ++x) {
            for (VertexId y = 0; y < b.size(); ++y) {
                for (VertexId z = 0; z < b.size(); ++z) {
                    if (x == y || y == z || x == z) {
                        continue;
                    }
                    ++triples;
                    const TriangleReport t = check_triangle_equality(b, r, x, y, z);
                    const bool truth = separated_by_deletion(b, y, x, z);
                    const bool equal = rel_close(t.lhs, t.rhs, kTol);
                    separated += truth ? 1 : 0;
                    bool ok = t.consistent && equal == truth && t.separated == truth && t.equal == equal;
                    if (const auto* cert = std::get_if<SeparationCertificate>(&t.separation)) {
                        ok = ok && cert->verified && certificate_holds(b, *cert);
                    } else if (!(t.rhs - t.lhs > kTol)) {
                        ++thin_margin;
                        ok = false;
                    }
                    inconsistent += ok ? 0 : 1;
                }
            }
        }
    }
    return {inconsistent == 0, "200 graphs, " + std::to_string(triples) + " triples (" + std::to_string(separated) +
                                   " separated), " + std::to_string(inconsistent) + " inconsistencies, " +
                                   std::to_string(thin_margin) + " margins <= 1e-9"};
}

Outcome tree_theorem() {
    std::mt19937_64 rng(kSuiteSeed + 6);
    std::uniform_int_distribution<std::size_t> tree_size(2, 9);
    std::uniform_int_distribution<std::size_t> cyclic_size(3, 9);
    std::size_t inconsistent = 0;
    for (int i = 0; i < 200; ++i) {
        const bool tree = i < 100;
        const ConductanceGraph b = tree ? random_tree(rng, tree_size(rng), 3) : random_non_tree(rng, cyclic_size(rng), 3);
        const MetricTable r = resistance_matrix(b);
        const MetricTable d = all_pairs_metric(reciprocal_weight(b));
        bool equal = true;
        for (VertexId x = 0; x < b.size(); ++x) {
            for (VertexId y = 0; y < b.size(); ++y) {
                equal = equal && rel_close(r.at(x, y).value(), d.at(x, y).value(), kTol);
            }
        }
        const TreeTheoremReport rep = check_tree_theorem(b);
        const bool ok = equal == tree && is_tree(b) == tree && rep.is_tree == tree && rep.metrics_equal == equal &&
                        rep.consistent;
        inconsistent += ok ? 0 : 1;
    }
    return {inconsistent == 0, "100 trees + 100 non-trees, " + std::to_string(inconsistent) + " inconsistencies"};
}

Outcome block_theorem() {
    std::mt19937_64 rng(kSuiteSeed + 7);
    std::uniform_int_distribution<std::size_t> size(2, 8);
    std::uniform_real_distribution<double> extra(0.0, 0.5);
    std::size_t blocks = 0;
    std::size_t inconsistent = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = size(rng);
        const ConductanceGraph b =
            i % 2 == 0 ? random_block_graph(rng, n, 3) : random_connected_graph(rng, n, extra(rng), 3);
        const bool by_definition = oracle::is_block_graph_by_definition(b);
        const bool recognized = is_block_graph(b).is_block_graph;
        const CompatibilityCertificate c = compatible_resistance_weight(b);
        const bool compatible = c.verdict == Compatibility::compatible;
        blocks += by_definition ? 1 : 0;
        inconsistent += (compatible == recognized && recognized == by_definition) ? 0 : 1;
    }
    return {inconsistent == 0, "200 graphs (" + std::to_string(blocks) + " block graphs), " +
                                   std::to_string(inconsistent) + " inconsistencies"};
}

Outcome harmonicity() {
    std::mt19937_64 rng(kSuiteSeed + 8);
    std::uniform_int_distribution<std::size_t> size(2, 9);
    std::uniform_real_distribution<double> extra(0.0, 0.5);
    std::size_t pairs = 0;
    std::size_t residual_failures = 0;
    std::size_t quotient_failures = 0;
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const ConductanceGraph b = random_connected_graph(rng, size(rng), extra(rng), 3);
        for (VertexId x = 0; x < b.size(); ++x) {
            for (VertexId y = x + 1; y < b.size(); ++y) {
                ++pairs;
                const double residual = max_harmonic_residual(b, harmonic_maximizer(b, x, y), x, y);
                worst = std::max(worst, residual);
                residual_failures += residual <= kResidualTol ? 0 : 1;
                const VariationalReport v = verify_variational(b, x, y, 1000, rng());
                quotient_failures += v.ok() && v.trials == 1000 ? 0 : 1;
            }
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", worst);
    return {residual_failures == 0 && quotient_failures == 0,
            "20 graphs, " + std::to_string(pairs) + " pairs x 1000 potentials, max residual " + buf + ", " +
                std::to_string(residual_failures + quotient_failures) + " failures"};
}

Outcome family_scans() {
    std::size_t bad = 0;
    const auto star = make_family(BuiltinFamily::unit_star);
    for (std::size_t budget : {10u, 100u, 1000u}) {
        for (std::size_t threshold : {std::size_t{1}, budget / 2, budget - 1, budget}) {
            const ElfScan e = family_elf_scan(*star, 0, 2.0, budget, threshold);
            bad += e.verdict == ScanVerdict::exceeds_threshold && e.report.count == budget ? 0 : 1;
        }
    }
    const auto ray = make_family(BuiltinFamily::unit_ray);
    for (double radius : {0.25, 1.0, 3.5, 7.0, 12.75, 40.0}) {
        const auto budget = static_cast<std::size_t>(radius) + 5;
        for (std::size_t b : {budget, budget * 10}) {
            const BallScan s = family_ball_scan(*ray, 0, radius, b, b);
            bad += s.found == static_cast<std::size_t>(std::floor(radius)) + 1 ? 0 : 1;
        }
    }
    const auto decaying = make_family(BuiltinFamily::decaying_ray);
    const std::size_t budget = 1000;
    for (std::size_t threshold : {std::size_t{1}, std::size_t{500}, budget - 1, budget}) {
        const BallScan s = family_ball_scan(*decaying, 0, 1.0, budget, threshold);
        bad += s.verdict == ScanVerdict::exceeds_threshold && s.found == budget ? 0 : 1;
    }
    Rational prefix = 0;
    std::size_t prefixes_at_or_above_one = 0;
    for (std::size_t k = 1; k < budget; ++k) {
        prefix += rational_exact(decaying->weight(k - 1, k).value());
        prefixes_at_or_above_one += prefix < 1 ? 0 : 1;
    }
    bad += prefixes_at_or_above_one;
    return {bad == 0, "star ELF, ray balls, decaying-ray balls and " + std::to_string(budget - 1) +
                          " exact prefix sums < 1; " + std::to_string(bad) + " failed assertions"};
}

/// One planted path over a shuffled id pool, several distinct truncations of
/// it, and noise paths that leave a planted prefix through a vertex no other
/// input uses.
Outcome path_extractor() {
    std::mt19937_64 rng(kSuiteSeed + 10);
    const auto unit = [](VertexId a, VertexId b) { return a == b ? Weight::zero() : Weight(1.0); };
    std::size_t failed = 0;
    for (int round = 0; round < 100; ++round) {
        const std::size_t pool = 120;
        std::vector<VertexId> ids(pool);
        for (VertexId v = 0; v < pool; ++v) {
            ids[v] = v;
        }
        std::shuffle(ids.begin(), ids.end(), rng);
        std::uniform_int_distribution<std::size_t> planted_len(4, 40);
        const std::size_t length = planted_len(rng);
        const std::vector<VertexId> planted(ids.begin(), ids.begin() + static_cast<long>(length));
        std::vector<VertexId> fresh(ids.begin() + static_cast<long>(length), ids.end());

        std::uniform_int_distribution<std::size_t> truncation_count(2, 6);
        std::uniform_int_distribution<std::size_t> cut(1, length);
        std::set<std::size_t> cuts;
        const std::size_t want = std::min(truncation_count(rng), length);
        while (cuts.size() < want) {
            cuts.insert(cut(rng));
        }
        std::set<std::vector<VertexId>> inputs;
        for (std::size_t c : cuts) {
            inputs.emplace(planted.begin(), planted.begin() + static_cast<long>(c));
        }
        const std::size_t second_longest = *std::next(cuts.rbegin());

        std::uniform_int_distribution<std::size_t> noise_count(0, 25);
        const std::size_t noise = std::min(noise_count(rng), fresh.size());
        for (std::size_t i = 0; i < noise; ++i) {
            std::vector<VertexId> p(planted.begin(), planted.begin() + static_cast<long>(cut(rng)));
            p.push_back(fresh.back());
            fresh.pop_back();
            std::uniform_int_distribution<std::size_t> tail_len(0, 6);
            std::uniform_int_distribution<VertexId> any(0, pool - 1);
            for (std::size_t t = tail_len(rng); t > 0; --t) {
                const VertexId v = any(rng);
                if (std::find(p.begin(), p.end(), v) == p.end()) {
                    p.push_back(v);
                }
            }
            inputs.insert(p);
        }

        std::vector<Path> paths;
        for (const auto& p : inputs) {
            paths.emplace_back(p);
        }
        const CommonPrefix out = extract_common_prefix_path(paths, unit, 2);
        const bool ok = out.path.is_prefix_of(Path(planted)) && out.path.size() >= second_longest &&
                        out.length <= out.longest_input;
        failed += ok ? 0 : 1;
    }
    return {failed == 0, "100 constructions, " + std::to_string(failed) + " failures"};
}

}  // namespace

int main() {
    const auto suite = weighted_suite();
    double seconds = 0.0;

    const auto t0 = Clock::now();
    Outcome c1;
    try {
        c1 = metric_oracle(suite);
    } catch (const std::exception& e) {
        c1 = {false, std::string("exception: ") + e.what()};
    }
    seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (seconds >= 30.0) {
        c1.pass = false;
        c1.detail += ", over the 30 s budget";
    }
    report(1, "metric-oracle equivalence", c1, seconds);

    run(2, "d_w <= w and the metric of the metric", [&] { return metric_axioms(suite); });
    run(3, "geodesic weight generates and dominates", [&] { return geodesic_weight_theorem(suite); });

    const auto t4 = Clock::now();
    Outcome c4;
    try {
        c4 = resistance_exactness();
    } catch (const std::exception& e) {
        c4 = {false, std::string("exception: ") + e.what()};
    }
    seconds = std::chrono::duration<double>(Clock::now() - t4).count();
    if (seconds >= 1.0) {
        c4.pass = false;
        c4.detail += ", over the 1 s budget";
    }
    report(4, "resistance exactness", c4, seconds);

    const auto t5 = Clock::now();
    Outcome c5;
    try {
        c5 = triangle_equality();
    } catch (const std::exception& e) {
        c5 = {false, std::string("exception: ") + e.what()};
    }
    seconds = std::chrono::duration<double>(Clock::now() - t5).count();
    if (seconds >= 120.0) {
        c5.pass = false;
        c5.detail += ", over the 2 min budget";
    }
    report(5, "triangle equality iff separation", c5, seconds);

    run(6, "tree theorem", tree_theorem);
    run(7, "block-graph theorem", block_theorem);
    run(8, "harmonicity and variational bound", harmonicity);
    run(9, "family scans", family_scans);
    run(10, "common-prefix path extractor", path_extractor);

    std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
