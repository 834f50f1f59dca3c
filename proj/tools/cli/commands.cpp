#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>
#include <variant>

#include "CLI11.hpp"
#include "pathmetric/edge_list.hpp"
#include "pathmetric/errors.hpp"
#include "pathmetric/family.hpp"
#include "pathmetric/hopf_rinow.hpp"
#include "pathmetric/oracle.hpp"
#include "pathmetric/path_metric.hpp"
#include "pathmetric/rational.hpp"
#include "pathmetric/resistance.hpp"
#include "pathmetric/structure.hpp"
#include "report.hpp"

namespace pathmetric::cli {
namespace {

class FileError : public InputError {
public:
    using InputError::InputError;
};

class UnknownFamily : public InputError {
public:
    using InputError::InputError;
};

/// A check that the library promises always passes came out false.
class InvariantBreach : public Error {
public:
    using Error::Error;
};

struct Options {
    bool json = false;
    std::string file;
    std::string mode;
    std::string source;
    std::string target;
    bool all_pairs = false;
    bool oracle = false;
    std::size_t cap = 64;
    std::vector<std::string> pair;
    bool matrix = false;
    bool maximizer = false;
    bool tree = false;
    bool block = false;
    std::vector<std::string> triangle;
    std::string family;
    std::size_t center = 0;
    double radius = 1.0;
    std::size_t budget = 1000;
    std::optional<std::size_t> threshold;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string num(double v) { return format_fixed17(v); }
std::string num(Weight w) { return w.is_infinite() ? "inf" : format_fixed17(w.value()); }

Json labels_of(const LabelTable& labels, const std::vector<VertexId>& ids) {
    Json a = Json::array();
    for (VertexId v : ids) {
        a.push_back(labels[v]);
    }
    return a;
}

Json path_json(const LabelTable& labels, const Path& p) { return labels_of(labels, p.vertices()); }

template <class Tag>
Json table_json(const LabelTable& labels, const DenseTable<Tag>& t) {
    Json rows = Json::array();
    for (VertexId x = 0; x < t.size(); ++x) {
        Json row = Json::array();
        for (VertexId y = 0; y < t.size(); ++y) {
            row.push_back(num(t.at(x, y)));
        }
        rows.push_back(std::move(row));
    }
    return Json{{"labels", labels.all()}, {"rows", std::move(rows)}};
}

Json pairs_json(const LabelTable& labels, const std::vector<WeightPair>& pairs) {
    Json a = Json::array();
    for (const auto& p : pairs) {
        a.push_back(Json::array({labels[p.x], labels[p.y]}));
    }
    return a;
}

/// |float - exact|, or infinity when exactly one side is infinite.
double discrepancy(Weight value, const ExactWeight& exact) {
    if (!exact) {
        return value.is_infinite() ? 0.0 : kInfinity.value();
    }
    if (value.is_infinite()) {
        return kInfinity.value();
    }
    return std::abs(value.value() - to_double(*exact));
}

bool within(double gap, const ExactWeight& exact, double rel_tol) {
    const double scale = exact ? std::max(1.0, std::abs(to_double(*exact))) : 1.0;
    return gap <= rel_tol * scale;
}

ConductanceGraph conductance_from_weight(const WeightedGraph& g) {
    ConductanceGraph b;
    for (const auto& l : g.labels().all()) {
        b.add_vertex(l);
    }
    for (VertexId x = 0; x < g.size(); ++x) {
        g.for_each_finite_neighbor(x, [&](VertexId y, Weight w) {
            if (x < y) {
                b.set_conductance(x, y, 1.0 / w.value());
            }
        });
    }
    return b;
}

WeightedGraph load_weights(const Options& o, Report& r) {
    const std::string text = read_file(o.file);
    if (o.mode == "conductance") {
        ConductanceGraph b = parse_conductance_graph(text);
        r.input_digest = sha256_digest(serialize(b));
        r.diagnostics.push_back("conductance input read as weights w = 1/b");
        return reciprocal_weight(b);
    }
    WeightedGraph g = parse_weighted_graph(text);
    r.input_digest = sha256_digest(serialize(g));
    return g;
}

ConductanceGraph load_conductances(const Options& o, Report& r) {
    const std::string text = read_file(o.file);
    if (o.mode == "weight") {
        WeightedGraph g = parse_weighted_graph(text);
        r.input_digest = sha256_digest(serialize(g));
        r.diagnostics.push_back("weight input read as conductances b = 1/w");
        return conductance_from_weight(g);
    }
    ConductanceGraph b = parse_conductance_graph(text);
    r.input_digest = sha256_digest(serialize(b));
    return b;
}

void cmd_metric(const Options& o, Report& r) {
    const WeightedGraph g = load_weights(o, r);
    const LabelTable& labels = g.labels();
    if (!o.source.empty()) {
        const VertexId x = g.id(o.source);
        const VertexId y = g.id(o.target);
        const Weight d = path_metric(g, x, y);
        r.results["source"] = o.source;
        r.results["target"] = o.target;
        r.results["distance"] = num(d);
        if (o.oracle) {
            const ExactWeight exact = oracle::brute_metric(g, x, y);
            const double gap = discrepancy(d, exact);
            r.results["oracle"] = Json{{"exact", to_string(exact)}, {"discrepancy", num(gap)}};
            if (!within(gap, exact, kEqualityTolerance)) {
                throw InvariantBreach("distance disagrees with the exact oracle");
            }
        }
        return;
    }
    const MetricTable t = all_pairs_metric(g);
    r.results["distance"] = table_json(labels, t);
    if (o.oracle) {
        Json rows = Json::array();
        double worst = 0.0;
        bool ok = true;
        for (VertexId x = 0; x < g.size(); ++x) {
            const auto exact = oracle::brute_metric_from(g, x);
            Json row = Json::array();
            for (VertexId y = 0; y < g.size(); ++y) {
                const double gap = discrepancy(t.at(x, y), exact[y]);
                worst = std::max(worst, gap);
                ok = ok && within(gap, exact[y], kEqualityTolerance);
                row.push_back(to_string(exact[y]));
            }
            rows.push_back(std::move(row));
        }
        r.results["oracle"] = Json{{"exact", Json{{"labels", labels.all()}, {"rows", std::move(rows)}}},
                                   {"discrepancy", num(worst)}};
        if (!ok) {
            throw InvariantBreach("distance table disagrees with the exact oracle");
        }
    }
}

void cmd_geodesics(const Options& o, Report& r) {
    const WeightedGraph g = load_weights(o, r);
    const VertexId x = g.id(o.source);
    const VertexId y = g.id(o.target);
    const GeodesicList list = enumerate_geodesics(g, x, y, o.cap);
    Json paths = Json::array();
    for (const Path& p : list.paths) {
        paths.push_back(Json{{"path", path_json(g.labels(), p)}, {"length", num(path_length(g, p))}});
    }
    r.results["source"] = o.source;
    r.results["target"] = o.target;
    r.results["distance"] = num(list.distance);
    r.results["geodesics"] = std::move(paths);
    r.results["count"] = list.paths.size();
    r.results["truncated"] = list.truncated;
}

void cmd_geodesic_weight(const Options& o, Report& r) {
    const WeightedGraph g = load_weights(o, r);
    const MaximalWeightReport m = verify_maximal_weight(g);
    r.results["metric"] = table_json(g.labels(), m.metric);
    r.results["geodesic_weight"] = table_json(g.labels(), m.geodesic);
    r.results["verdict"] = Json{{"generates", m.generates}, {"dominates", m.dominates}};
    r.results["generation_failures"] = pairs_json(g.labels(), m.generation_failures);
    r.results["domination_failures"] = pairs_json(g.labels(), m.domination_failures);
    if (!m.generates || !m.dominates) {
        throw InvariantBreach("geodesic weight does not generate or dominate");
    }
}

void cmd_resistance(const Options& o, Report& r) {
    const ConductanceGraph b = load_conductances(o, r);
    const LabelTable& labels = b.labels();
    if (!o.pair.empty()) {
        const VertexId x = b.id(o.pair[0]);
        const VertexId y = b.id(o.pair[1]);
        const Weight res = effective_resistance(b, x, y);
        r.results["pair"] = o.pair;
        r.results["resistance"] = num(res);
        if (o.oracle) {
            ExactWeight exact;
            try {
                exact = oracle::spanning_tree_resistance(b, x, y);
            } catch (const Disconnected&) {
            }
            const double gap = discrepancy(res, exact);
            r.results["oracle"] = Json{{"exact", to_string(exact)}, {"discrepancy", num(gap)}};
            if (!within(gap, exact, kResistanceTolerance)) {
                throw InvariantBreach("resistance disagrees with the spanning-forest oracle");
            }
        }
        if (o.maximizer) {
            const PotentialFunction f = harmonic_maximizer(b, x, y);
            Json potential = Json::array();
            for (VertexId v = 0; v < b.size(); ++v) {
                potential.push_back(Json{{"vertex", labels[v]}, {"value", num(f.values[v])}});
            }
            const double residual = max_harmonic_residual(b, f, x, y);
            r.results["maximizer"] = Json{{"potential", std::move(potential)}, {"residual", num(residual)}};
            if (residual > kHarmonicTolerance) {
                throw InvariantBreach("maximizer is not harmonic off the pair");
            }
        }
        return;
    }
    const MetricTable t = resistance_matrix(b);
    r.results["resistance"] = table_json(labels, t);
    for (const auto& d : validate(t, kResistanceTolerance)) {
        r.diagnostics.push_back("metric check failed: " + d.rule + " at (" + labels[d.x] + ", " + labels[d.y] + ")");
    }
    if (!validate(t, kResistanceTolerance).empty()) {
        throw InvariantBreach("resistance table is not a metric");
    }
    if (o.oracle) {
        Json rows = Json::array();
        double worst = 0.0;
        bool ok = true;
        for (VertexId x = 0; x < b.size(); ++x) {
            Json row = Json::array();
            for (VertexId y = 0; y < b.size(); ++y) {
                ExactWeight exact = Rational(0);
                if (x != y) {
                    exact.reset();
                    try {
                        exact = oracle::spanning_tree_resistance(b, x, y);
                    } catch (const Disconnected&) {
                    }
                }
                const double gap = discrepancy(t.at(x, y), exact);
                worst = std::max(worst, gap);
                ok = ok && within(gap, exact, kResistanceTolerance);
                row.push_back(to_string(exact));
            }
            rows.push_back(std::move(row));
        }
        r.results["oracle"] = Json{{"exact", Json{{"labels", labels.all()}, {"rows", std::move(rows)}}},
                                   {"discrepancy", num(worst)}};
        if (!ok) {
            throw InvariantBreach("resistance table disagrees with the spanning-forest oracle");
        }
    }
}

Json counterexample_json(const LabelTable& labels, const CompatibilityCounterexample& c) {
    return Json{{"x", labels[c.x]},
                {"y", labels[c.y]},
                {"path_metric", num(c.path_metric)},
                {"resistance", num(c.resistance)}};
}

void cmd_characterize(const Options& o, Report& r) {
    const ConductanceGraph b = load_conductances(o, r);
    const LabelTable& labels = b.labels();
    const bool all = !o.tree && !o.block && o.triangle.empty();
    if (o.tree || all) {
        const TreeTheoremReport t = check_tree_theorem(b);
        Json j{{"verdict", t.is_tree ? "TREE" : "NOT_TREE"},
               {"metrics_equal", t.metrics_equal},
               {"consistent", t.consistent}};
        if (t.mismatch) {
            j["counterexample"] = counterexample_json(labels, *t.mismatch);
        }
        r.results["tree"] = std::move(j);
        if (!t.consistent) {
            throw InvariantBreach("tree check and metric comparison disagree");
        }
    }
    if (o.block || all) {
        const BlockGraphResult bg = is_block_graph(b);
        const CompatibilityCertificate c = compatible_resistance_weight(b);
        const bool compatible = c.verdict == Compatibility::compatible;
        Json blocks = Json::array();
        for (const auto& blk : bg.blocks) {
            blocks.push_back(labels_of(labels, blk));
        }
        Json j{{"verdict", compatible ? "COMPATIBLE" : "INCOMPATIBLE"},
               {"is_block_graph", bg.is_block_graph},
               {"blocks", std::move(blocks)}};
        if (bg.offending_block) {
            j["offending_block"] = labels_of(labels, *bg.offending_block);
        }
        if (c.weight) {
            Json edges = Json::array();
            for (VertexId x = 0; x < b.size(); ++x) {
                c.weight->for_each_finite_neighbor(x, [&](VertexId y, Weight w) {
                    if (x < y) {
                        edges.push_back(Json{{"x", labels[x]}, {"y", labels[y]}, {"weight", num(w)}});
                    }
                });
            }
            j["certificate"] = Json{{"weight", std::move(edges)}};
        }
        if (c.counterexample) {
            j["counterexample"] = counterexample_json(labels, *c.counterexample);
        }
        r.results["block"] = std::move(j);
        if (compatible != bg.is_block_graph) {
            throw InvariantBreach("compatibility verdict disagrees with block recognition");
        }
    }
    if (!o.triangle.empty()) {
        const VertexId x = b.id(o.triangle[0]);
        const VertexId y = b.id(o.triangle[1]);
        const VertexId z = b.id(o.triangle[2]);
        const TriangleReport t = check_triangle_equality(b, x, y, z);
        Json j{{"vertices", o.triangle},
               {"lhs", num(t.lhs)},
               {"rhs", num(t.rhs)},
               {"equal", t.equal},
               {"separated", t.separated},
               {"consistent", t.consistent},
               {"verdict", t.separated ? "SEPARATED" : "NOT_SEPARATED"}};
        if (const auto* cert = std::get_if<SeparationCertificate>(&t.separation)) {
            j["certificate"] = Json{{"separator", labels[cert->separator]},
                                    {"side_x", labels_of(labels, cert->side_x)},
                                    {"side_z", labels_of(labels, cert->side_z)},
                                    {"verified", cert->verified}};
        } else {
            j["counterexample"] =
                Json{{"witness", path_json(labels, std::get<NotSeparated>(t.separation).witness)}};
        }
        r.results["triangle"] = std::move(j);
        if (!t.consistent) {
            throw InvariantBreach("triangle equality and separation disagree");
        }
    }
}

void cmd_family(const Options& o, Report& r) {
    const auto kind = family_from_name(o.family);
    if (!kind) {
        throw UnknownFamily("unknown family '" + o.family + "'");
    }
    const auto fam = make_family(*kind);
    const std::size_t threshold = o.threshold.value_or(o.budget);
    const std::string mode = o.mode.empty() ? "ball" : o.mode;
    r.input_digest = sha256_digest("family " + o.family + "\n");
    Json scan{{"family", o.family},
              {"mode", mode},
              {"center", fam->describe(o.center)},
              {"radius", num(o.radius)},
              {"budget", o.budget},
              {"threshold", threshold}};
    if (mode == "elf") {
        const ElfScan e = family_elf_scan(*fam, o.center, o.radius, o.budget, threshold);
        scan["count"] = e.report.count;
        scan["scanned"] = e.report.scanned;
        scan["verdict"] = std::string(to_string(e.verdict));
    } else {
        const BallScan b = family_ball_scan(*fam, o.center, o.radius, o.budget, threshold);
        Weight farthest = Weight::zero();
        for (Weight d : b.distances) {
            if (d <= Weight(o.radius) && farthest < d) {
                farthest = d;
            }
        }
        scan["found"] = b.found;
        scan["scanned"] = b.vertices.size();
        scan["max_distance_in_ball"] = num(farthest);
        scan["verdict"] = std::string(to_string(b.verdict));
    }
    r.results["scan"] = std::move(scan);
}

struct Failure {
    int code;
    std::string kind;
    std::string message;
};

Failure classify(std::exception_ptr e) {
    try {
        std::rethrow_exception(e);
    } catch (const UnknownFamily& x) {
        return {kInputError, "unknown family", x.what()};
    } catch (const FileError& x) {
        return {kInputError, "file", x.what()};
    } catch (const ParseError& x) {
        return {kInputError, "parse", x.what()};
    } catch (const InputError& x) {
        return {kInputError, "invalid input", x.what()};
    } catch (const UnknownVertex& x) {
        return {kQueryError, "unknown vertex", x.what()};
    } catch (const Unreachable& x) {
        return {kQueryError, "unreachable", x.what()};
    } catch (const Disconnected& x) {
        return {kQueryError, "disconnected", x.what()};
    } catch (const QueryError& x) {
        return {kQueryError, "query", x.what()};
    } catch (const TooLarge& x) {
        return {kCapExceeded, "oracle cap exceeded", x.what()};
    } catch (const InvariantBreach& x) {
        return {kInternalError, "invariant breach", x.what()};
    } catch (const std::exception& x) {
        return {kInternalError, "internal", x.what()};
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Path metrics, geodesic weights and effective resistance on weighted graphs", "pathmetric"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "Print a JSON report");

    auto* metric = app.add_subcommand("metric", "Path distance for a pair, or the full table");
    metric->add_option("file", o.file, "Edge-list file")->required();
    metric->add_option("--mode", o.mode)->check(CLI::IsMember({"weight", "conductance"}));
    auto* src = metric->add_option("--source", o.source);
    auto* dst = metric->add_option("--target", o.target);
    src->needs(dst);
    dst->needs(src);
    auto* all = metric->add_flag("--all-pairs", o.all_pairs);
    all->excludes(src)->excludes(dst);
    metric->add_flag("--oracle", o.oracle, "Compare with exact brute-force distances");

    auto* geo = app.add_subcommand("geodesics", "List the geodesics between two vertices");
    geo->add_option("file", o.file)->required();
    geo->add_option("--mode", o.mode)->check(CLI::IsMember({"weight", "conductance"}));
    geo->add_option("--source", o.source)->required();
    geo->add_option("--target", o.target)->required();
    geo->add_option("--cap", o.cap, "Stop after this many geodesics")->check(CLI::PositiveNumber);

    auto* gw = app.add_subcommand("geodesic-weight", "Geodesic weight of the path metric");
    gw->add_option("file", o.file)->required();
    gw->add_option("--mode", o.mode)->check(CLI::IsMember({"weight", "conductance"}));

    auto* res = app.add_subcommand("resistance", "Effective resistance");
    res->add_option("file", o.file)->required();
    res->add_option("--mode", o.mode)->check(CLI::IsMember({"weight", "conductance"}));
    auto* pair = res->add_option("--pair", o.pair)->expected(2);
    auto* mat = res->add_flag("--matrix", o.matrix);
    mat->excludes(pair);
    res->add_flag("--oracle", o.oracle, "Compare with exact spanning-forest resistances");
    res->add_flag("--maximizer", o.maximizer, "Print the harmonic maximizer")->needs(pair);

    auto* chr = app.add_subcommand("characterize", "Tree, block-graph and triangle-equality checks");
    chr->add_option("file", o.file)->required();
    chr->add_option("--mode", o.mode)->check(CLI::IsMember({"weight", "conductance"}));
    chr->add_flag("--tree", o.tree);
    chr->add_flag("--block", o.block);
    chr->add_option("--triangle", o.triangle, "x y z")->expected(3);

    auto* fam = app.add_subcommand("family", "Budgeted scans of a builtin infinite graph");
    fam->add_option("name", o.family, "unit-star, decaying-star, unit-ray or decaying-ray")->required();
    fam->add_option("--mode", o.mode)->check(CLI::IsMember({"ball", "elf"}));
    fam->add_option("--center", o.center);
    fam->add_option("--radius", o.radius)->check(CLI::PositiveNumber);
    fam->add_option("--budget", o.budget)->check(CLI::PositiveNumber);
    fam->add_option("--threshold", o.threshold);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    Report report;
    report.command = app.get_subcommands().front()->get_name();
    try {
        if (metric->parsed()) {
            cmd_metric(o, report);
        } else if (geo->parsed()) {
            cmd_geodesics(o, report);
        } else if (gw->parsed()) {
            cmd_geodesic_weight(o, report);
        } else if (res->parsed()) {
            cmd_resistance(o, report);
        } else if (chr->parsed()) {
            cmd_characterize(o, report);
        } else {
            cmd_family(o, report);
        }
    } catch (...) {
        const Failure f = classify(std::current_exception());
        err << "error: " << f.kind << ": " << f.message << '\n';
        if (o.json) {
            report.results = Json{{"error", Json{{"exit_code", f.code}, {"kind", f.kind}, {"message", f.message}}}};
            out << render_json(report);
        }
        return f.code;
    }
    out << (o.json ? render_json(report) : render_text(report));
    return kOk;
}

}  // namespace pathmetric::cli
