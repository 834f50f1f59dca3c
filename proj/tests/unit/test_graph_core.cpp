#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "pathmetric/edge_list.hpp"
#include "pathmetric/errors.hpp"
#include "pathmetric/graph.hpp"
#include "pathmetric/metric_table.hpp"

using namespace pathmetric;
using namespace pathmetric::testing;

TEST_CASE("parse path graph in weight mode") {
    const WeightedGraph g = parse_weighted_graph("a b 1\nb c 1");
    REQUIRE(g.size() == 3);
    CHECK(g.label(0) == "a");
    CHECK(g.label(2) == "c");
    CHECK(g.weight(0, 1) == Weight(1.0));
    CHECK(g.weight(1, 2) == Weight(1.0));
    CHECK(g.weight(2, 1) == Weight(1.0));
    CHECK(g.weight(0, 2).is_infinite());
    CHECK(g.weight(1, 1) == Weight::zero());
}

TEST_CASE("inf token means no finite connection") {
    const WeightedGraph g = parse_weighted_graph("a b inf\n");
    REQUIRE(g.size() == 2);
    CHECK(g.weight(0, 1).is_infinite());
}

TEST_CASE("comments, blank lines and vertex declarations") {
    const WeightedGraph g = parse_weighted_graph("# header\n\nvertex lonely\na b 2.5  # trailing\r\n");
    REQUIRE(g.size() == 3);
    CHECK(g.label(0) == "lonely");
    CHECK(g.row(0).empty());
    CHECK(g.weight(1, 2) == Weight(2.5));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_weighted_graph("a b 1\nb a 2"), AsymmetryError);
    CHECK_THROWS_AS(parse_weighted_graph("a b 1\na b 2"), AsymmetryError);
    CHECK_NOTHROW(parse_weighted_graph("a b 1\nb a 1"));
    CHECK_THROWS_AS(parse_weighted_graph("a b"), ParseError);
    CHECK_THROWS_AS(parse_weighted_graph("a b c d"), ParseError);
    CHECK_THROWS_AS(parse_weighted_graph("a b one"), ParseError);
    CHECK_THROWS_AS(parse_weighted_graph("a b nan"), ParseError);
    CHECK_THROWS_AS(parse_weighted_graph("a b -1"), NegativeWeightError);
    CHECK_THROWS_AS(parse_weighted_graph("a b 0"), ZeroWeightError);
    CHECK_THROWS_AS(parse_weighted_graph("a a 1"), DiagonalError);
    CHECK_NOTHROW(parse_weighted_graph("a a 0"));
    CHECK_THROWS_AS(parse_conductance_graph("a a 0"), DiagonalError);
    CHECK_THROWS_AS(parse_conductance_graph("a b inf"), ParseError);
    CHECK_NOTHROW(parse_conductance_graph("a b 0"));

    try {
        parse_weighted_graph("a b 1\n\nc d x\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("conductance mode reads absent pairs as zero") {
    const ConductanceGraph b = parse_conductance_graph(kPath3);
    CHECK(b.conductance(0, 2) == 0.0);
    CHECK(b.conductance(0, 1) == 1.0);
    CHECK(b.edge_count() == 2);
    CHECK(b.degree(1) == 2);
}

TEST_CASE("parse_graph dispatches on mode") {
    auto w = parse_graph(kPath3, GraphMode::weight);
    auto c = parse_graph(kPath3, GraphMode::conductance);
    CHECK(std::holds_alternative<WeightedGraph>(w));
    CHECK(std::holds_alternative<ConductanceGraph>(c));
}

TEST_CASE("validate reports each violated invariant") {
    CHECK(validate(weights(kPath3)).empty());

    WeightedGraph zero(2);
    zero.set_weight(0, 1, Weight::zero());
    auto report = validate(zero);
    REQUIRE_FALSE(report.empty());
    CHECK(report.front().rule == "zero off diagonal");
    CHECK(report.front().x == 0);
    CHECK(report.front().y == 1);

    WeightedGraph loop(1);
    loop.set_raw_entry(0, 0, 1.0);
    report = validate(loop);
    REQUIRE(report.size() == 1);
    CHECK(report.front().rule == "nonzero diagonal");

    WeightedGraph skew(2);
    skew.set_raw_entry(0, 1, 1.0);
    skew.set_raw_entry(1, 0, 2.0);
    report = validate(skew);
    REQUIRE(report.size() == 2);
    CHECK(report[0].rule == "asymmetric");

    WeightedGraph one_sided(2);
    one_sided.set_raw_entry(0, 1, 3.0);
    report = validate(one_sided);
    REQUIRE(report.size() == 1);
    CHECK(report[0].rule == "asymmetric");

    WeightedGraph negative(2);
    negative.set_raw_entry(0, 1, -1.0);
    negative.set_raw_entry(1, 0, -1.0);
    report = validate(negative);
    CHECK(std::any_of(report.begin(), report.end(), [](const Diagnostic& d) { return d.rule == "negative"; }));

    ConductanceGraph b(2);
    b.set_raw_entry(0, 0, 1.0);
    b.set_raw_entry(0, 1, 2.0);
    report = validate(b);
    CHECK(std::any_of(report.begin(), report.end(), [](const Diagnostic& d) { return d.rule == "nonzero diagonal"; }));
    CHECK(std::any_of(report.begin(), report.end(), [](const Diagnostic& d) { return d.rule == "asymmetric"; }));
}

TEST_CASE("metric tables flag zero distances between distinct points") {
    MetricTable t(2);
    t.set(0, 1, Weight::zero());
    const auto report = validate(t);
    REQUIRE(report.size() == 1);
    CHECK(report.front().rule == "zero off diagonal");

    MetricTable bad(3);
    bad.set(0, 1, Weight(1.0));
    bad.set(1, 2, Weight(1.0));
    bad.set(0, 2, Weight(5.0));
    const auto broken = validate(bad);
    CHECK(std::any_of(broken.begin(), broken.end(),
                      [](const Diagnostic& d) { return d.rule == "triangle inequality"; }));
}

TEST_CASE("extended weight arithmetic") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> value(0.0, 1e6);
    for (int i = 0; i < 1000; ++i) {
        const Weight a(value(rng));
        const Weight b(value(rng));
        CHECK((a + b).is_finite());
        CHECK((a + kInfinity).is_infinite());
        CHECK(std::min(a, kInfinity) == a);
        CHECK(a < kInfinity);
        // Exactly one of <, ==, > holds.
        CHECK(int(a < b) + int(a == b) + int(a > b) == 1);
    }
    CHECK_THROWS_AS(Weight(-1.0), NegativeWeightError);
    CHECK_THROWS_AS(Weight(std::nan("")), InputError);
    CHECK(kInfinity == kInfinity);
    CHECK(to_string(kInfinity) == "inf");
    CHECK(to_string(Weight(0.1)) == "0.1");
}

TEST_CASE("paths are injective and nonempty") {
    CHECK_THROWS_AS(Path({}), InvalidPath);
    CHECK_THROWS_AS(Path({0, 1, 0}), InvalidPath);
    const Path p({0, 1, 2});
    CHECK(Path({0, 1}).is_prefix_of(p));
    CHECK_FALSE(Path({0, 2}).is_prefix_of(p));
    CHECK(format_path(weights(kPath3).labels(), p) == "a - b - c");
}

TEST_CASE("serialize then parse is the identity on canonical form") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 50; ++round) {
        const WeightedGraph g = random_weighted_graph(rng, 1 + round % 9, 0.5, round % 2 == 0);
        const std::string canonical = serialize(g);
        const WeightedGraph again = parse_weighted_graph(canonical);
        CHECK(serialize(again) == canonical);
        REQUIRE(again.size() == g.size());
        for (VertexId x = 0; x < g.size(); ++x) {
            for (VertexId y = 0; y < g.size(); ++y) {
                CHECK(again.weight(x, y) == g.weight(x, y));
            }
        }
        CHECK(validate(again).empty());
    }
    const ConductanceGraph b = conductances("p q 0.25\nq r 3\nvertex s\n");
    CHECK(serialize(parse_conductance_graph(serialize(b))) == serialize(b));
}

TEST_CASE("parsed graphs satisfy symmetry and diagonal invariants") {
    std::mt19937_64 rng(5);
    for (int round = 0; round < 30; ++round) {
        const WeightedGraph g = parse_weighted_graph(serialize(random_weighted_graph(rng, 8, 0.4, false)));
        for (VertexId x = 0; x < g.size(); ++x) {
            CHECK(g.weight(x, x) == Weight::zero());
            for (const Entry& e : g.row(x)) {
                CHECK(g.weight(e.to, x) == g.weight(x, e.to));
                if (e.to != x) {
                    CHECK(g.weight(x, e.to) > Weight::zero());
                }
            }
        }
    }
}

TEST_CASE("connected components and reciprocal weight") {
    const ConductanceGraph b = conductances("a b 2\nc d 4\n");
    const auto comp = connected_components(b);
    CHECK(comp == std::vector<std::size_t>{0, 0, 2, 2});
    const WeightedGraph w = reciprocal_weight(b);
    CHECK(w.weight(0, 1) == Weight(0.5));
    CHECK(w.weight(2, 3) == Weight(0.25));
    CHECK(w.weight(0, 2).is_infinite());
}

TEST_CASE("unknown labels") {
    const WeightedGraph g = weights(kPath3);
    CHECK(g.id("b") == 1);
    CHECK_THROWS_AS(g.id("zz"), UnknownVertex);
    CHECK_THROWS_AS(g.weight(0, 9), UnknownVertex);
}
