#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>
#include <random>
#include <string>

#include "pathmetric/edge_list.hpp"
#include "pathmetric/graph.hpp"

namespace pathmetric::testing {

// Small named graphs used throughout the suites.
inline constexpr const char* kPath3 = "a b 1\nb c 1\n";
inline constexpr const char* kTriangle = "x y 1\ny z 1\nx z 1\n";
inline constexpr const char* kCycle4 = "a b 1\nb c 1\nc d 1\nd a 1\n";

inline WeightedGraph weights(const char* text) { return parse_weighted_graph(text); }
inline ConductanceGraph conductances(const char* text) { return parse_conductance_graph(text); }

inline std::string unit_star_text(std::size_t leaves) {
    std::string out;
    for (std::size_t k = 1; k <= leaves; ++k) {
        out += "c l" + std::to_string(k) + " 1\n";
    }
    return out;
}

/// Random weight graph: each pair independently gets a weight k/10 (k in
/// 1..100) with probability `density`, else stays infinite. A fraction of the
/// absent pairs is written as explicit infinite entries.
inline WeightedGraph random_weighted_graph(std::mt19937_64& rng, std::size_t n, double density, bool integer_weights) {
    WeightedGraph g(n);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> tenth(1, 100);
    std::uniform_int_distribution<int> whole(1, 10);
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = x + 1; y < n; ++y) {
            if (coin(rng) < density) {
                const double w = integer_weights ? whole(rng) : tenth(rng) / 10.0;
                g.set_weight(x, y, Weight(w));
            } else if (coin(rng) < 0.2) {
                g.set_weight(x, y, kInfinity);
            }
        }
    }
    return g;
}

/// Random connected conductance graph: a random spanning tree plus each other
/// pair with probability `extra`, integer conductances in 1..max_conductance.
inline ConductanceGraph random_connected_graph(std::mt19937_64& rng, std::size_t n, double extra,
                                               int max_conductance) {
    ConductanceGraph b(n);
    std::uniform_int_distribution<int> value(1, max_conductance);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<VertexId> order(n);
    for (VertexId v = 0; v < n; ++v) {
        order[v] = v;
    }
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        b.set_conductance(order[i], order[pick(rng)], value(rng));
    }
    for (VertexId x = 0; x < n; ++x) {
        for (VertexId y = x + 1; y < n; ++y) {
            if (b.conductance(x, y) == 0.0 && coin(rng) < extra) {
                b.set_conductance(x, y, value(rng));
            }
        }
    }
    return b;
}

inline ConductanceGraph random_tree(std::mt19937_64& rng, std::size_t n, int max_conductance) {
    return random_connected_graph(rng, n, 0.0, max_conductance);
}

/// Connected with at least one cycle (n >= 3).
inline ConductanceGraph random_non_tree(std::mt19937_64& rng, std::size_t n, int max_conductance) {
    while (true) {
        ConductanceGraph b = random_connected_graph(rng, n, 0.3, max_conductance);
        if (b.edge_count() >= n) {
            return b;
        }
    }
}

/// Random graph glued from cliques along cut vertices (always a block graph).
inline ConductanceGraph random_block_graph(std::mt19937_64& rng, std::size_t n, int max_conductance) {
    ConductanceGraph b(n);
    std::uniform_int_distribution<int> value(1, max_conductance);
    std::uniform_int_distribution<std::size_t> block_size(1, 3);
    VertexId next = 1;
    while (next < n) {
        std::uniform_int_distribution<VertexId> anchor_pick(0, next - 1);
        const VertexId anchor = anchor_pick(rng);
        const std::size_t extra = std::min<std::size_t>(block_size(rng), n - next);
        std::vector<VertexId> block{anchor};
        for (std::size_t i = 0; i < extra; ++i) {
            block.push_back(next++);
        }
        for (std::size_t i = 0; i < block.size(); ++i) {
            for (std::size_t j = i + 1; j < block.size(); ++j) {
                b.set_conductance(block[i], block[j], value(rng));
            }
        }
    }
    return b;
}

}  // namespace pathmetric::testing
