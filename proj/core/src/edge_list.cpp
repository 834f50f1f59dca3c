#include "pathmetric/edge_list.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "pathmetric/errors.hpp"

namespace pathmetric {

namespace {

struct RawEdge {
    std::size_t line;
    std::string a;
    std::string b;
    double value;
};

struct RawDocument {
    std::vector<std::string> labels;  // first-appearance order
    std::vector<RawEdge> edges;
};

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
        }
        if (i > start) {
            out.emplace_back(line.substr(start, i - start));
        }
    }
    return out;
}

RawDocument read_document(std::string_view text) {
    RawDocument doc;
    std::map<std::string, bool, std::less<>> seen;
    auto note = [&](const std::string& label) {
        if (seen.emplace(label, true).second) {
            doc.labels.push_back(label);
        }
    };

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        if (tokens.size() == 2 && tokens[0] == "vertex") {
            note(tokens[1]);
        } else if (tokens.size() == 3) {
            double value = 0.0;
            if (!parse_weight_token(tokens[2], value)) {
                throw ParseError(line_no, "bad value '" + tokens[2] + "' (expected a nonnegative decimal or inf)");
            }
            note(tokens[0]);
            note(tokens[1]);
            doc.edges.push_back({line_no, tokens[0], tokens[1], value});
        } else {
            throw ParseError(line_no, "expected '<label> <label> <value>' or 'vertex <label>'");
        }
        if (end == text.size()) {
            break;
        }
    }
    return doc;
}

std::string where(const RawEdge& e) { return "line " + std::to_string(e.line) + ": "; }

template <class G, class Store>
G build(const RawDocument& doc, GraphMode mode, Store&& store) {
    G g;
    for (const auto& label : doc.labels) {
        g.add_vertex(label);
    }
    std::map<std::pair<VertexId, VertexId>, double> values;
    for (const RawEdge& e : doc.edges) {
        if (e.value < 0.0) {
            throw NegativeWeightError(where(e) + "negative value for (" + e.a + ", " + e.b + ")");
        }
        const VertexId x = g.id(e.a);
        const VertexId y = g.id(e.b);
        if (x == y) {
            if (mode == GraphMode::conductance) {
                throw DiagonalError(where(e) + "self-loop at '" + e.a + "' is not allowed for conductances");
            }
            if (e.value != 0.0) {
                throw DiagonalError(where(e) + "self-loop at '" + e.a + "' must have weight 0");
            }
            continue;
        }
        if (mode == GraphMode::weight && e.value == 0.0) {
            throw ZeroWeightError(where(e) + "weight between distinct vertices '" + e.a + "' and '" + e.b +
                                  "' must be positive");
        }
        if (mode == GraphMode::conductance && std::isinf(e.value)) {
            throw ParseError(e.line, "conductance must be finite");
        }
        const auto key = std::minmax(x, y);
        auto [it, inserted] = values.emplace(key, e.value);
        if (!inserted) {
            if (it->second != e.value) {
                throw AsymmetryError(where(e) + "conflicting values for (" + e.a + ", " + e.b + "): " +
                                     to_string(Weight(it->second)) + " and " + to_string(Weight(e.value)));
            }
            continue;
        }
        store(g, x, y, e.value);
    }
    return g;
}

}  // namespace

WeightedGraph parse_weighted_graph(std::string_view text) {
    return build<WeightedGraph>(read_document(text), GraphMode::weight,
                                [](WeightedGraph& g, VertexId x, VertexId y, double v) {
                                    g.set_weight(x, y, Weight(v));
                                });
}

ConductanceGraph parse_conductance_graph(std::string_view text) {
    return build<ConductanceGraph>(read_document(text), GraphMode::conductance,
                                   [](ConductanceGraph& g, VertexId x, VertexId y, double v) {
                                       g.set_conductance(x, y, v);
                                   });
}

std::variant<WeightedGraph, ConductanceGraph> parse_graph(std::string_view text, GraphMode mode) {
    if (mode == GraphMode::weight) {
        return parse_weighted_graph(text);
    }
    return parse_conductance_graph(text);
}

namespace {

template <class G>
std::string serialize_rows(const G& g) {
    std::ostringstream out;
    for (VertexId v = 0; v < g.size(); ++v) {
        out << "vertex " << g.label(v) << '\n';
    }
    for (VertexId x = 0; x < g.size(); ++x) {
        for (const Entry& e : g.row(x)) {
            if (x < e.to) {
                out << g.label(x) << ' ' << g.label(e.to) << ' ' << to_string(Weight(e.value)) << '\n';
            }
        }
    }
    return out.str();
}

}  // namespace

std::string serialize(const WeightedGraph& g) { return serialize_rows(g); }
std::string serialize(const ConductanceGraph& b) { return serialize_rows(b); }

}  // namespace pathmetric
