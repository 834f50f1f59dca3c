#include "pathmetric/family.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

#include "pathmetric/errors.hpp"

namespace pathmetric {

namespace {

constexpr std::array<std::pair<BuiltinFamily, std::string_view>, 4> kNames{{
    {BuiltinFamily::unit_star, "unit-star"},
    {BuiltinFamily::decaying_star, "decaying-star"},
    {BuiltinFamily::unit_ray, "unit-ray"},
    {BuiltinFamily::decaying_ray, "decaying-ray"},
}};

class StarFamily final : public GraphFamily {
public:
    explicit StarFamily(bool decaying) : decaying_(decaying) {}

    std::string name() const override { return decaying_ ? "decaying-star" : "unit-star"; }
    std::string describe(std::size_t k) const override { return k == 0 ? "center" : "leaf" + std::to_string(k); }
    Weight weight(std::size_t a, std::size_t b) const override {
        if (a == b) {
            return Weight::zero();
        }
        if (a != 0 && b != 0) {
            return kInfinity;
        }
        const std::size_t leaf = a == 0 ? b : a;
        return decaying_ ? Weight(1.0 / static_cast<double>(leaf)) : Weight(1.0);
    }

private:
    bool decaying_;
};

class RayFamily final : public GraphFamily {
public:
    explicit RayFamily(bool decaying) : decaying_(decaying) {}

    std::string name() const override { return decaying_ ? "decaying-ray" : "unit-ray"; }
    std::string describe(std::size_t k) const override { return "x" + std::to_string(k); }
    Weight weight(std::size_t a, std::size_t b) const override {
        if (a == b) {
            return Weight::zero();
        }
        const auto [lo, hi] = std::minmax(a, b);
        if (hi != lo + 1) {
            return kInfinity;
        }
        return decaying_ ? Weight(std::ldexp(1.0, -static_cast<int>(hi))) : Weight(1.0);
    }

private:
    bool decaying_;
};

}  // namespace

std::unique_ptr<GraphFamily> make_family(BuiltinFamily kind) {
    switch (kind) {
        case BuiltinFamily::unit_star:
            return std::make_unique<StarFamily>(false);
        case BuiltinFamily::decaying_star:
            return std::make_unique<StarFamily>(true);
        case BuiltinFamily::unit_ray:
            return std::make_unique<RayFamily>(false);
        case BuiltinFamily::decaying_ray:
            return std::make_unique<RayFamily>(true);
    }
    throw Error("unknown family kind");
}

std::optional<BuiltinFamily> family_from_name(std::string_view name) {
    for (const auto& [kind, text] : kNames) {
        if (text == name) {
            return kind;
        }
    }
    return std::nullopt;
}

std::string_view family_name(BuiltinFamily kind) {
    for (const auto& [k, text] : kNames) {
        if (k == kind) {
            return text;
        }
    }
    return "unknown";
}

const std::vector<std::string_view>& builtin_family_names() {
    static const std::vector<std::string_view> names = [] {
        std::vector<std::string_view> out;
        for (const auto& entry : kNames) {
            out.push_back(entry.second);
        }
        return out;
    }();
    return names;
}

CallbackFamily::CallbackFamily(std::string name, std::function<Weight(std::size_t, std::size_t)> weight,
                               std::function<std::string(std::size_t)> describe)
    : name_(std::move(name)), weight_(std::move(weight)), describe_(std::move(describe)) {}

std::string CallbackFamily::describe(std::size_t k) const {
    return describe_ ? describe_(k) : "v" + std::to_string(k);
}

WeightedGraph truncate(const GraphFamily& family, const std::vector<std::size_t>& vertices) {
    WeightedGraph g;
    for (std::size_t k : vertices) {
        g.add_vertex(family.describe(k));
    }
    if (g.size() != vertices.size()) {
        throw QueryError("truncation lists a vertex twice");
    }
    for (VertexId i = 0; i < vertices.size(); ++i) {
        for (VertexId j = i + 1; j < vertices.size(); ++j) {
            const Weight w = family.weight(vertices[i], vertices[j]);
            if (w.is_finite()) {
                g.set_weight(i, j, w);
            }
        }
    }
    return g;
}

}  // namespace pathmetric
