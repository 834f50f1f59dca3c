#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathmetric/graph.hpp"
#include "pathmetric/weight.hpp"

namespace pathmetric {

/// A countably infinite vertex set given by a stream (vertex k is the k-th
/// element) and a symmetric weight oracle. Scans only ever look at finite
/// truncations.
class GraphFamily {
public:
    virtual ~GraphFamily() = default;

    virtual std::string name() const = 0;
    /// Human-readable name of the k-th vertex.
    virtual std::string describe(std::size_t k) const = 0;
    /// w(a, b); must be symmetric and zero exactly when a == b.
    virtual Weight weight(std::size_t a, std::size_t b) const = 0;
};

enum class BuiltinFamily {
    unit_star,      // center 0, leaf k at weight 1
    decaying_star,  // center 0, leaf k at weight 1/k
    unit_ray,       // x_0, x_1, ... with unit steps
    decaying_ray,   // step from x_{k-1} to x_k has weight 2^-k
};

std::unique_ptr<GraphFamily> make_family(BuiltinFamily kind);

/// `unit-star`, `decaying-star`, `unit-ray`, `decaying-ray`.
std::optional<BuiltinFamily> family_from_name(std::string_view name);
std::string_view family_name(BuiltinFamily kind);
const std::vector<std::string_view>& builtin_family_names();

/// A family backed by caller-supplied callables.
class CallbackFamily final : public GraphFamily {
public:
    CallbackFamily(std::string name, std::function<Weight(std::size_t, std::size_t)> weight,
                   std::function<std::string(std::size_t)> describe = {});

    std::string name() const override { return name_; }
    std::string describe(std::size_t k) const override;
    Weight weight(std::size_t a, std::size_t b) const override { return weight_(a, b); }

private:
    std::string name_;
    std::function<Weight(std::size_t, std::size_t)> weight_;
    std::function<std::string(std::size_t)> describe_;
};

/// The induced finite weight graph on the listed stream vertices; graph
/// vertex i is `vertices[i]`.
WeightedGraph truncate(const GraphFamily& family, const std::vector<std::size_t>& vertices);

}  // namespace pathmetric
