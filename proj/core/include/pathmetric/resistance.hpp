#pragma once

#include <cstdint>
#include <vector>

#include "pathmetric/graph.hpp"
#include "pathmetric/metric_table.hpp"
#include "pathmetric/weight.hpp"

namespace pathmetric {

/// Relative tolerance for resistance equalities.
inline constexpr double kResistanceTolerance = 1e-9;
/// Absolute bound on |Lf| off {x, y} for a unit-current potential.
inline constexpr double kHarmonicTolerance = 1e-8;

/// A real-valued function on the vertices.
struct PotentialFunction {
    std::vector<double> values;

    std::size_t size() const noexcept { return values.size(); }
    double operator[](VertexId v) const { return values.at(v); }
};

struct EnergyBreakdown {
    double total = 0.0;
    std::vector<double> per_vertex;
};

/// Gamma(f)(x) = 1/2 sum_y b(x, y) (f(x) - f(y))^2. Throws SizeMismatch.
double gamma(const ConductanceGraph& b, const PotentialFunction& f, VertexId x);

/// Q(f) = sum_x Gamma(f)(x), with the per-vertex terms.
EnergyBreakdown energy(const ConductanceGraph& b, const PotentialFunction& f);

/// Lf(x) = sum_y b(x, y) (f(x) - f(y)).
double laplacian_apply(const ConductanceGraph& b, const PotentialFunction& f, VertexId x);

/// Effective resistance by a grounded solve: f(y) = 0, Lf = e_x on the rest
/// of the component, R = f(x). Infinity across components. Throws SameVertex.
Weight effective_resistance(const ConductanceGraph& b, VertexId x, VertexId y);

/// All pairwise resistances, one factorization per component.
MetricTable resistance_matrix(const ConductanceGraph& b);

/// The unit-energy potential attaining the resistance: harmonic off {x, y},
/// Q(f) = 1, f(x) > f(y), (f(x) - f(y))^2 = R(x, y). Vertices outside the
/// component of x are 0. Throws Disconnected, SameVertex.
PotentialFunction harmonic_maximizer(const ConductanceGraph& b, VertexId x, VertexId y);

/// max |Lf(v)| over v not in {x, y}.
double max_harmonic_residual(const ConductanceGraph& b, const PotentialFunction& f, VertexId x, VertexId y);

struct VariationalReport {
    double resistance = 0.0;
    std::size_t trials = 0;
    double max_sampled_quotient = 0.0;
    /// Samples whose quotient exceeded R (1 + tolerance).
    std::size_t violations = 0;
    double maximizer_quotient = 0.0;
    /// The harmonic maximizer attains R within tolerance.
    bool maximizer_attains = false;
    double maximizer_residual = 0.0;
    bool ok() const { return violations == 0 && maximizer_attains; }
};

/// Samples random non-constant potentials and checks
/// (f(y) - f(x))^2 / Q(f) <= R(x, y), with equality at the harmonic maximizer.
VariationalReport verify_variational(const ConductanceGraph& b, VertexId x, VertexId y, std::size_t trials,
                                     std::uint64_t seed);

}  // namespace pathmetric
