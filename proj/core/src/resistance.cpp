#include "pathmetric/resistance.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include <Eigen/Dense>

#include "pathmetric/errors.hpp"

namespace pathmetric {

namespace {

void check_size(const ConductanceGraph& b, const PotentialFunction& f) {
    if (f.size() != b.size()) {
        throw SizeMismatch("potential has " + std::to_string(f.size()) + " values but the graph has " +
                           std::to_string(b.size()) + " vertices");
    }
}

std::vector<VertexId> component_of(const ConductanceGraph& b, VertexId v) {
    const auto comp = connected_components(b);
    std::vector<VertexId> out;
    for (VertexId u = 0; u < b.size(); ++u) {
        if (comp[u] == comp[v]) {
            out.push_back(u);
        }
    }
    return out;
}

// Laplacian of one connected component with the ground vertex's row and
// column removed. It is symmetric positive definite for a connected component.
class GroundedLaplacian {
public:
    GroundedLaplacian(const ConductanceGraph& b, std::vector<VertexId> component, VertexId ground)
        : vertices_(std::move(component)), index_(b.size(), kNone) {
        std::size_t next = 0;
        for (VertexId v : vertices_) {
            if (v != ground) {
                index_[v] = next++;
            }
        }
        const auto m = static_cast<Eigen::Index>(next);
        matrix_ = Eigen::MatrixXd::Zero(m, m);
        for (VertexId v : vertices_) {
            if (v == ground) {
                continue;
            }
            const auto i = static_cast<Eigen::Index>(index_[v]);
            b.for_each_neighbor(v, [&](VertexId u, double c) {
                matrix_(i, i) += c;
                if (u != ground) {
                    matrix_(i, static_cast<Eigen::Index>(index_[u])) -= c;
                }
            });
        }
        factor();
    }

    std::size_t index(VertexId v) const { return index_[v]; }
    Eigen::Index size() const { return matrix_.rows(); }

    Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const {
        if (use_lu_) {
            return lu_.solve(rhs);
        }
        return llt_.solve(rhs);
    }

    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

private:
    void factor() {
        if (matrix_.rows() == 0) {
            return;
        }
        llt_.compute(matrix_);
        if (llt_.info() == Eigen::Success) {
            // Squared pivots far below the matrix scale mean the solve would
            // amplify rounding; fall back to full pivoting.
            const double pivot = llt_.matrixLLT().diagonal().cwiseAbs().minCoeff();
            if (pivot * pivot > 1e-14 * matrix_.cwiseAbs().maxCoeff()) {
                return;
            }
        }
        use_lu_ = true;
        lu_.compute(matrix_);
    }

    std::vector<VertexId> vertices_;
    std::vector<std::size_t> index_;
    Eigen::MatrixXd matrix_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
    Eigen::FullPivLU<Eigen::MatrixXd> lu_;
    bool use_lu_ = false;
};

// Potential with f(y) = 0 and unit current injected at x, on the component of x.
std::vector<double> unit_current_potential(const ConductanceGraph& b, const std::vector<VertexId>& component,
                                           VertexId x, VertexId y) {
    GroundedLaplacian lap(b, component, y);
    Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(lap.size(), 1);
    rhs(static_cast<Eigen::Index>(lap.index(x)), 0) = 1.0;
    const Eigen::MatrixXd solution = lap.solve(rhs);
    std::vector<double> f(b.size(), 0.0);
    for (VertexId v : component) {
        if (v != y) {
            f[v] = solution(static_cast<Eigen::Index>(lap.index(v)), 0);
        }
    }
    return f;
}

void check_pair(const ConductanceGraph& b, VertexId x, VertexId y) {
    b.check_vertex(x);
    b.check_vertex(y);
    if (x == y) {
        throw SameVertex("resistance needs two distinct vertices");
    }
}

}  // namespace

double gamma(const ConductanceGraph& b, const PotentialFunction& f, VertexId x) {
    check_size(b, f);
    b.check_vertex(x);
    double sum = 0.0;
    b.for_each_neighbor(x, [&](VertexId y, double c) {
        const double diff = f[x] - f[y];
        sum += c * diff * diff;
    });
    return 0.5 * sum;
}

EnergyBreakdown energy(const ConductanceGraph& b, const PotentialFunction& f) {
    check_size(b, f);
    EnergyBreakdown out;
    out.per_vertex.resize(b.size());
    for (VertexId x = 0; x < b.size(); ++x) {
        out.per_vertex[x] = gamma(b, f, x);
        out.total += out.per_vertex[x];
    }
    return out;
}

double laplacian_apply(const ConductanceGraph& b, const PotentialFunction& f, VertexId x) {
    check_size(b, f);
    b.check_vertex(x);
    double sum = 0.0;
    b.for_each_neighbor(x, [&](VertexId y, double c) { sum += c * (f[x] - f[y]); });
    return sum;
}

Weight effective_resistance(const ConductanceGraph& b, VertexId x, VertexId y) {
    check_pair(b, x, y);
    const auto component = component_of(b, x);
    if (!std::binary_search(component.begin(), component.end(), y)) {
        return kInfinity;
    }
    return Weight(unit_current_potential(b, component, x, y)[x]);
}

MetricTable resistance_matrix(const ConductanceGraph& b) {
    const std::size_t n = b.size();
    MetricTable out(n);
    const auto comp = connected_components(b);
    for (VertexId root = 0; root < n; ++root) {
        if (comp[root] != root) {
            continue;
        }
        std::vector<VertexId> component;
        for (VertexId v = root; v < n; ++v) {
            if (comp[v] == root) {
                component.push_back(v);
            }
        }
        if (component.size() < 2) {
            continue;
        }
        // With the root grounded, the inverse G of the grounded Laplacian gives
        // R(u, v) = G(u, u) + G(v, v) - 2 G(u, v), where G is zero on the root.
        GroundedLaplacian lap(b, component, root);
        const Eigen::MatrixXd green = lap.solve(Eigen::MatrixXd::Identity(lap.size(), lap.size()));
        auto entry = [&](VertexId u, VertexId v) -> double {
            if (u == root || v == root) {
                return 0.0;
            }
            const Eigen::Index i = static_cast<Eigen::Index>(lap.index(u));
            const Eigen::Index j = static_cast<Eigen::Index>(lap.index(v));
            return 0.5 * (green(i, j) + green(j, i));
        };
        for (std::size_t i = 0; i < component.size(); ++i) {
            for (std::size_t j = i + 1; j < component.size(); ++j) {
                const VertexId u = component[i];
                const VertexId v = component[j];
                const double r = entry(u, u) + entry(v, v) - 2.0 * entry(u, v);
                out.set(u, v, Weight(std::max(r, 0.0)));
            }
        }
    }
    return out;
}

PotentialFunction harmonic_maximizer(const ConductanceGraph& b, VertexId x, VertexId y) {
    check_pair(b, x, y);
    const auto component = component_of(b, x);
    if (!std::binary_search(component.begin(), component.end(), y)) {
        throw Disconnected(b.label(x) + " and " + b.label(y) + " lie in different components");
    }
    std::vector<double> f = unit_current_potential(b, component, x, y);
    // Unit current: Q(f) = f(x) = R, so dividing by sqrt(R) gives unit energy.
    const double scale = 1.0 / std::sqrt(f[x]);
    for (double& v : f) {
        v *= scale;
    }
    return PotentialFunction{std::move(f)};
}

double max_harmonic_residual(const ConductanceGraph& b, const PotentialFunction& f, VertexId x, VertexId y) {
    check_size(b, f);
    double worst = 0.0;
    for (VertexId v = 0; v < b.size(); ++v) {
        if (v != x && v != y) {
            worst = std::max(worst, std::fabs(laplacian_apply(b, f, v)));
        }
    }
    return worst;
}

VariationalReport verify_variational(const ConductanceGraph& b, VertexId x, VertexId y, std::size_t trials,
                                     std::uint64_t seed) {
    check_pair(b, x, y);
    const Weight r = effective_resistance(b, x, y);
    if (r.is_infinite()) {
        throw Disconnected(b.label(x) + " and " + b.label(y) + " lie in different components");
    }
    VariationalReport report;
    report.resistance = r.value();
    report.trials = trials;

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    auto quotient = [&](const PotentialFunction& f) -> std::optional<double> {
        const double q = energy(b, f).total;
        if (!(q > 0.0)) {
            return std::nullopt;  // constant on every component: quotient undefined
        }
        const double gap = f[y] - f[x];
        return gap * gap / q;
    };
    std::size_t done = 0;
    while (done < trials) {
        PotentialFunction f{std::vector<double>(b.size())};
        for (double& v : f.values) {
            v = uniform(rng);
        }
        const auto q = quotient(f);
        if (!q) {
            continue;
        }
        ++done;
        report.max_sampled_quotient = std::max(report.max_sampled_quotient, *q);
        if (*q > report.resistance * (1.0 + kResistanceTolerance)) {
            ++report.violations;
        }
    }

    const PotentialFunction best = harmonic_maximizer(b, x, y);
    report.maximizer_quotient = quotient(best).value_or(0.0);
    report.maximizer_attains = std::fabs(report.maximizer_quotient - report.resistance) <=
                               kResistanceTolerance * report.resistance;
    // Residual at unit injected current.
    report.maximizer_residual = max_harmonic_residual(b, best, x, y) * std::sqrt(report.resistance);
    return report;
}

}  // namespace pathmetric
