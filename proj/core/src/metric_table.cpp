#include "pathmetric/metric_table.hpp"

#include <string>

namespace pathmetric {

std::vector<Diagnostic> validate(const MetricTable& t, double rel_tol) {
    std::vector<Diagnostic> out;
    const std::size_t n = t.size();
    for (VertexId x = 0; x < n; ++x) {
        if (t.at(x, x) != Weight::zero()) {
            out.push_back({"nonzero diagonal", x, x, "d(" + std::to_string(x) + ", " + std::to_string(x) + ") != 0"});
        }
        for (VertexId y = 0; y < n; ++y) {
            if (x == y) {
                continue;
            }
            if (t.at(x, y) != t.at(y, x)) {
                out.push_back({"asymmetric", x, y, "d(x, y) != d(y, x)"});
            }
            if (x < y && t.at(x, y) == Weight::zero()) {
                out.push_back({"zero off diagonal", x, y, "distinct points at distance 0"});
            }
            for (VertexId z = 0; z < n; ++z) {
                const Weight via = t.at(x, z) + t.at(z, y);
                if (via < t.at(x, y) && !approx_equal(via, t.at(x, y), rel_tol)) {
                    out.push_back({"triangle inequality", x, y,
                                   "d(" + std::to_string(x) + ", " + std::to_string(y) + ") = " + to_string(t.at(x, y)) +
                                       " exceeds the route through " + std::to_string(z) + " (" + to_string(via) + ")"});
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace pathmetric
