#include "pathmetric/weight.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "pathmetric/errors.hpp"

namespace pathmetric {

Weight::Weight(double value) : value_(value) {
    if (std::isnan(value)) {
        throw InputError("weight is NaN");
    }
    if (value < 0.0) {
        throw NegativeWeightError("weight " + std::to_string(value) + " is negative");
    }
}

bool approx_equal(Weight a, Weight b, double rel_tol) noexcept {
    if (a.is_infinite() || b.is_infinite()) {
        return a.is_infinite() && b.is_infinite();
    }
    const double diff = std::fabs(a.value() - b.value());
    return diff <= rel_tol * std::max(std::fabs(a.value()), std::fabs(b.value()));
}

std::string to_string(Weight w) {
    if (w.is_infinite()) {
        return "inf";
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, w.value());
    return std::string(buf, res.ptr);
}

std::string format_fixed17(double v) {
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ostream& operator<<(std::ostream& os, Weight w) { return os << to_string(w); }

bool parse_weight_token(const std::string& token, double& out) {
    if (token == "inf") {
        out = std::numeric_limits<double>::infinity();
        return true;
    }
    if (token.empty()) {
        return false;
    }
    // from_chars accepts "inf"/"nan" spellings too; only plain decimals are allowed here.
    for (char c : token) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' || c == 'e' ||
              c == 'E')) {
            return false;
        }
    }
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (*first == '+') {
        ++first;
    }
    auto res = std::from_chars(first, last, out);
    return res.ec == std::errc{} && res.ptr == last && std::isfinite(out);
}

}  // namespace pathmetric
