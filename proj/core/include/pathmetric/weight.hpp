#pragma once

#include <compare>
#include <iosfwd>
#include <limits>
#include <string>

namespace pathmetric {

/// A value in [0, inf]: the codomain of weights, path metrics and resistances.
///
/// Backed by a double; infinity is the IEEE positive infinity, so addition and
/// min behave as required (a + inf = inf, min(a, inf) = a). Construction
/// rejects negative values and NaN.
class Weight {
public:
    constexpr Weight() noexcept = default;
    explicit Weight(double value);

    static constexpr Weight infinity() noexcept { return Weight(Raw{}, std::numeric_limits<double>::infinity()); }
    static constexpr Weight zero() noexcept { return Weight(); }

    constexpr double value() const noexcept { return value_; }
    constexpr bool is_infinite() const noexcept { return value_ == std::numeric_limits<double>::infinity(); }
    constexpr bool is_finite() const noexcept { return !is_infinite(); }

    friend constexpr Weight operator+(Weight a, Weight b) noexcept { return Weight(Raw{}, a.value_ + b.value_); }
    Weight& operator+=(Weight other) noexcept {
        value_ += other.value_;
        return *this;
    }

    friend constexpr bool operator==(Weight a, Weight b) noexcept { return a.value_ == b.value_; }
    friend constexpr std::partial_ordering operator<=>(Weight a, Weight b) noexcept { return a.value_ <=> b.value_; }

private:
    struct Raw {};
    constexpr Weight(Raw, double v) noexcept : value_(v) {}

    double value_ = 0.0;
};

inline constexpr Weight kInfinity = Weight::infinity();

/// Relative closeness with exact agreement on infinities. `rel_tol` = 0 means exact.
bool approx_equal(Weight a, Weight b, double rel_tol) noexcept;

/// Shortest round-trip decimal, or "inf".
std::string to_string(Weight w);

/// 17 significant digits, or "inf".
std::string format_fixed17(double v);

std::ostream& operator<<(std::ostream& os, Weight w);

/// Parses a nonnegative decimal or the token "inf". Returns false on bad syntax;
/// a negative literal parses (so callers can report it precisely).
bool parse_weight_token(const std::string& token, double& out);

}  // namespace pathmetric
