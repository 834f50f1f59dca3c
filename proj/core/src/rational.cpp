#include "pathmetric/rational.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "pathmetric/errors.hpp"

namespace pathmetric {

Rational rational_from_decimal(std::string_view text) {
    auto fail = [&] { return ParseError(0, "not a decimal literal: '" + std::string(text) + "'"); };
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    BigInt digits = 0;
    long long scale = 0;  // value = digits * 10^scale
    bool any_digit = false;
    bool after_point = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c >= '0' && c <= '9') {
            digits = digits * 10 + (c - '0');
            any_digit = true;
            if (after_point) {
                --scale;
            }
        } else if (c == '.' && !after_point) {
            after_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) {
        throw fail();
    }
    if (i < text.size()) {
        if (text[i] != 'e' && text[i] != 'E') {
            throw fail();
        }
        ++i;
        long long exponent = 0;
        auto res = std::from_chars(text.data() + i + (i < text.size() && text[i] == '+' ? 1 : 0),
                                   text.data() + text.size(), exponent);
        if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
            throw fail();
        }
        scale += exponent;
    }
    BigInt power = 1;
    for (long long k = 0; k < (scale < 0 ? -scale : scale); ++k) {
        power *= 10;
    }
    Rational r = scale >= 0 ? Rational(digits * power) : Rational(digits, power);
    return negative ? Rational(-r) : r;
}

Rational rationalize_shortest(double v) {
    if (!std::isfinite(v)) {
        throw Error("cannot rationalize a non-finite value");
    }
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return rational_from_decimal(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
}

Rational rational_exact(double v) {
    if (!std::isfinite(v)) {
        throw Error("cannot rationalize a non-finite value");
    }
    int exponent = 0;
    const double mantissa = std::frexp(v, &exponent);  // v = mantissa * 2^exponent, |mantissa| in [0.5, 1)
    // 53 bits make the scaled mantissa an exact integer.
    const double scaled = std::ldexp(mantissa, 53);
    BigInt numerator = static_cast<long long>(scaled);
    exponent -= 53;
    if (exponent >= 0) {
        return Rational(numerator << exponent);
    }
    return Rational(numerator, BigInt(1) << -exponent);
}

std::string to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

std::string to_string(const ExactWeight& w) { return w ? to_string(*w) : std::string("inf"); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace pathmetric
