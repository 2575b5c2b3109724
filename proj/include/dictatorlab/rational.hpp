#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "dictatorlab/errors.hpp"

namespace dictatorlab {

/// Reduced fraction with positive denominator. Set densities and symmetric
/// differences are ratios of small integers (denominator at most r^n, which
/// is capped well below 2^63), so plain 64-bit arithmetic is exact here.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;

    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw ValidationError("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
};

}  // namespace dictatorlab
