#pragma once

// Shared helpers for the test suites. The oracle_* functions evaluate the
// defining sums from scratch with std::polar, independent of the library's
// root tables and loop structure, so they can referee both transform paths.

#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "dictatorlab/grid.hpp"
#include "dictatorlab/product_graph.hpp"

namespace testsupport {

using dictatorlab::Complex;
using dictatorlab::GridFunction;
using dictatorlab::GridShape;
using dictatorlab::Spectrum;

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform_pm1(std::mt19937_64& rng) { return 2.0 * uniform01(rng) - 1.0; }

inline GridFunction random_function(const GridShape& shape, std::mt19937_64& rng) {
    std::vector<Complex> values(static_cast<std::size_t>(shape.size()));
    for (auto& v : values) v = Complex{uniform_pm1(rng), uniform_pm1(rng)};
    return GridFunction(shape, std::move(values));
}

inline GridFunction random_real_function(const GridShape& shape, std::mt19937_64& rng) {
    std::vector<Complex> values(static_cast<std::size_t>(shape.size()));
    for (auto& v : values) v = Complex{uniform_pm1(rng), 0.0};
    return GridFunction(shape, std::move(values));
}

inline dictatorlab::BooleanFunction random_boolean_function(const GridShape& shape,
                                                            std::mt19937_64& rng) {
    std::vector<Complex> values(static_cast<std::size_t>(shape.size()));
    for (auto& v : values) v = Complex{static_cast<double>(rng() & 1), 0.0};
    return dictatorlab::BooleanFunction(GridFunction(shape, std::move(values)));
}

inline std::int64_t dot_mod_r(std::int64_t s, std::int64_t t, const GridShape& shape) {
    std::int64_t dot = 0;
    for (int i = 0; i < shape.n(); ++i) {
        dot += (s % shape.r()) * (t % shape.r());
        s /= shape.r();
        t /= shape.r();
    }
    return dot % shape.r();
}

inline Complex unit_root(std::int64_t k, int r) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(r));
}

// Direct analysis sum, term by term.
inline std::vector<Complex> oracle_forward(const GridFunction& f) {
    const GridShape& shape = f.shape();
    std::vector<Complex> coeffs(static_cast<std::size_t>(shape.size()));
    for (std::int64_t s = 0; s < shape.size(); ++s) {
        Complex acc{0.0, 0.0};
        for (std::int64_t t = 0; t < shape.size(); ++t)
            acc += f[t] * std::conj(unit_root(dot_mod_r(s, t, shape), shape.r()));
        coeffs[static_cast<std::size_t>(s)] = acc / static_cast<double>(shape.size());
    }
    return coeffs;
}

// Direct synthesis sum.
inline std::vector<Complex> oracle_synthesize(const Spectrum& spec) {
    const GridShape& shape = spec.shape();
    std::vector<Complex> values(static_cast<std::size_t>(shape.size()));
    for (std::int64_t t = 0; t < shape.size(); ++t) {
        Complex acc{0.0, 0.0};
        for (std::int64_t s = 0; s < shape.size(); ++s)
            acc += spec[s] * unit_root(dot_mod_r(s, t, shape), shape.r());
        values[static_cast<std::size_t>(t)] = acc;
    }
    return values;
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline double max_abs(std::span<const Complex> a) {
    double m = 0.0;
    for (const Complex& v : a) m = std::max(m, std::abs(v));
    return m;
}

// The running small example: J = {(0,0),(0,1)} in K_3^2, whose indicator has
// transform (1/9)(1 + w^(-S_2)) and level weights [4/81, 10/81, 4/81].
inline dictatorlab::IndependentSet two_point_example_set() {
    const GridShape shape(3, 2);
    return dictatorlab::IndependentSet(dictatorlab::VertexSet(shape, {0, 3}));
}

inline dictatorlab::BooleanFunction two_point_example_function() {
    return dictatorlab::indicator(two_point_example_set());
}

}  // namespace testsupport
