#pragma once

// Domain model for complex-valued functions on the grid Z_r^n: points,
// frequency multi-indices, characters, inner products, norms, and the
// distance-to-{0,1} deviation used by the Boolean rounding diagnostics.
//
// Conventions fixed here and relied on everywhere else:
//   * points and multi-indices are little-endian mixed radix: coordinate 1
//     varies fastest, index = sum_i coords[i-1] * r^(i-1);
//   * coordinates are numbered 1..n in the public API (coords[i-1] holds
//     coordinate i);
//   * the inner product is the expectation form <f,g> = E[f conj(g)] under
//     the uniform measure, so the zero coefficient of a transform equals
//     the mean of the function.

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "dictatorlab/errors.hpp"

namespace dictatorlab {

using Complex = std::complex<double>;

/// A (1-based) coordinate together with a residue value in {0,..,r-1}.
struct CoordValue {
    int coord = 1;
    int value = 0;
};

/// The pair (r, n) defining Z_r^n. Holds a shared table of the r-th roots
/// of unity so character evaluation never re-derives transcendentals;
/// quarter-turn angles are snapped to their exact values.
///
/// n = 0 (the empty product, a single point) is accepted so that restricting
/// a function on every coordinate still yields a function; file loaders
/// reject it at the schema level.
class GridShape {
public:
    static constexpr std::int64_t kDefaultSizeCap = std::int64_t{1} << 24;

    GridShape(int r, int n, std::int64_t size_cap = kDefaultSizeCap);

    int r() const { return r_; }
    int n() const { return n_; }
    std::int64_t size() const { return size_; }

    /// r = 2 is representable but outside the regime the stability
    /// operations accept; callers may surface this as a warning.
    bool binary_radix() const { return r_ == 2; }

    /// exp(2*pi*i*k/r), k reduced mod r (negative k allowed).
    Complex root(std::int64_t k) const;
    Complex conj_root(std::int64_t k) const { return std::conj(root(k)); }

    friend bool operator==(const GridShape& a, const GridShape& b) {
        return a.r_ == b.r_ && a.n_ == b.n_;
    }

private:
    int r_;
    int n_;
    std::int64_t size_;
    std::shared_ptr<const std::vector<Complex>> roots_;  // shared across copies
};

/// A vertex of Z_r^n; coords[i-1] is coordinate i.
struct Point {
    std::vector<int> coords;
};

/// A frequency vector S in Z_r^n; same representation as a point.
struct MultiIndex {
    std::vector<int> coords;

    /// |S| = number of nonzero coordinates.
    int support_size() const {
        int s = 0;
        for (int c : coords)
            if (c != 0) ++s;
        return s;
    }
};

std::int64_t index_of(const Point& p, const GridShape& shape);
std::int64_t index_of(const MultiIndex& s, const GridShape& shape);
Point point_of(std::int64_t index, const GridShape& shape);
MultiIndex multi_index_of(std::int64_t index, const GridShape& shape);

/// Little-endian digits of an index; shared decode for points and
/// multi-indices.
void digits_of(std::int64_t index, const GridShape& shape, std::span<int> out);

/// Number of nonzero digits of the index (|S| for a multi-index).
int support_of_index(std::int64_t index, const GridShape& shape);

/// Character u_S(T) = exp(2*pi*i * sum_i S_i T_i / r); unit modulus.
Complex character(const MultiIndex& s, const Point& t, const GridShape& shape);

/// Dense complex-valued function on Z_r^n, immutable after construction.
/// All values must be finite.
class GridFunction {
public:
    GridFunction(GridShape shape, std::vector<Complex> values);

    static GridFunction zero(const GridShape& shape);
    static GridFunction constant(const GridShape& shape, Complex value);

    const GridShape& shape() const { return shape_; }
    std::span<const Complex> values() const { return values_; }
    Complex operator[](std::int64_t index) const { return values_[static_cast<std::size_t>(index)]; }

private:
    GridShape shape_;
    std::vector<Complex> values_;
};

/// GridFunction whose values all lie within tau of {0, 1}.
class BooleanFunction : public GridFunction {
public:
    static constexpr double kDefaultTolerance = 1e-6;

    explicit BooleanFunction(GridFunction f, double tau_bool = kDefaultTolerance);

    double tau_bool() const { return tau_; }

private:
    double tau_;
};

/// Fourier coefficients indexed by multi-index, same dense layout as the
/// function it came from.
class Spectrum {
public:
    Spectrum(GridShape shape, std::vector<Complex> coeffs);

    const GridShape& shape() const { return shape_; }
    std::span<const Complex> coeffs() const { return coeffs_; }
    Complex operator[](std::int64_t index) const { return coeffs_[static_cast<std::size_t>(index)]; }

private:
    GridShape shape_;
    std::vector<Complex> coeffs_;
};

/// <f,g> = (1/r^n) sum_T f(T) conj(g(T)).
Complex inner_product(const GridFunction& f, const GridFunction& g);

/// (E |f|^p)^(1/p), p >= 1.
double p_norm(const GridFunction& f, double p);

/// Squared 2-norm, E |f|^2; cheaper and more precise than p_norm(f,2)^2.
double norm2_sq(const GridFunction& f);

/// d(z, {0,1}) = min(|z|, |z-1|).
double dist01(Complex z);

/// E[ d(f(T), {0,1})^2 ].
double dist01_norm_sq(const GridFunction& f);

}  // namespace dictatorlab
