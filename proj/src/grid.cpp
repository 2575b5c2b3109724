#include "dictatorlab/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace dictatorlab {

namespace {

std::shared_ptr<const std::vector<Complex>> make_root_table(int r) {
    std::vector<Complex> roots(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k) {
        // Snap quarter turns so lattice angles are exact.
        if (k == 0) {
            roots[k] = {1.0, 0.0};
        } else if (4LL * k == r) {
            roots[k] = {0.0, 1.0};
        } else if (2LL * k == r) {
            roots[k] = {-1.0, 0.0};
        } else if (4LL * k == 3LL * r) {
            roots[k] = {0.0, -1.0};
        } else {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(r);
            roots[k] = {std::cos(angle), std::sin(angle)};
        }
    }
    return std::make_shared<const std::vector<Complex>>(std::move(roots));
}

void check_coords(const std::vector<int>& coords, const GridShape& shape, const char* what) {
    if (static_cast<int>(coords.size()) != shape.n())
        throw ValidationError(std::string(what) + ": expected " + std::to_string(shape.n()) +
                              " coordinates, got " + std::to_string(coords.size()));
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= shape.r())
            throw ValidationError(std::string(what) + ": coordinate " + std::to_string(i + 1) +
                                  " value " + std::to_string(coords[i]) + " outside [0," +
                                  std::to_string(shape.r() - 1) + "]");
    }
}

std::int64_t coords_to_index(const std::vector<int>& coords, const GridShape& shape) {
    std::int64_t index = 0;
    std::int64_t stride = 1;
    for (int c : coords) {
        index += c * stride;
        stride *= shape.r();
    }
    return index;
}

}  // namespace

GridShape::GridShape(int r, int n, std::int64_t size_cap) : r_(r), n_(n) {
    if (r < 2) throw ValidationError("radix must be at least 2, got " + std::to_string(r));
    if (n < 0) throw ValidationError("dimension must be nonnegative, got " + std::to_string(n));
    if (size_cap < 1) throw ValidationError("size cap must be positive");
    std::int64_t size = 1;
    for (int i = 0; i < n; ++i) {
        if (size > size_cap / r)
            throw ValidationError("grid size " + std::to_string(r) + "^" + std::to_string(n) +
                                  " exceeds cap " + std::to_string(size_cap));
        size *= r;
    }
    size_ = size;
    roots_ = make_root_table(r);
}

Complex GridShape::root(std::int64_t k) const {
    std::int64_t m = k % r_;
    if (m < 0) m += r_;
    return (*roots_)[static_cast<std::size_t>(m)];
}

void digits_of(std::int64_t index, const GridShape& shape, std::span<int> out) {
    for (int i = 0; i < shape.n(); ++i) {
        out[static_cast<std::size_t>(i)] = static_cast<int>(index % shape.r());
        index /= shape.r();
    }
}

int support_of_index(std::int64_t index, const GridShape& shape) {
    int s = 0;
    for (int i = 0; i < shape.n(); ++i) {
        if (index % shape.r() != 0) ++s;
        index /= shape.r();
    }
    return s;
}

std::int64_t index_of(const Point& p, const GridShape& shape) {
    check_coords(p.coords, shape, "point");
    return coords_to_index(p.coords, shape);
}

std::int64_t index_of(const MultiIndex& s, const GridShape& shape) {
    check_coords(s.coords, shape, "multi-index");
    return coords_to_index(s.coords, shape);
}

Point point_of(std::int64_t index, const GridShape& shape) {
    if (index < 0 || index >= shape.size())
        throw ValidationError("point index " + std::to_string(index) + " outside [0," +
                              std::to_string(shape.size() - 1) + "]");
    Point p;
    p.coords.resize(static_cast<std::size_t>(shape.n()));
    digits_of(index, shape, p.coords);
    return p;
}

MultiIndex multi_index_of(std::int64_t index, const GridShape& shape) {
    if (index < 0 || index >= shape.size())
        throw ValidationError("multi-index " + std::to_string(index) + " outside [0," +
                              std::to_string(shape.size() - 1) + "]");
    MultiIndex s;
    s.coords.resize(static_cast<std::size_t>(shape.n()));
    digits_of(index, shape, s.coords);
    return s;
}

Complex character(const MultiIndex& s, const Point& t, const GridShape& shape) {
    check_coords(s.coords, shape, "multi-index");
    check_coords(t.coords, shape, "point");
    std::int64_t dot = 0;
    for (int i = 0; i < shape.n(); ++i)
        dot += static_cast<std::int64_t>(s.coords[static_cast<std::size_t>(i)]) *
               t.coords[static_cast<std::size_t>(i)];
    return shape.root(dot);
}

GridFunction::GridFunction(GridShape shape, std::vector<Complex> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
    if (static_cast<std::int64_t>(values_.size()) != shape_.size())
        throw ValidationError("function table has " + std::to_string(values_.size()) +
                              " entries, shape needs " + std::to_string(shape_.size()));
    for (const Complex& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ValidationError("function values must be finite");
    }
}

GridFunction GridFunction::zero(const GridShape& shape) {
    return GridFunction(shape, std::vector<Complex>(static_cast<std::size_t>(shape.size())));
}

GridFunction GridFunction::constant(const GridShape& shape, Complex value) {
    return GridFunction(shape, std::vector<Complex>(static_cast<std::size_t>(shape.size()), value));
}

BooleanFunction::BooleanFunction(GridFunction f, double tau_bool)
    : GridFunction(std::move(f)), tau_(tau_bool) {
    if (!(tau_ >= 0.0)) throw ValidationError("Boolean tolerance must be nonnegative");
    for (std::int64_t i = 0; i < shape().size(); ++i) {
        if (dist01((*this)[i]) > tau_)
            throw ValidationError("value at index " + std::to_string(i) +
                                  " is further than " + std::to_string(tau_) + " from {0,1}");
    }
}

Spectrum::Spectrum(GridShape shape, std::vector<Complex> coeffs)
    : shape_(std::move(shape)), coeffs_(std::move(coeffs)) {
    if (static_cast<std::int64_t>(coeffs_.size()) != shape_.size())
        throw ValidationError("coefficient table has " + std::to_string(coeffs_.size()) +
                              " entries, shape needs " + std::to_string(shape_.size()));
    for (const Complex& v : coeffs_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw ValidationError("coefficients must be finite");
    }
}

Complex inner_product(const GridFunction& f, const GridFunction& g) {
    if (!(f.shape() == g.shape())) throw ValidationError("inner product of mismatched shapes");
    Complex acc{0.0, 0.0};
    for (std::int64_t i = 0; i < f.shape().size(); ++i) acc += f[i] * std::conj(g[i]);
    return acc / static_cast<double>(f.shape().size());
}

double p_norm(const GridFunction& f, double p) {
    if (!(p >= 1.0)) throw ValidationError("p-norm requires p >= 1");
    double acc = 0.0;
    for (const Complex& v : f.values()) acc += std::pow(std::abs(v), p);
    return std::pow(acc / static_cast<double>(f.shape().size()), 1.0 / p);
}

double norm2_sq(const GridFunction& f) {
    double acc = 0.0;
    for (const Complex& v : f.values()) acc += std::norm(v);
    return acc / static_cast<double>(f.shape().size());
}

double dist01(Complex z) {
    const double d0 = std::abs(z);
    const double d1 = std::abs(z - Complex{1.0, 0.0});
    return d0 < d1 ? d0 : d1;
}

double dist01_norm_sq(const GridFunction& f) {
    double acc = 0.0;
    for (const Complex& v : f.values()) {
        const double d = dist01(v);
        acc += d * d;
    }
    return acc / static_cast<double>(f.shape().size());
}

}  // namespace dictatorlab
