#include "dictatorlab/transform.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dictatorlab {

namespace {

constexpr double kDegreeLe1Tolerance = 1e-10;

// One pass of dense size-r DFT kernels along each axis, ascending axis and
// line order so results are reproducible. conjugate=true with 1/r scaling
// gives the analysis direction; conjugate=false unscaled gives synthesis.
void axis_transform(std::vector<Complex>& data, const GridShape& shape, bool conjugate) {
    const int r = shape.r();
    const std::int64_t n_total = shape.size();
    std::vector<Complex> line(static_cast<std::size_t>(r));
    std::vector<Complex> kernel(static_cast<std::size_t>(r) * static_cast<std::size_t>(r));
    for (int s = 0; s < r; ++s)
        for (int x = 0; x < r; ++x) {
            const std::int64_t k = static_cast<std::int64_t>(s) * x;
            kernel[static_cast<std::size_t>(s * r + x)] =
                conjugate ? shape.conj_root(k) : shape.root(k);
        }
    const double scale = conjugate ? 1.0 / static_cast<double>(r) : 1.0;

    std::int64_t stride = 1;
    for (int axis = 0; axis < shape.n(); ++axis) {
        const std::int64_t block = stride * r;
        for (std::int64_t base = 0; base < n_total; base += block) {
            for (std::int64_t off = 0; off < stride; ++off) {
                Complex* p = data.data() + base + off;
                for (int x = 0; x < r; ++x) line[static_cast<std::size_t>(x)] = p[x * stride];
                for (int s = 0; s < r; ++s) {
                    const Complex* krow = kernel.data() + static_cast<std::size_t>(s) * r;
                    Complex acc{0.0, 0.0};
                    for (int x = 0; x < r; ++x) acc += line[static_cast<std::size_t>(x)] * krow[x];
                    p[static_cast<std::int64_t>(s) * stride] = acc * scale;
                }
            }
        }
        stride = block;
    }
}

}  // namespace

double LevelWeights::total() const {
    double acc = 0.0;
    for (double w : weights) acc += w;
    return acc;
}

double LevelWeights::above(int k) const {
    double acc = 0.0;
    for (std::size_t level = 0; level < weights.size(); ++level)
        if (static_cast<int>(level) > k) acc += weights[level];
    return acc;
}

Spectrum forward(const GridFunction& f) {
    const GridShape& shape = f.shape();
    const int r = shape.r();
    const int n = shape.n();
    const std::int64_t n_total = shape.size();
    std::vector<Complex> coeffs(static_cast<std::size_t>(n_total));

    // Walk T in index order keeping <S,T> mod r incrementally: bumping
    // digit i adds S_i, and a wrap r-1 -> 0 also adds S_i mod r.
    std::vector<int> s_digits(static_cast<std::size_t>(n));
    std::vector<int> t_digits(static_cast<std::size_t>(n));
    for (std::int64_t s_index = 0; s_index < n_total; ++s_index) {
        digits_of(s_index, shape, s_digits);
        std::fill(t_digits.begin(), t_digits.end(), 0);
        int dot = 0;
        Complex acc{0.0, 0.0};
        for (std::int64_t t_index = 0; t_index < n_total; ++t_index) {
            acc += f[t_index] * shape.conj_root(dot);
            for (int i = 0; i < n; ++i) {
                dot += s_digits[static_cast<std::size_t>(i)];
                if (dot >= r) dot -= r;
                if (++t_digits[static_cast<std::size_t>(i)] < r) break;
                t_digits[static_cast<std::size_t>(i)] = 0;
            }
        }
        coeffs[static_cast<std::size_t>(s_index)] = acc / static_cast<double>(n_total);
    }
    return Spectrum(shape, std::move(coeffs));
}

Spectrum fast_forward(const GridFunction& f) {
    std::vector<Complex> data(f.values().begin(), f.values().end());
    axis_transform(data, f.shape(), /*conjugate=*/true);
    return Spectrum(f.shape(), std::move(data));
}

GridFunction inverse(const Spectrum& spec) {
    std::vector<Complex> data(spec.coeffs().begin(), spec.coeffs().end());
    axis_transform(data, spec.shape(), /*conjugate=*/false);
    return GridFunction(spec.shape(), std::move(data));
}

LevelWeights level_weights(const Spectrum& spec) {
    const GridShape& shape = spec.shape();
    LevelWeights lw;
    lw.weights.assign(static_cast<std::size_t>(shape.n()) + 1, 0.0);
    for (std::int64_t i = 0; i < shape.size(); ++i)
        lw.weights[static_cast<std::size_t>(support_of_index(i, shape))] += std::norm(spec[i]);
    return lw;
}

GridFunction project(const Spectrum& spec, const std::function<bool(int)>& keep_level) {
    const GridShape& shape = spec.shape();
    std::vector<Complex> masked(spec.coeffs().begin(), spec.coeffs().end());
    std::vector<char> keep(static_cast<std::size_t>(shape.n()) + 1);
    for (int k = 0; k <= shape.n(); ++k) keep[static_cast<std::size_t>(k)] = keep_level(k) ? 1 : 0;
    for (std::int64_t i = 0; i < shape.size(); ++i)
        if (!keep[static_cast<std::size_t>(support_of_index(i, shape))])
            masked[static_cast<std::size_t>(i)] = Complex{0.0, 0.0};
    return inverse(Spectrum(shape, std::move(masked)));
}

CoordinateComponent coordinate_component(const Spectrum& spec, int coord) {
    const GridShape& shape = spec.shape();
    if (coord < 1 || coord > shape.n())
        throw ValidationError("coordinate " + std::to_string(coord) + " outside [1," +
                              std::to_string(shape.n()) + "]");
    const int r = shape.r();
    std::int64_t stride = 1;
    for (int i = 1; i < coord; ++i) stride *= r;

    CoordinateComponent comp;
    comp.coord = coord;
    comp.values.assign(static_cast<std::size_t>(r), Complex{0.0, 0.0});
    for (int j = 1; j < r; ++j) {
        const Complex c = spec[static_cast<std::int64_t>(j) * stride];
        comp.a_sq += std::norm(c);
        for (int x = 0; x < r; ++x)
            comp.values[static_cast<std::size_t>(x)] += c * shape.root(static_cast<std::int64_t>(j) * x);
    }
    return comp;
}

GridFunction restrict(const GridFunction& degree_le1, const std::vector<CoordValue>& fixed) {
    const GridShape& shape = degree_le1.shape();
    const int n = shape.n();
    const int r = shape.r();

    std::vector<int> fixed_value(static_cast<std::size_t>(n), -1);
    for (const CoordValue& cv : fixed) {
        if (cv.coord < 1 || cv.coord > n)
            throw ValidationError("fixed coordinate " + std::to_string(cv.coord) + " outside [1," +
                                  std::to_string(n) + "]");
        if (cv.value < 0 || cv.value >= r)
            throw ValidationError("fixed value " + std::to_string(cv.value) + " outside [0," +
                                  std::to_string(r - 1) + "]");
        if (fixed_value[static_cast<std::size_t>(cv.coord - 1)] != -1)
            throw ValidationError("coordinate " + std::to_string(cv.coord) + " fixed twice");
        fixed_value[static_cast<std::size_t>(cv.coord - 1)] = cv.value;
    }

    const LevelWeights lw = level_weights(fast_forward(degree_le1));
    for (int k = 2; k <= n; ++k)
        if (lw.weights[static_cast<std::size_t>(k)] >= kDegreeLe1Tolerance)
            throw ValidationError("restriction requires a degree-<=1 function; level " +
                                  std::to_string(k) + " carries weight " +
                                  std::to_string(lw.weights[static_cast<std::size_t>(k)]));

    std::vector<int> free_axes;
    for (int i = 0; i < n; ++i)
        if (fixed_value[static_cast<std::size_t>(i)] == -1) free_axes.push_back(i);

    const GridShape residual(r, static_cast<int>(free_axes.size()));
    std::vector<Complex> out(static_cast<std::size_t>(residual.size()));
    std::vector<int> res_digits(free_axes.size());
    std::vector<int> full(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        if (fixed_value[static_cast<std::size_t>(i)] != -1)
            full[static_cast<std::size_t>(i)] = fixed_value[static_cast<std::size_t>(i)];

    for (std::int64_t idx = 0; idx < residual.size(); ++idx) {
        digits_of(idx, residual, res_digits);
        for (std::size_t k = 0; k < free_axes.size(); ++k)
            full[static_cast<std::size_t>(free_axes[k])] = res_digits[k];
        std::int64_t full_index = 0;
        std::int64_t stride = 1;
        for (int i = 0; i < n; ++i) {
            full_index += full[static_cast<std::size_t>(i)] * stride;
            stride *= r;
        }
        out[static_cast<std::size_t>(idx)] = degree_le1[full_index];
    }
    return GridFunction(residual, std::move(out));
}

}  // namespace dictatorlab
