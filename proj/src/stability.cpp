#include "dictatorlab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dictatorlab {

namespace {

std::vector<double> coordinate_weights(const Spectrum& spec) {
    const GridShape& shape = spec.shape();
    std::vector<double> a_sq(static_cast<std::size_t>(shape.n()), 0.0);
    std::int64_t stride = 1;
    for (int i = 0; i < shape.n(); ++i) {
        for (int j = 1; j < shape.r(); ++j)
            a_sq[static_cast<std::size_t>(i)] += std::norm(spec[static_cast<std::int64_t>(j) * stride]);
        stride *= shape.r();
    }
    return a_sq;
}

int argmax_smallest(const std::vector<double>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] > v[best]) best = i;
    return static_cast<int>(best) + 1;
}

double round01_value(Complex z) { return std::norm(z) <= std::norm(z - Complex{1.0, 0.0}) ? 0.0 : 1.0; }

RecoveryResult recover_from_spectrum(const BooleanFunction& f, const Spectrum& spec) {
    const GridShape& shape = f.shape();
    const int r = shape.r();
    const std::vector<double> a_sq = coordinate_weights(spec);
    const int i0 = argmax_smallest(a_sq);

    RecoveryResult rec;
    rec.i0 = i0;
    const CoordinateComponent comp = coordinate_component(spec, i0);
    rec.g.resize(static_cast<std::size_t>(r));
    rec.g1.resize(static_cast<std::size_t>(r));
    for (int x = 0; x < r; ++x) {
        rec.g[static_cast<std::size_t>(x)] = spec[0] + comp.values[static_cast<std::size_t>(x)];
        rec.g1[static_cast<std::size_t>(x)] = round01_value(rec.g[static_cast<std::size_t>(x)]);
    }

    const LevelWeights lw = level_weights(spec);
    rec.residual_g = lw.above(1);
    for (int i = 0; i < shape.n(); ++i)
        if (i + 1 != i0) rec.residual_g += a_sq[static_cast<std::size_t>(i)];

    std::int64_t stride = 1;
    for (int i = 1; i < i0; ++i) stride *= r;

    double resid1 = 0.0;
    std::vector<std::int64_t> ones_per_value(static_cast<std::size_t>(r), 0);
    for (std::int64_t t = 0; t < shape.size(); ++t) {
        const int x = static_cast<int>((t / stride) % r);
        resid1 += std::norm(f[t] - Complex{rec.g1[static_cast<std::size_t>(x)], 0.0});
        if (round01_value(f[t]) == 1.0) ++ones_per_value[static_cast<std::size_t>(x)];
    }
    rec.residual_g1 = resid1 / static_cast<double>(shape.size());

    std::int64_t total_ones = 0;
    int best_value = 0;
    for (int j = 0; j < r; ++j) {
        total_ones += ones_per_value[static_cast<std::size_t>(j)];
        if (ones_per_value[static_cast<std::size_t>(j)] > ones_per_value[static_cast<std::size_t>(best_value)])
            best_value = j;
    }
    rec.dictator = CoordValue{i0, best_value};
    rec.degenerate = (total_ones == 0);
    return rec;
}

}  // namespace

int dominant_coordinate(const Spectrum& spec) {
    if (spec.shape().n() < 1) throw ValidationError("dominant coordinate needs n >= 1");
    return argmax_smallest(coordinate_weights(spec));
}

GridFunction round01(const GridFunction& f) {
    std::vector<Complex> out(f.values().begin(), f.values().end());
    for (Complex& v : out) v = Complex{round01_value(v), 0.0};
    return GridFunction(f.shape(), std::move(out));
}

double claim_lambda() {
    const double s = std::sqrt(0.5);
    return (1.0 - s - 0.25) / (s + 0.25);
}

RecoveryResult approximate_by_dictator(const BooleanFunction& f) {
    return recover_from_spectrum(f, fast_forward(f));
}

std::pair<DictatorSet, StabilityReport> recover_independent_set(const IndependentSet& j) {
    const GridShape& shape = j.shape();
    if (shape.r() < 3)
        throw ValidationError("recovery requires radix >= 3, got " + std::to_string(shape.r()));

    const BooleanFunction f = indicator(j);
    const Spectrum spec = fast_forward(f);
    const LevelWeights lw = level_weights(spec);

    StabilityReport report;
    report.r = shape.r();
    report.n = shape.n();
    report.epsilon = epsilon_of(j);
    report.tail_weight = lw.above(1);
    report.tail_bound = 2.0 * report.epsilon.value() / shape.r();
    report.level1_weight = lw.weights[1];
    report.a_sq_sorted = coordinate_weights(spec);
    std::sort(report.a_sq_sorted.begin(), report.a_sq_sorted.end(), std::greater<double>());
    report.recovery = recover_from_spectrum(f, spec);
    report.theorem_bound = 40.0 * report.epsilon.value() / shape.r();

    DictatorSet recovered(shape, report.recovery.dictator.coord, report.recovery.dictator.value);
    report.symdiff = sym_diff_rational(j, recovered);

    report.hypotheses.r_ge_20 = shape.r() >= 20;
    // eps < 1e-9 exactly: num/den < 1/1e9 iff num * 1e9 < den.
    report.hypotheses.eps_lt_1e_minus_9 = report.epsilon.num * 1'000'000'000 < report.epsilon.den;
    report.hypotheses.level1_le_inv_r = report.level1_weight <= 1.0 / shape.r();
    report.hypotheses.eps_lt_inv_1e8_r = report.epsilon.value() < 1.0 / (1e8 * shape.r());

    const auto oracle = nearest_dictator_oracle(j);
    report.oracle_agrees = oracle.first.coord() == recovered.coord() &&
                           oracle.first.value() == recovered.value();

    return {std::move(recovered), std::move(report)};
}

std::pair<DictatorSet, Rational> nearest_dictator_oracle(const IndependentSet& j) {
    const GridShape& shape = j.shape();
    if (shape.n() < 1) throw ValidationError("oracle needs n >= 1");
    std::int64_t best_count = -1;
    int best_coord = 1;
    int best_value = 0;
    for (int coord = 1; coord <= shape.n(); ++coord) {
        for (int value = 0; value < shape.r(); ++value) {
            const std::int64_t count = sym_diff_count(j, DictatorSet(shape, coord, value));
            if (best_count < 0 || count < best_count) {
                best_count = count;
                best_coord = coord;
                best_value = value;
            }
        }
    }
    return {DictatorSet(shape, best_coord, best_value), Rational(best_count, shape.size())};
}

CorollaryCheck corollary_check(const IndependentSet& j) {
    const GridShape& shape = j.shape();
    CorollaryCheck check;
    check.threshold =
        std::min(1e-9, std::pow(1.0 - 1.0 / shape.r(), shape.n() - 1)) / 40.0;
    check.epsilon_below_threshold = epsilon_of(j).value() < check.threshold;

    if (j.size() == 0) {
        check.contained = true;
        check.witness = CoordValue{1, 0};
        return check;
    }
    std::int64_t stride = 1;
    for (int coord = 1; coord <= shape.n(); ++coord) {
        const int first = static_cast<int>((j.members().front() / stride) % shape.r());
        bool all_equal = true;
        for (std::int64_t m : j.members()) {
            if (static_cast<int>((m / stride) % shape.r()) != first) {
                all_equal = false;
                break;
            }
        }
        if (all_equal) {
            check.contained = true;
            check.witness = CoordValue{coord, first};
            return check;
        }
        stride *= shape.r();
    }
    return check;
}

ClaimDiagnostics claim_diagnostics(const BooleanFunction& f) {
    const Spectrum spec = fast_forward(f);
    std::vector<double> a_sq = coordinate_weights(spec);
    std::sort(a_sq.begin(), a_sq.end(), std::greater<double>());

    ClaimDiagnostics diag;
    diag.epsilon = level_weights(spec).above(1);
    diag.a2_sq = a_sq.size() >= 2 ? a_sq[1] : 0.0;
    diag.claim1_threshold = 2000.0 * diag.epsilon;
    for (std::size_t i = 1; i < a_sq.size(); ++i) diag.tail_sum_from_2 += a_sq[i];
    diag.claim2_threshold = 4.0 * diag.epsilon;
    diag.lambda = claim_lambda();
    diag.lambda_sq = diag.lambda * diag.lambda;
    return diag;
}

}  // namespace dictatorlab
