#include "dictatorlab/tail_bounds.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dictatorlab/errors.hpp"

namespace dictatorlab {

double bennett_h(double u) {
    if (!(u >= 0.0)) throw ValidationError("h(u) requires u >= 0, got " + std::to_string(u));
    return (1.0 + u) * std::log1p(u) - u;
}

double bennett_tail(const TailParams& params) {
    if (!(params.sigma_sq > 0.0) || !(params.c > 0.0) || !(params.t > 0.0))
        throw ValidationError("tail parameters must be strictly positive");
    const double u = params.t * params.c / params.sigma_sq;
    const double exponent = -(params.sigma_sq / (params.c * params.c)) * bennett_h(u);
    return std::exp(exponent);
}

double lemma33_tail(double eps_prime, double c, double t) {
    if (!(eps_prime > 0.0) || !(c > 0.0))
        throw ValidationError("tail parameters must be strictly positive");
    const double t_min = std::max(1.0 / 6.0, 1e4 * std::numbers::e * eps_prime / c);
    if (!(t >= t_min))
        throw ValidationError("threshold t = " + std::to_string(t) +
                              " below the bound's regime t >= " + std::to_string(t_min));
    const double exponent = -(t / c) * std::log(1e-4 * t * c / (std::numbers::e * eps_prime));
    return std::exp(exponent);
}

}  // namespace dictatorlab
