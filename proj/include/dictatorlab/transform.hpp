#pragma once

// Fourier transform on Z_r^n with respect to the characters
// u_S(T) = exp(2*pi*i*<S,T>/r), plus the spectral bookkeeping the stability
// analysis needs: weight per level |S|, projections onto level sets, the
// per-coordinate degree-1 components g_i, and restriction of a degree-<=1
// function to a sub-grid.
//
// forward() is the direct reference evaluation of the defining sum; it is
// kept naive on purpose so fast_forward() (axis-wise, O(r^n * n * r)) can be
// checked against it. Both normalize so that coefficient 0 is the mean.

#include <functional>
#include <vector>

#include "dictatorlab/grid.hpp"

namespace dictatorlab {

/// weights[k] = sum of |fhat(S)|^2 over |S| = k, for k = 0..n.
struct LevelWeights {
    std::vector<double> weights;

    double total() const;
    /// Sum over levels strictly above k.
    double above(int k) const;
};

/// The degree-1 component along one coordinate: g_i(x) = sum_{j=1}^{r-1}
/// fhat(j*e_i) * w^(j x) as a length-r table, and its squared 2-norm a_i^2.
struct CoordinateComponent {
    int coord = 1;                 // 1-based
    std::vector<Complex> values;   // g_i(x) for x = 0..r-1
    double a_sq = 0.0;             // sum_j |fhat(j*e_i)|^2
};

/// Direct transform: coeffs[S] = (1/r^n) sum_T f(T) conj(u_S(T)).
Spectrum forward(const GridFunction& f);

/// Axis-wise transform; same contract as forward().
Spectrum fast_forward(const GridFunction& f);

/// Synthesis: f(T) = sum_S coeffs[S] u_S(T) (computed axis-wise).
GridFunction inverse(const Spectrum& spec);

LevelWeights level_weights(const Spectrum& spec);

/// Synthesize only the levels selected by keep_level(|S|).
GridFunction project(const Spectrum& spec, const std::function<bool(int)>& keep_level);

/// g_i and a_i^2 for the given 1-based coordinate.
CoordinateComponent coordinate_component(const Spectrum& spec, int coord);

/// Restrict a degree-<=1 function by fixing the given coordinates, yielding
/// a function on Z_r^(n-|fixed|) over the remaining coordinates in their
/// original order. Rejects inputs with level weight >= 1e-10 above level 1.
GridFunction restrict(const GridFunction& degree_le1, const std::vector<CoordValue>& fixed);

}  // namespace dictatorlab
