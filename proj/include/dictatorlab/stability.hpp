#pragma once

// Recovery of a dictator set from a near-maximum independent set, and the
// diagnostics that certify it. The pipeline for an independent set J:
//
//   1. transform the indicator f of J;
//   2. find the coordinate i0 whose degree-1 weight a_i^2 dominates;
//   3. form g = fhat(0) + g_{i0}, a function of x_{i0} alone;
//   4. round g to {0,1} pointwise to get g1;
//   5. return the dictator set on i0 whose value has maximum overlap with J.
//
// Residuals are reported both for g (by Parseval: the weight the projection
// discards) and for the rounded g1 (directly on the grid); rounding at most
// quadruples the squared residual because f itself is Boolean.

#include <utility>
#include <vector>

#include "dictatorlab/product_graph.hpp"
#include "dictatorlab/transform.hpp"

namespace dictatorlab {

struct RecoveryResult {
    int i0 = 1;                      // dominant coordinate, 1-based
    std::vector<Complex> g;          // g(x) for x = 0..r-1
    std::vector<double> g1;          // pointwise rounding of g, exactly 0 or 1
    CoordValue dictator;             // returned maximum independent set
    double residual_g = 0.0;         // ||f - g||_2^2
    double residual_g1 = 0.0;        // ||f - g1||_2^2
    bool degenerate = false;         // set has no elements; dictator is the tie-break
};

struct HypothesisFlags {
    bool r_ge_20 = false;
    bool eps_lt_1e_minus_9 = false;
    bool level1_le_inv_r = false;
    bool eps_lt_inv_1e8_r = false;
};

/// Everything measurable about one recovery run. Flags are reported, never
/// enforced: desk-scale grids cannot reach the regime they describe.
struct StabilityReport {
    int r = 0;
    int n = 0;
    Rational epsilon;                // 1 - r|J|/r^n, exact
    double tail_weight = 0.0;        // weight above level 1
    double tail_bound = 0.0;         // 2*eps/r
    double level1_weight = 0.0;
    std::vector<double> a_sq_sorted; // descending per-coordinate weights
    RecoveryResult recovery;
    Rational symdiff;                // |J diff recovered|/r^n, exact
    double theorem_bound = 0.0;      // 40*eps/r
    HypothesisFlags hypotheses;
    bool oracle_agrees = false;
};

struct CorollaryCheck {
    bool contained = false;          // is J a subset of some dictator set?
    CoordValue witness;              // containing dictator when contained
    bool epsilon_below_threshold = false;
    double threshold = 0.0;          // min(1e-9, (1-1/r)^(n-1))/40
};

/// Constants from the two-sided separation argument bounding a_2^2; kept as
/// data so reports can surface them next to the measured weights.
struct ClaimDiagnostics {
    double epsilon = 0.0;            // measured weight above level 1
    double a2_sq = 0.0;              // second-largest coordinate weight
    double claim1_threshold = 0.0;   // 2000 * epsilon
    double tail_sum_from_2 = 0.0;    // all but the largest coordinate weight
    double claim2_threshold = 0.0;   // 4 * epsilon
    double lambda = 0.0;
    double lambda_sq = 0.0;
};

/// argmax_i of a_i^2 = sum_{j!=0} |coeffs[j e_i]|^2; ties go to the
/// smallest coordinate.
int dominant_coordinate(const Spectrum& spec);

/// Pointwise rounding to the nearest of {0,1}; ties round to 0.
GridFunction round01(const GridFunction& f);

double claim_lambda();

RecoveryResult approximate_by_dictator(const BooleanFunction& f);

/// Full pipeline on an independent set; requires r >= 3.
std::pair<DictatorSet, StabilityReport> recover_independent_set(const IndependentSet& j);

/// Ground truth by exhaustive scan of all r*n dictator sets; ties go to the
/// lexicographically smallest (coord, value).
std::pair<DictatorSet, Rational> nearest_dictator_oracle(const IndependentSet& j);

CorollaryCheck corollary_check(const IndependentSet& j);

ClaimDiagnostics claim_diagnostics(const BooleanFunction& f);

}  // namespace dictatorlab
