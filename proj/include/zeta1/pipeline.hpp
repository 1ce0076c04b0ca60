#pragma once

#include <cstdint>
#include <vector>

#include "zeta1/derivative_tests.hpp"
#include "zeta1/upper_value.hpp"

namespace zeta1 {

/// Configuration of the dyadic machinery. Invariants: j >= 2,
/// epsilon > 2/(j t0^{1/5}), t0 > (2/j)^5, all etas positive.
struct PipelineParams {
    double epsilon = 0.32;
    int j = 60;
    EtaVector eta = default_eta();
    double t0 = 8e60;
    Beta4Mode beta4_mode = Beta4Mode::proof_18_10;

    static PipelineParams defaults() { return PipelineParams{}; }
    bool is_valid() const;
    void validate() const;
};

/// Upper bound on the number of dyadic pieces:
/// floor((0.3 log t - log(sqrt(2pi) j)) / log(1+eps)) + 1, clamped to >= 1.
int dyadic_count_bound(const PipelineParams& params, double t);

/// One block [first_n, last_n] of the dyadic split, with its order-5
/// envelope taken over [first_n, floor((1+eps)^{r+1} j t^{1/5})].
struct DyadicBlock {
    int r = 0;
    std::int64_t first_n = 0;
    std::int64_t last_n = 0;        // clamped to n1 for the final block
    std::int64_t length_nominal = 0;
    double W = 0.0;
    double lambda = 1.0;
    bool clamped = false;
};

/// Blocks tiling [ceil(j t^{1/5}), floor(sqrt(t/2pi))] exactly
/// (contiguous, no overlap; delta_r handles integral right edges).
/// Valid for t small enough that the endpoints are int64-exact (~1e30).
std::vector<DyadicBlock> dyadic_blocks(const PipelineParams& params, double t);

/// Same construction driven by an explicit base scale u = t^{1/5} and top
/// end n_max; lets callers pin u exactly when probing integrality edges.
std::vector<DyadicBlock> dyadic_blocks_from_scale(const PipelineParams& params, double u,
                                                  std::int64_t n_max);

/// Bound on |sum over block r of n^{-1-it}|: partial summation against the
/// fifth-derivative bound at Delta = L_r (the bound is nondecreasing in
/// Delta), divided by the block's first index.
UpperValue block_bound(const PipelineParams& params, double t, int r);

/// The A-coefficients of the closed aggregate
/// A1 t^{-3/10} + A2 t^{-9/40} + A3 t^{-1/5} + A4 t^{-1/10} + A5,
/// with order-5 coefficients at the envelope W = pi j^5/12,
/// lambda = (1+eps)^5, and C1, C2 evaluated at the given t.
struct AggregateCoeffs {
    UpperValue A1, A2, A3, A4, A5;
    double C1 = 0.0;
    double C2 = 0.0;
    double alpha5 = 0.0;
};

AggregateCoeffs aggregate_tail_bound(const PipelineParams& params, double t);

/// F(t) = gamma + log j + 1/(j t^{1/5} - 2) + sum A_i t^{-p_i} + A5
///        + g(t)/sqrt(2pi) + R(t); the dyadic bound minus (1/5) log t.
UpperValue F_function(const PipelineParams& params, double t);

/// Power-form majorant of the dyadic bound anchored at t0 (coefficients
/// frozen at their t0 envelopes; exact at the anchor, valid beyond it).
BoundBreakdown pipeline_breakdown(const PipelineParams& params);

/// Smallest constant c3 (inflated, rounded up at 4 decimals) such that
/// (1/5) log t + c3 holds for all t >= 3:
/// max(F(t0), 1.93 + 0.3 log t0).
double stitch_constant(const PipelineParams& params);

enum class BoundChoice { first_log, second_half_log, third_fifth_log };

inline constexpr double kHalfLogConstant = 1.93;   // valid from t = 47
inline constexpr double kHalfLogValidFrom = 47.0;
inline constexpr double kLogValidFrom = 3.0;

struct OneLineBoundResult {
    UpperValue value;
    BoundChoice which = BoundChoice::first_log;
    BoundBreakdown breakdown;
    double bound_log = 0.0;
    double bound_half_log = 0.0;   // only meaningful when half_log_valid
    double bound_fifth_log = 0.0;
    bool half_log_valid = false;
};

/// min(log t, 1/2 log t + 1.93 [t >= 47], 1/5 log t + stitch_constant),
/// ties broken toward the earlier bound. Requires t >= 3.
OneLineBoundResult zeta_one_line_bound(double t, const PipelineParams& params);

}  // namespace zeta1
