#pragma once

#include <cstdint>
#include <vector>

#include "zeta1/pipeline.hpp"

namespace zeta1 {

struct ParamRange {
    double lo = 0.0;
    double hi = 0.0;
    bool contains(double x) const { return x >= lo && x <= hi; }
};

/// Search region for the stitched-constant minimization. t0 is searched in
/// log space; j over an explicit integer set.
struct SearchSpec {
    ParamRange epsilon{0.05, 1.0};
    std::vector<int> j_values{40, 50, 60, 70, 80, 100};
    ParamRange eta3{0.2, 4.0};
    ParamRange eta4{0.05, 2.0};
    ParamRange eta5{0.5, 8.0};
    ParamRange t0{1e55, 1e65};
    int budget = 10000;
    std::uint64_t seed = 0;

    /// Region centered on the default parameter set.
    static SearchSpec around_defaults();
    bool is_valid() const;
};

struct TracePoint {
    PipelineParams params;
    double value = 0.0;
};

struct OptimizeResult {
    PipelineParams best_params;
    double best_value = 0.0;
    std::vector<TracePoint> trace;
    bool budget_exhausted = false;
};

/// Objective for the search: stitch_constant(params), or +infinity when the
/// params violate the pipeline invariants.
double evaluate_objective(const PipelineParams& params);

/// Coarse (epsilon, j) grid followed by coordinate descent on
/// (epsilon, eta3, eta4, eta5, log t0) with a j sweep. Deterministic for a
/// fixed seed; the trace records every evaluation in order.
OptimizeResult optimize(const SearchSpec& spec);

}  // namespace zeta1
