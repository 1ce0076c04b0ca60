#pragma once

#include <cstdint>
#include <random>

#include "zeta1/derivative_tests.hpp"
#include "zeta1/oracles.hpp"
#include "zeta1/phase.hpp"

namespace zeta1 {

/// A randomized exponential-sum instance satisfying the hypotheses of the
/// order-k derivative test.
struct LemmaInstance {
    int order = 1;
    PhaseFunction phase = PhaseFunction::polynomial({0.0});
    std::int64_t n_start = 1;
    std::int64_t length = 1;
    double U = 0.0;          // order 1 only
    DerivEnvelope env;       // orders >= 2 (order 2 uses V = W/lambda)
};

/// Outcome of bound vs brute force on one instance.
struct LemmaOutcome {
    double bound = 0.0;      // order 2: the corrected Cheng-Graham variant
    double bound_alt = 0.0;  // order 2: the Platt-Trudgian variant
    double brute = 0.0;
    double brute_error = 0.0;
    bool pass = false;       // brute + error <= bound (and <= bound_alt for order 2)
    double ratio = 0.0;      // bound / max(brute + error, tiny)
};

/// Draw an instance for the given order; phases alternate between zeta_log
/// windows (t up to 1e8) and polynomials with controlled k-th derivative.
/// Lengths are log-uniform in [1, max_length] (>= 2 where lambda > 1 is
/// required).
LemmaInstance random_lemma_instance(int order, std::mt19937_64& rng, std::int64_t max_length);

LemmaOutcome check_lemma_instance(const LemmaInstance& inst, const EtaVector& eta,
                                  Beta4Mode mode);

}  // namespace zeta1
