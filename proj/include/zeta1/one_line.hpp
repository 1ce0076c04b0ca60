#pragma once

#include <cstdint>

#include "zeta1/upper_value.hpp"

namespace zeta1 {

/// Exact floor of sqrt(t/2pi), verified by integer squaring.
/// Valid for t up to ~1e30 (result must fit the int64 exactness range).
std::int64_t sqrt_t_over_2pi_floor(double t);

/// Remainder absorbing the Riemann-Siegel correction pieces:
/// R(t) = t^{-1/2} (sqrt(pi/2) + g/2)
///      + t^{-1}   (9 sqrt(pi/2) + g/sqrt(pi(3-2 log 2)))
///      + t^{-3/2} (968 pi^{3/2} + 242 pi g)/700.
UpperValue rs_remainder(double t);

/// sum_{n<=N} 1/n <= log N + gamma + 1/N.
UpperValue harmonic_sum_bound(std::int64_t N);

/// Partial summation: removing a decreasing weight b_{N+1} = 1/(N+1) costs
/// a factor 1/(N+1) against the max prefix sum.
UpperValue partial_summation_reduce(const UpperValue& max_partial, std::int64_t N);

/// |zeta(1+it)| <= main + (g(t)/sqrt(t)) conjugate + remainder with
/// n1 = floor(sqrt(t/2pi)); both partial sums bounded trivially here
/// (harmonic for the main sum, n1 for the conjugate sum).
struct OneLineDecomposition {
    double t = 0.0;
    std::int64_t n1 = 0;
    UpperValue main_sum_bound;
    UpperValue conjugate_sum_bound;
    UpperValue remainder;
    double total() const;
};

OneLineDecomposition one_line_decomposition(double t);

/// The triangle-inequality bound, valid for t > 2pi:
/// |zeta(1+it)| <= 1/2 log t + gamma + sqrt(2pi)/(sqrt(t)-sqrt(2pi))
///               - 1/2 log(2pi) + exp(5/3t^2 + pi/6t) + R(t).
/// Breakdown: leading 1/2, additive part anchored at the query t
/// (every additive term is decreasing in t, so the breakdown is a valid
/// bound for all larger t as well).
BoundBreakdown triangle_one_line_bound(double t);

}  // namespace zeta1
