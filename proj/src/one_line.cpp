#include "zeta1/one_line.hpp"

#include <cmath>
#include <stdexcept>

#include <quadmath.h>

#include "zeta1/gamma_chi.hpp"

namespace zeta1 {

std::int64_t sqrt_t_over_2pi_floor(double t) {
    if (!(t > 0.0)) throw std::domain_error("sqrt_t_over_2pi_floor: t must be positive");
    if (t > 1e30) throw std::domain_error("sqrt_t_over_2pi_floor: t beyond int64 exactness range");
    const __float128 q = (__float128)t / (2 * M_PIq);
    std::int64_t n = static_cast<std::int64_t>(floorq(sqrtq(q)));
    while (n > 0 && (__float128)n * (__float128)n > q) --n;
    while ((__float128)(n + 1) * (__float128)(n + 1) <= q) ++n;
    return n;
}

UpperValue rs_remainder(double t) {
    if (!(t > 0.0)) throw std::domain_error("rs_remainder: t must be positive");
    const double g = g_chi(t);
    const double sqrt_pi_half = std::sqrt(kPi / 2.0);
    const double r = (sqrt_pi_half + g / 2.0) / std::sqrt(t)
                   + (9.0 * sqrt_pi_half + g / std::sqrt(kPi * (3.0 - 2.0 * std::log(2.0)))) / t
                   + (968.0 * std::pow(kPi, 1.5) + 242.0 * kPi * g) / 700.0 / std::pow(t, 1.5);
    return UpperValue::closed_form(r);
}

UpperValue harmonic_sum_bound(std::int64_t N) {
    if (N < 1) throw std::domain_error("harmonic_sum_bound: N must be >= 1");
    const double Nd = static_cast<double>(N);
    return UpperValue::closed_form(std::log(Nd) + kEulerGamma + 1.0 / Nd);
}

UpperValue partial_summation_reduce(const UpperValue& max_partial, std::int64_t N) {
    if (N < 0) throw std::domain_error("partial_summation_reduce: N must be >= 0");
    return max_partial.scaled(1.0 / static_cast<double>(N + 1));
}

double OneLineDecomposition::total() const {
    return main_sum_bound.value()
         + g_chi(t) / std::sqrt(t) * conjugate_sum_bound.value()
         + remainder.value();
}

OneLineDecomposition one_line_decomposition(double t) {
    if (!(t > kTwoPi)) throw std::domain_error("one_line_decomposition: requires t > 2pi");
    OneLineDecomposition d;
    d.t = t;
    d.n1 = sqrt_t_over_2pi_floor(t);
    d.main_sum_bound = harmonic_sum_bound(d.n1);
    d.conjugate_sum_bound = UpperValue::exact(static_cast<double>(d.n1));
    d.remainder = rs_remainder(t);
    return d;
}

BoundBreakdown triangle_one_line_bound(double t) {
    if (!(t > kTwoPi)) throw std::domain_error("triangle_one_line_bound: requires t > 2pi");
    const double sqrt_two_pi = std::sqrt(kTwoPi);
    const double additive = kEulerGamma
                          + sqrt_two_pi / (std::sqrt(t) - sqrt_two_pi)
                          - 0.5 * std::log(kTwoPi)
                          + std::exp(5.0 / (3.0 * t * t) + kPi / (6.0 * t))
                          + rs_remainder(t).value();
    BoundBreakdown b;
    b.leading_coeff = 0.5;
    b.additive_constant = additive * (1.0 + kUpperInflation);
    b.valid_from = t;
    return b;
}

}  // namespace zeta1
