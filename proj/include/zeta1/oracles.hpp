#pragma once

#include <complex>
#include <cstdint>

#include "zeta1/phase.hpp"

namespace zeta1 {

/// Ground-truth computation with an explicit accuracy statement.
/// error_bound is a bound on |reported - true|, never assumed zero.
struct OracleResult {
    double value = 0.0;
    double error_bound = 0.0;
    std::int64_t terms_used = 0;
};

struct ComplexOracleResult {
    std::complex<double> value;
    double error_bound = 0.0;
    std::int64_t terms_used = 0;
};

/// |sum_{n=n_start}^{n_start+L-1} e^{2 pi i f(n)}| by direct summation.
/// Phases are reduced mod 1 in extended precision; compensated summation
/// keeps the accumulated rounding below the reported L * 2^-48.
/// Requires 1 <= L <= 1e8 and a zeta_log or polynomial phase.
OracleResult exp_sum_brute(const PhaseFunction& phase, std::int64_t n_start, std::int64_t L);

/// zeta(1+it) by Euler-Maclaurin with N >= max(2t/pi, 100) (doubled until
/// the standard tail estimate drops below 1e-9) and Bernoulli corrections
/// through B12. Valid for 3 <= |t| <= 1e8.
ComplexOracleResult zeta_direct(double t);
/// Same with a fixed summation cutoff (self-consistency checks).
ComplexOracleResult zeta_direct(double t, std::int64_t N_override);

/// log |Gamma(sigma+it)|: upward recursion to real part >= 8, then the
/// Stirling series with six correction terms. Relative accuracy ~1e-12.
double log_gamma_magnitude(double sigma, double t);

/// |Gamma(sigma+it)| for |sigma| <= 10, 0.5 <= |t| <= 1e4. The value
/// underflows double for |t| beyond ~400; use log_gamma_magnitude there.
OracleResult gamma_direct(double sigma, double t);

/// |chi(1+it)| = sqrt(pi) |Gamma(-it/2)| / |Gamma((1+it)/2)|, evaluated
/// through log_gamma_magnitude. Valid for 1 <= t <= 1e4.
OracleResult chi_direct(double t);

}  // namespace zeta1
