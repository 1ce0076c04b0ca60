#include "zeta1/oracles.hpp"

#include <cmath>
#include <stdexcept>

#include <quadmath.h>

#include "zeta1/upper_value.hpp"

namespace zeta1 {

namespace {

struct KahanSum {
    double s = 0.0;
    double c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

// B_{2k}/(2k)! for k = 1..6, from the exact rationals
// B2..B12 = 1/6, -1/30, 1/42, -1/30, 5/66, -691/2730.
constexpr double kBernoulliOverFactorial[6] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
};

// B_{2k}/((2k)(2k-1)) for k = 1..6 (Stirling series).
constexpr double kBernoulliStirling[6] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
};

constexpr int kEulerMaclaurinK = 6;

// Fractional part of t*log(n)/(2pi) in [0,1), quad precision.
double phase_frac_of_power(double t, std::int64_t n) {
    __float128 x = (__float128)t * logq((__float128)n) / (2 * M_PIq);
    __float128 f = x - floorq(x);
    if (f < 0) f += 1;
    if (f >= 1) f -= 1;
    return static_cast<double>(f);
}

// n^{-it} = e^{-i t log n}
std::complex<double> unit_power(double t, std::int64_t n) {
    const double angle = kTwoPi * phase_frac_of_power(t, n);
    return {std::cos(angle), -std::sin(angle)};
}

// Tail of the Euler-Maclaurin expansion after K correction terms:
// |R_K| <= |T_{K+1}| |s+2K+1|/(sigma+2K+1), with |B_{2K+2}|/(2K+2)!
// bounded by 4/(2pi)^{2K+2}.
double em_tail_estimate(std::complex<double> s, double N) {
    const int K = kEulerMaclaurinK;
    double log_prod = 0.0;
    for (int j = 0; j <= 2 * K; ++j) log_prod += 0.5 * std::log(std::norm(s + double(j)));
    const double log_tail = std::log(4.0) - (2 * K + 2) * std::log(kTwoPi) + log_prod
                          - (s.real() + 2 * K + 1) * std::log(N)
                          + std::log(std::abs(s + double(2 * K + 1)) / (s.real() + 2 * K + 1));
    return std::exp(log_tail);
}

ComplexOracleResult zeta_direct_impl(double t, std::int64_t N_fixed) {
    const double at = std::fabs(t);
    if (!(at >= 3.0 && at <= 1e8))
        throw std::domain_error("zeta_direct: requires 3 <= |t| <= 1e8");
    const std::complex<double> s(1.0, t);

    std::int64_t N;
    if (N_fixed > 0) {
        N = N_fixed;
    } else {
        N = std::max<std::int64_t>(static_cast<std::int64_t>(std::ceil(2.0 * at / kPi)), 100);
        while (em_tail_estimate(s, static_cast<double>(N)) > 1e-9) {
            if (N > (std::int64_t(1) << 31))
                throw std::runtime_error("zeta_direct: tail estimate failed to converge");
            N *= 2;
        }
    }
    const double Nd = static_cast<double>(N);

    KahanSum re, im;
    for (std::int64_t n = 1; n < N; ++n) {
        const std::complex<double> p = unit_power(t, n);
        const double inv = 1.0 / static_cast<double>(n);
        re.add(p.real() * inv);
        im.add(p.imag() * inv);
    }
    std::complex<double> sum(re.s, im.s);

    const std::complex<double> NmitT = unit_power(t, N);  // N^{-it}
    sum += NmitT / (s - 1.0);                             // N^{1-s}/(s-1)
    sum += 0.5 * NmitT / Nd;                              // N^{-s}/2

    // sum_{k=1}^{K} B_{2k}/(2k)! (s)(s+1)...(s+2k-2) N^{-s-2k+1},
    // with N^{-s-2k+1} = N^{-it} N^{-2k}.
    std::complex<double> poch = s;
    double Npow = 1.0;
    for (int k = 1; k <= kEulerMaclaurinK; ++k) {
        Npow /= Nd * Nd;
        sum += kBernoulliOverFactorial[k - 1] * poch * NmitT * Npow;
        if (k < kEulerMaclaurinK) poch *= (s + double(2 * k - 1)) * (s + double(2 * k));
    }

    ComplexOracleResult r;
    r.value = sum;
    r.error_bound = em_tail_estimate(s, Nd) + 1e-13 * (1.0 + std::log(Nd));
    r.terms_used = N;
    return r;
}

}  // namespace

OracleResult exp_sum_brute(const PhaseFunction& phase, std::int64_t n_start, std::int64_t L) {
    if (L < 1) throw std::domain_error("exp_sum_brute: L must be >= 1");
    if (L > 100000000) throw std::domain_error("exp_sum_brute: L exceeds the desk-scale cap");
    if (!phase.supports_fractional_part())
        throw std::domain_error("exp_sum_brute: phase does not provide exact reduction mod 1");
    KahanSum re, im;
    for (std::int64_t n = n_start; n < n_start + L; ++n) {
        const double angle = kTwoPi * phase.fractional_part(n);
        re.add(std::cos(angle));
        im.add(std::sin(angle));
    }
    OracleResult r;
    r.value = std::hypot(re.s, im.s);
    r.error_bound = static_cast<double>(L) * std::pow(2.0, -48);
    r.terms_used = L;
    return r;
}

ComplexOracleResult zeta_direct(double t) { return zeta_direct_impl(t, 0); }

ComplexOracleResult zeta_direct(double t, std::int64_t N_override) {
    if (N_override < 100) throw std::domain_error("zeta_direct: N_override too small");
    return zeta_direct_impl(t, N_override);
}

double log_gamma_magnitude(double sigma, double t) {
    const double at = std::fabs(t);
    if (!(at >= 0.5 && at <= 1e4))
        throw std::domain_error("log_gamma_magnitude: requires 0.5 <= |t| <= 1e4");
    if (std::fabs(sigma) > 10.0)
        throw std::domain_error("log_gamma_magnitude: requires |sigma| <= 10");
    const int m = sigma >= 8.0 ? 0 : static_cast<int>(std::ceil(8.0 - sigma));
    const std::complex<double> z(sigma + m, at);
    std::complex<double> lnG = (z - 0.5) * std::log(z) - z + 0.5 * std::log(kTwoPi);
    std::complex<double> zpow = z;
    const std::complex<double> z2 = z * z;
    for (int k = 1; k <= 6; ++k) {
        lnG += kBernoulliStirling[k - 1] / zpow;
        zpow *= z2;
    }
    double logmag = lnG.real();
    for (int l = 0; l < m; ++l)
        logmag -= 0.5 * std::log((sigma + l) * (sigma + l) + t * t);
    return logmag;
}

OracleResult gamma_direct(double sigma, double t) {
    const double logmag = log_gamma_magnitude(sigma, t);
    const double at = std::fabs(t);
    const int m = sigma >= 8.0 ? 0 : static_cast<int>(std::ceil(8.0 - sigma));
    // Binet remainder after six terms: |B14|/(14*13) sec(arg(z)/2)^14 / |z|^13.
    const std::complex<double> z(sigma + m, at);
    const double sec_half = 1.0 / std::cos(0.5 * std::arg(z));
    const double rel_rem = (7.0 / 6.0) / 182.0 * std::pow(sec_half, 14) / std::pow(std::abs(z), 13);
    OracleResult r;
    r.value = std::exp(logmag);
    r.error_bound = r.value * (rel_rem + 1e-13 * (m + 3));
    r.terms_used = 6 + m;
    return r;
}

OracleResult chi_direct(double t) {
    if (!(t >= 1.0 && t <= 1e4))
        throw std::domain_error("chi_direct: requires 1 <= t <= 1e4");
    const double log_chi = 0.5 * std::log(kPi)
                         + log_gamma_magnitude(0.0, t / 2.0)
                         - log_gamma_magnitude(0.5, t / 2.0);
    OracleResult r;
    r.value = std::exp(log_chi);
    r.error_bound = r.value * 1e-10;
    r.terms_used = 2;
    return r;
}

}  // namespace zeta1
