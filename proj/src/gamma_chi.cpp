#include "zeta1/gamma_chi.hpp"

#include <cmath>
#include <stdexcept>

namespace zeta1 {

namespace {

void require_positive_t(double t) {
    if (!(t > 0.0)) throw std::domain_error("gamma_chi: t must be positive");
}

double envelope_prefactor(double sigma, double at) {
    return std::sqrt(kTwoPi) * std::exp(-kPi * at / 2.0) * std::pow(at, sigma - 0.5);
}

}  // namespace

double xi1(double sigma, double t) {
    if (!(sigma > 0.0)) throw std::domain_error("xi1: sigma must be positive");
    require_positive_t(t);
    const double t2 = t * t;
    return std::exp(-sigma / (12.0 * t2) - kPi / (24.0 * t) - sigma * sigma * sigma / (3.0 * t2));
}

double xi2(double sigma, double t) {
    if (!(sigma > 0.0)) throw std::domain_error("xi2: sigma must be positive");
    require_positive_t(t);
    const double t2 = t * t;
    return std::exp((sigma - 0.5) * sigma * sigma / (2.0 * t2) + sigma / (12.0 * t2)
                    + kPi / (24.0 * t));
}

GammaEnvelope gamma_magnitude_envelope(double sigma, double t) {
    if (!(sigma > 0.0))
        throw std::domain_error("gamma_magnitude_envelope: sigma must be positive");
    if (t == 0.0 || !std::isfinite(t))
        throw std::domain_error("gamma_magnitude_envelope: t must be finite and nonzero");
    const double at = std::fabs(t);
    const double pre = envelope_prefactor(sigma, at);
    GammaEnvelope env;
    env.sigma = sigma;
    env.t = t;
    env.lower = pre * xi1(sigma, at) * (1.0 - kUpperInflation);
    env.upper = pre * xi2(sigma, at) * (1.0 + kUpperInflation);
    return env;
}

GammaEnvelope shifted_gamma_envelope(double sigma, double t) {
    if (!(sigma <= 0.0))
        throw std::domain_error("shifted_gamma_envelope: requires sigma <= 0");
    require_positive_t(t);
    int n = 1;
    while (sigma + n <= 0.0) ++n;
    double xi3 = 1.0;
    for (int l = 0; l < n; ++l) {
        const double factor = -sigma - l + t;
        if (!(factor > 0.0))
            throw std::domain_error("shifted_gamma_envelope: t too small for xi3");
        xi3 /= factor;
    }
    const GammaEnvelope base = gamma_magnitude_envelope(sigma + n, t);
    GammaEnvelope env;
    env.sigma = sigma;
    env.t = t;
    env.shift = n;
    env.lower = xi3 * base.lower;
    env.upper = base.upper / std::pow(t, n);
    return env;
}

double g_chi(double t) {
    require_positive_t(t);
    return std::sqrt(kTwoPi) * std::exp(5.0 / (3.0 * t * t) + kPi / (6.0 * t));
}

UpperValue chi_one_line_bound(double t) {
    require_positive_t(t);
    return UpperValue::closed_form(g_chi(t) / std::sqrt(t));
}

}  // namespace zeta1
