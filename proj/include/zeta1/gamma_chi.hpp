#pragma once

#include "zeta1/upper_value.hpp"

namespace zeta1 {

/// xi1(sigma,t) = exp(-sigma/12t^2 - pi/24t - sigma^3/3t^2)
double xi1(double sigma, double t);
/// xi2(sigma,t) = exp((sigma-1/2) sigma^2/2t^2 + sigma/12t^2 + pi/24t)
double xi2(double sigma, double t);

/// lower <= |Gamma(sigma+it)| <= upper on a vertical line.
struct GammaEnvelope {
    double sigma = 0.0;
    double t = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    int shift = 0;  // recursion depth used by the shifted envelope
};

/// sqrt(2pi) e^{-pi|t|/2} xi_{1,2}(sigma,|t|) |t|^{sigma-1/2}, lower deflated
/// and upper inflated. Requires sigma > 0 and t != 0.
GammaEnvelope gamma_magnitude_envelope(double sigma, double t);

/// Envelope for sigma <= 0 via Gamma(z) = Gamma(z+n)/(z...(z+n-1)) with n
/// minimal such that sigma + n > 0. Requires t > -sigma - n + 1.
GammaEnvelope shifted_gamma_envelope(double sigma, double t);

/// g(t) = sqrt(2pi) exp(5/3t^2 + pi/6t)
double g_chi(double t);

/// |chi(1+it)| <= g(t)/sqrt(t)
UpperValue chi_one_line_bound(double t);

}  // namespace zeta1
