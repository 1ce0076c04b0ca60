#pragma once

// Independent re-derivation of the order-4/5 bounds through the
// Weyl-van der Corput squaring step: the proof chain evaluated
// numerically (inner closed-form bound, weighted power sums in closed
// form, M bracketed by eta W^{1/(2^k-1)} and eta W^{1/(2^k-1)} + 1),
// kept separate from the production formulas it cross-checks.

#include <cmath>

#include "zeta1/derivative_tests.hpp"

namespace rederive {

inline double euler_pref(double q) { return 2.0 / ((q + 1.0) * (q + 2.0)); }

// |S|^2 for the fourth derivative test, re-derived.
inline double fourth_sq(double L, double W4, double lambda4, double eta3, double eta4) {
    const auto t3 = zeta1::third_order_coeffs(W4, lambda4, eta3);
    const double a3t = t3.alpha3_tilde;
    const double b3t = t3.beta3_tilde;
    const double Mlo = eta4 * std::pow(W4, 1.0 / 7.0);
    const double Mhi = Mlo + 1.0;
    const double s =
        L / Mlo
        + euler_pref(1.0 / 6.0) * std::sqrt(a3t) * L * std::pow(W4, -1.0 / 6.0)
              * std::pow(Mhi, 1.0 / 6.0)
        + euler_pref(-1.0 / 6.0) * std::sqrt(b3t * L) * std::pow(W4, 1.0 / 6.0)
              * std::pow(Mlo, -1.0 / 6.0)
        + std::sqrt(eta3 * a3t * L)
        + euler_pref(-1.0 / 3.0) * std::sqrt(b3t * eta3) * std::pow(W4, 1.0 / 3.0)
              * std::pow(Mlo, -1.0 / 3.0);
    return (L + Mlo) * s;
}

// The statement form of the same bound, assembled from the coefficients.
inline double fourth_sq_closed(double L, double W4, double lambda4, double eta3, double eta4) {
    const auto c = zeta1::fourth_order_coeffs(W4, lambda4, eta4, eta3,
                                              zeta1::Beta4Mode::proof_18_10);
    const double w17 = std::pow(W4, 1.0 / 7.0);
    return (L / w17 + eta4)
         * (c.alpha4 * L + c.gamma4 * std::sqrt(L) * w17 * w17 + c.beta4 * w17 * w17 * w17);
}

// |S|^2 for the fifth derivative test, re-derived.
inline double fifth_sq(double L, double W5, double lambda5, const zeta1::EtaVector& eta) {
    const auto t4 = zeta1::fourth_order_coeffs(W5, lambda5, eta.eta4, eta.eta3,
                                               zeta1::Beta4Mode::proof_18_10);
    const double a4t = t4.alpha4_tilde;
    const double g4t = t4.gamma4_tilde;
    const double b4 = t4.beta4;
    const double Mlo = eta.eta5 * std::pow(W5, 1.0 / 15.0);
    const double Mhi = Mlo + 1.0;
    const double s =
        L / Mlo
        + euler_pref(1.0 / 14.0) * std::sqrt(a4t) * L * std::pow(W5, -1.0 / 14.0)
              * std::pow(Mhi, 1.0 / 14.0)
        + euler_pref(-1.0 / 14.0) * std::sqrt(g4t) * std::pow(L, 0.75)
              * std::pow(W5, 1.0 / 14.0) * std::pow(Mlo, -1.0 / 14.0)
        + euler_pref(-1.0 / 7.0) * std::sqrt(b4 * L) * std::pow(W5, 1.0 / 7.0)
              * std::pow(Mlo, -1.0 / 7.0)
        + std::sqrt(eta.eta4 * a4t * L)
        + euler_pref(-1.0 / 7.0) * std::sqrt(eta.eta4 * g4t) * std::pow(L, 0.25)
              * std::pow(W5, 1.0 / 7.0) * std::pow(Mlo, -1.0 / 7.0)
        + euler_pref(-3.0 / 14.0) * std::sqrt(eta.eta4 * b4) * std::pow(W5, 3.0 / 14.0)
              * std::pow(Mlo, -3.0 / 14.0);
    return (L + Mlo) * s;
}

inline double fifth_sq_closed(double L, double W5, double lambda5, const zeta1::EtaVector& eta) {
    const auto c = zeta1::fifth_order_coeffs(W5, lambda5, eta, zeta1::Beta4Mode::proof_18_10);
    const double w = std::pow(W5, 1.0 / 15.0);
    return (L / w + eta.eta5)
         * (c.alpha5 * L + c.tau5 * std::pow(L, 0.75) * w * w
            + c.gamma5 * std::sqrt(L) * w * w * w + c.omega5 * std::pow(L, 0.25) * w * w * w
            + c.beta5 * w * w * w * w);
}

}  // namespace rederive
