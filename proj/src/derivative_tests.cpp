#include "zeta1/derivative_tests.hpp"

#include <cmath>
#include <stdexcept>

namespace zeta1 {

namespace {

const double kSqrtPi = std::sqrt(kPi);

void require_envelope(const DerivEnvelope& env, int order) {
    if (env.order != order)
        throw std::domain_error("derivative test: envelope order mismatch");
    if (!(env.W > 1.0))
        throw std::domain_error("derivative test: requires W > 1");
    if (!(env.lambda >= 1.0))
        throw std::domain_error("derivative test: requires lambda >= 1");
}

void require_eta(const EtaVector& eta) {
    if (!(eta.eta3 > 0.0 && eta.eta4 > 0.0 && eta.eta5 > 0.0))
        throw std::domain_error("EtaVector components must be positive");
}

}  // namespace

EtaVector default_eta() {
    const double eta3 = std::pow(15.0 * kSqrtPi / 32.0, 2.0 / 3.0);
    const double eta4 = std::pow(91.0 / (72.0 * std::sqrt(23.0)), 6.0 / 7.0);
    return {eta3, eta4, 2.2};
}

UpperValue kuzmin_landau_bound(double U) {
    if (!(U >= 2.0))
        throw std::domain_error("kuzmin_landau_bound: requires U >= 2");
    return UpperValue::closed_form(2.0 / kPi * U);
}

UpperValue second_derivative_bound(std::int64_t L, double V, double W,
                                   SecondDerivVariant variant) {
    if (L < 1) throw std::domain_error("second_derivative_bound: L must be >= 1");
    if (!(W > 1.0)) throw std::domain_error("second_derivative_bound: requires W > 1");
    if (!(V < W)) throw std::domain_error("second_derivative_bound: requires V < W");
    const double Ld = static_cast<double>(L);
    double b;
    switch (variant) {
        case SecondDerivVariant::cheng_graham_corrected:
            b = 2.0 * (Ld / V + 2.0) * (2.0 * std::sqrt(W / kPi) + 1.0);
            break;
        case SecondDerivVariant::platt_trudgian:
            b = 2.0 * ((Ld - 1.0) / V + 2.0) * (2.0 * std::sqrt(W / kPi) + 0.5) + 1.0;
            break;
        default:
            throw std::logic_error("second_derivative_bound: bad variant");
    }
    return UpperValue::closed_form(b);
}

ThirdOrderCoeffs third_order_coeffs(double W3, double lambda3, double eta3) {
    if (!(W3 > 1.0)) throw std::domain_error("third_order_coeffs: requires W3 > 1");
    if (!(lambda3 >= 1.0)) throw std::domain_error("third_order_coeffs: requires lambda3 >= 1");
    if (!(eta3 > 0.0)) throw std::domain_error("third_order_coeffs: requires eta3 > 0");
    ThirdOrderCoeffs c;
    const double w13 = std::cbrt(W3);
    c.alpha3 = 1.0 / eta3 + 32.0 * lambda3 / (15.0 * kSqrtPi) * std::sqrt(eta3 + 1.0 / w13)
             + 2.0 * lambda3 * eta3 / w13 + 2.0 * lambda3 / (w13 * w13);
    c.beta3 = 64.0 / (3.0 * kSqrtPi * std::sqrt(eta3)) + 4.0 / w13;
    c.alpha3_tilde = 1.0 / eta3 + 32.0 * lambda3 / (15.0 * kSqrtPi) * std::sqrt(eta3 + 1.0)
                   + 2.0 * lambda3 * eta3 + 2.0 * lambda3;
    c.beta3_tilde = 64.0 / (3.0 * kSqrtPi * std::sqrt(eta3)) + 4.0;
    return c;
}

UpperValue third_derivative_bound(std::int64_t L, const DerivEnvelope& env, double eta3) {
    if (L < 1) throw std::domain_error("third_derivative_bound: L must be >= 1");
    require_envelope(env, 3);
    const ThirdOrderCoeffs c = third_order_coeffs(env.W, env.lambda, eta3);
    const double Ld = static_cast<double>(L);
    const double w13 = std::cbrt(env.W);
    const double sq = (Ld / w13 + eta3) * (c.alpha3 * Ld + c.beta3 * w13 * w13);
    return UpperValue::closed_form(std::sqrt(sq));
}

FourthOrderCoeffs fourth_order_coeffs(double W4, double lambda4, double eta4, double eta3,
                                      Beta4Mode mode) {
    if (!(W4 > 1.0)) throw std::domain_error("fourth_order_coeffs: requires W4 > 1");
    if (!(lambda4 >= 1.0)) throw std::domain_error("fourth_order_coeffs: requires lambda4 >= 1");
    if (!(eta4 > 0.0 && eta3 > 0.0))
        throw std::domain_error("fourth_order_coeffs: requires positive etas");
    const ThirdOrderCoeffs t3 = third_order_coeffs(W4, lambda4, eta3);
    FourthOrderCoeffs c;
    c.beta4_mode = mode;
    const double w17 = std::pow(W4, 1.0 / 7.0);
    c.alpha4 = 1.0 / eta4
             + 72.0 / 91.0 * std::sqrt(t3.alpha3_tilde) * std::pow(eta4 + 1.0 / w17, 1.0 / 6.0);
    c.gamma4 = 72.0 / 55.0 * std::sqrt(t3.beta3_tilde) * std::pow(eta4, -1.0 / 6.0)
             + std::sqrt(eta3 * t3.alpha3_tilde) / w17;
    const double lead = (mode == Beta4Mode::proof_18_10) ? 18.0 / 10.0 : 18.0 / 20.0;
    c.beta4 = lead * std::sqrt(t3.beta3_tilde * eta3) * std::pow(eta4, -1.0 / 3.0);
    c.alpha4_tilde = 1.0 / eta4
                   + 72.0 / 91.0 * std::sqrt(t3.alpha3_tilde) * std::pow(eta4 + 1.0, 1.0 / 6.0);
    c.gamma4_tilde = 72.0 / 55.0 * std::sqrt(t3.beta3_tilde) * std::pow(eta4, -1.0 / 6.0)
                   + std::sqrt(eta3 * t3.alpha3_tilde);
    return c;
}

UpperValue fourth_derivative_bound(std::int64_t L, const DerivEnvelope& env,
                                   const EtaVector& eta, Beta4Mode mode) {
    if (L < 1) throw std::domain_error("fourth_derivative_bound: L must be >= 1");
    require_envelope(env, 4);
    require_eta(eta);
    const FourthOrderCoeffs c = fourth_order_coeffs(env.W, env.lambda, eta.eta4, eta.eta3, mode);
    const double Ld = static_cast<double>(L);
    const double w17 = std::pow(env.W, 1.0 / 7.0);
    const double sq = (Ld / w17 + eta.eta4)
                    * (c.alpha4 * Ld + c.gamma4 * std::sqrt(Ld) * w17 * w17
                       + c.beta4 * w17 * w17 * w17);
    return UpperValue::closed_form(std::sqrt(sq));
}

FifthOrderCoeffs fifth_order_coeffs(double W5, double lambda5, const EtaVector& eta,
                                    Beta4Mode mode) {
    if (!(W5 > 1.0)) throw std::domain_error("fifth_order_coeffs: requires W5 > 1");
    if (!(lambda5 >= 1.0)) throw std::domain_error("fifth_order_coeffs: requires lambda5 >= 1");
    require_eta(eta);
    // lambda4 := lambda5: the differenced phase keeps the outer ratio.
    const FourthOrderCoeffs t4 = fourth_order_coeffs(W5, lambda5, eta.eta4, eta.eta3, mode);
    FifthOrderCoeffs c;
    const double w115 = std::pow(W5, 1.0 / 15.0);
    c.alpha5 = 1.0 / eta.eta5
             + 392.0 / 435.0 * std::sqrt(t4.alpha4_tilde)
               * std::pow(eta.eta5 + 1.0 / w115, 1.0 / 14.0);
    c.tau5 = 392.0 / 351.0 * std::sqrt(t4.gamma4_tilde) * std::pow(eta.eta5, -1.0 / 14.0);
    c.gamma5 = 98.0 / 78.0 * std::sqrt(t4.beta4) * std::pow(eta.eta5, -1.0 / 7.0)
             + std::sqrt(eta.eta4 * t4.alpha4_tilde) * std::pow(W5, -2.0 / 15.0);
    c.omega5 = 98.0 / 78.0 * std::sqrt(eta.eta4 * t4.gamma4_tilde) * std::pow(eta.eta5, -1.0 / 7.0);
    c.beta5 = 392.0 / 275.0 * std::sqrt(eta.eta4 * t4.beta4) * std::pow(eta.eta5, -3.0 / 14.0);
    return c;
}

UpperValue fifth_derivative_bound(std::int64_t L, const DerivEnvelope& env,
                                  const EtaVector& eta, Beta4Mode mode) {
    if (L < 1) throw std::domain_error("fifth_derivative_bound: L must be >= 1");
    require_envelope(env, 5);
    require_eta(eta);
    const FifthOrderCoeffs c = fifth_order_coeffs(env.W, env.lambda, eta, mode);
    const double Ld = static_cast<double>(L);
    const double w115 = std::pow(env.W, 1.0 / 15.0);
    const double w215 = w115 * w115;
    const double sq = (Ld / w115 + eta.eta5)
                    * (c.alpha5 * Ld + c.tau5 * std::pow(Ld, 0.75) * w215
                       + c.gamma5 * std::sqrt(Ld) * w215 * w115
                       + c.omega5 * std::pow(Ld, 0.25) * w215 * w115
                       + c.beta5 * w215 * w215);
    return UpperValue::closed_form(std::sqrt(sq));
}

UpperValue weighted_power_sum_bound(std::int64_t M, double q) {
    if (M < 1) throw std::domain_error("weighted_power_sum_bound: M must be >= 1");
    if (!(q > -1.0 && q < 1.0))
        throw std::domain_error("weighted_power_sum_bound: requires -1 < q < 1");
    const double Md = static_cast<double>(M);
    return UpperValue::closed_form(std::pow(Md, q + 1.0) / ((q + 1.0) * (q + 2.0)));
}

}  // namespace zeta1
