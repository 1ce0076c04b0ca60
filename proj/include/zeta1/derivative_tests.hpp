#pragma once

#include <cstdint>

#include "zeta1/phase.hpp"
#include "zeta1/upper_value.hpp"

namespace zeta1 {

/// Free positive parameters of the nested derivative tests.
struct EtaVector {
    double eta3;
    double eta4;
    double eta5;
};

/// Closed-form choices minimizing the order-3/4 coefficient products:
/// eta3 = (15 sqrt(pi)/32)^{2/3}, eta4 = (91/(72 sqrt(23)))^{6/7}.
EtaVector default_eta();

/// Leading rational of beta4: 18/10 from the derivation chain
/// (2/((q+1)(q+2)) at q = -1/3), or 18/20 as printed in the statement.
enum class Beta4Mode { proof_18_10, statement_18_20 };

enum class SecondDerivVariant { cheng_graham_corrected, platt_trudgian };

struct ThirdOrderCoeffs {
    double alpha3;
    double beta3;
    double alpha3_tilde;  // W-free majorants, valid since W3 > 1
    double beta3_tilde;
};

struct FourthOrderCoeffs {
    double alpha4;
    double gamma4;
    double beta4;
    double alpha4_tilde;
    double gamma4_tilde;
    Beta4Mode beta4_mode;
};

struct FifthOrderCoeffs {
    double alpha5;
    double tau5;
    double gamma5;
    double omega5;
    double beta5;
};

/// Order 1: |S| <= (2/pi) U when ||f'|| >= 1/U on the interval. U >= 2.
UpperValue kuzmin_landau_bound(double U);

/// Order 2: hypotheses 1/W <= |f''| <= 1/V with V < W, W > 1.
UpperValue second_derivative_bound(std::int64_t L, double V, double W,
                                   SecondDerivVariant variant);

ThirdOrderCoeffs third_order_coeffs(double W3, double lambda3, double eta3);

/// Order 3: |S| <= sqrt((L W3^{-1/3} + eta3)(alpha3 L + beta3 W3^{2/3})).
UpperValue third_derivative_bound(std::int64_t L, const DerivEnvelope& env, double eta3);

/// Inner third-order tilde coefficients are evaluated with lambda3 := lambda4
/// (the differenced phase inherits the outer ratio).
FourthOrderCoeffs fourth_order_coeffs(double W4, double lambda4, double eta4, double eta3,
                                      Beta4Mode mode = Beta4Mode::proof_18_10);

/// Order 4: |S| <= sqrt((L W4^{-1/7} + eta4)
///                      (alpha4 L + gamma4 sqrt(L) W4^{2/7} + beta4 W4^{3/7})).
UpperValue fourth_derivative_bound(std::int64_t L, const DerivEnvelope& env,
                                   const EtaVector& eta,
                                   Beta4Mode mode = Beta4Mode::proof_18_10);

FifthOrderCoeffs fifth_order_coeffs(double W5, double lambda5, const EtaVector& eta,
                                    Beta4Mode mode = Beta4Mode::proof_18_10);

/// Order 5: |S| <= sqrt((L W5^{-1/15} + eta5)
///   (alpha5 L + tau5 L^{3/4} W5^{2/15} + gamma5 sqrt(L) W5^{1/5}
///    + omega5 L^{1/4} W5^{1/5} + beta5 W5^{4/15})).
UpperValue fifth_derivative_bound(std::int64_t L, const DerivEnvelope& env,
                                  const EtaVector& eta,
                                  Beta4Mode mode = Beta4Mode::proof_18_10);

/// sum_{m=1}^{M} (1 - m/M) m^q <= M^{q+1}/((q+1)(q+2)), valid for -1 < q < 1.
UpperValue weighted_power_sum_bound(std::int64_t M, double q);

}  // namespace zeta1
