#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace zeta1 {

enum class PhaseKind { zeta_log, polynomial, custom };

/// Exact k-th derivative of f(x) = -(t/2pi) log x, i.e.
/// (-1)^k (k-1)! t / (2 pi x^k). Valid for 1 <= k <= 8.
double log_phase_derivative(double t, double x, int k);

/// Phase function f for exponential sums sum e^{2 pi i f(n)}.
class PhaseFunction {
public:
    /// f(x) = -(t/2pi) log x, the phase of n^{-it}. Requires t > 0.
    static PhaseFunction zeta_log(double t);
    /// f(x) = sum_i coeffs[i] x^i. Requires a nonempty coefficient list.
    static PhaseFunction polynomial(std::vector<double> coeffs);
    /// Arbitrary evaluator; eval(x, k) returns the k-th derivative at x
    /// (k = 0 gives f itself).
    static PhaseFunction custom(std::function<double(double, int)> eval);

    PhaseKind kind() const { return kind_; }
    double t() const;  // zeta_log only
    const std::vector<double>& coefficients() const;  // polynomial only

    double value(double x) const;
    double derivative(double x, int k) const;

    /// f(n) mod 1 in [0,1), computed in extended precision so that the
    /// brute-force oracle's error contract holds. Unavailable for custom
    /// evaluator phases.
    bool supports_fractional_part() const { return kind_ != PhaseKind::custom; }
    double fractional_part(std::int64_t n) const;

private:
    PhaseFunction() = default;
    PhaseKind kind_ = PhaseKind::custom;
    double t_ = 0.0;
    std::vector<double> coeffs_;
    std::function<double(double, int)> eval_;
};

/// Two-sided sandwich 1/W <= |f^(k)| <= lambda/W on the closed real
/// interval [n_start, n_start + length - 1].
struct DerivEnvelope {
    int order = 0;
    std::int64_t n_start = 0;
    std::int64_t length = 0;
    double W = 0.0;
    double lambda = 1.0;
};

/// Envelope of |f^(k)| over [n_start, n_start+L-1] by endpoint evaluation.
/// Requires |f^(k)| monotone on the interval (automatic for zeta_log);
/// fails if the derivative vanishes or changes sign there.
DerivEnvelope derivative_envelope(const PhaseFunction& phase, std::int64_t n_start,
                                  std::int64_t L, int k);

}  // namespace zeta1
