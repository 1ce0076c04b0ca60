#include "zeta1/phase.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <quadmath.h>

#include "zeta1/upper_value.hpp"

namespace zeta1 {

namespace {

constexpr double kFactorial[9] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};

__float128 frac_q(__float128 x) {
    __float128 f = x - floorq(x);
    if (f < 0) f += 1;
    if (f >= 1) f -= 1;
    return f;
}

}  // namespace

double log_phase_derivative(double t, double x, int k) {
    if (!(t > 0.0)) throw std::domain_error("log_phase_derivative: t must be positive");
    if (!(x > 0.0)) throw std::domain_error("log_phase_derivative: x must be positive");
    if (k < 1 || k > 8) throw std::domain_error("log_phase_derivative: order out of range");
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * kFactorial[k - 1] * t / (kTwoPi * std::pow(x, k));
}

PhaseFunction PhaseFunction::zeta_log(double t) {
    if (!(t > 0.0)) throw std::domain_error("PhaseFunction::zeta_log: t must be positive");
    PhaseFunction p;
    p.kind_ = PhaseKind::zeta_log;
    p.t_ = t;
    return p;
}

PhaseFunction PhaseFunction::polynomial(std::vector<double> coeffs) {
    if (coeffs.empty())
        throw std::domain_error("PhaseFunction::polynomial: empty coefficient list");
    PhaseFunction p;
    p.kind_ = PhaseKind::polynomial;
    p.coeffs_ = std::move(coeffs);
    return p;
}

PhaseFunction PhaseFunction::custom(std::function<double(double, int)> eval) {
    PhaseFunction p;
    p.kind_ = PhaseKind::custom;
    p.eval_ = std::move(eval);
    return p;
}

double PhaseFunction::t() const {
    if (kind_ != PhaseKind::zeta_log)
        throw std::logic_error("PhaseFunction::t: not a zeta_log phase");
    return t_;
}

const std::vector<double>& PhaseFunction::coefficients() const {
    if (kind_ != PhaseKind::polynomial)
        throw std::logic_error("PhaseFunction::coefficients: not a polynomial phase");
    return coeffs_;
}

double PhaseFunction::value(double x) const {
    switch (kind_) {
        case PhaseKind::zeta_log:
            if (!(x > 0.0)) throw std::domain_error("PhaseFunction: x must be positive");
            return -t_ / kTwoPi * std::log(x);
        case PhaseKind::polynomial: {
            double v = 0.0;
            for (std::size_t i = coeffs_.size(); i-- > 0;) v = v * x + coeffs_[i];
            return v;
        }
        case PhaseKind::custom:
            return eval_(x, 0);
    }
    throw std::logic_error("PhaseFunction: bad kind");
}

double PhaseFunction::derivative(double x, int k) const {
    if (k == 0) return value(x);
    switch (kind_) {
        case PhaseKind::zeta_log:
            return log_phase_derivative(t_, x, k);
        case PhaseKind::polynomial: {
            double v = 0.0;
            for (std::size_t i = coeffs_.size(); i-- > static_cast<std::size_t>(k);) {
                double falling = 1.0;
                for (int j = 0; j < k; ++j) falling *= static_cast<double>(i - j);
                v = v * x + coeffs_[i] * falling;
            }
            return v;
        }
        case PhaseKind::custom:
            return eval_(x, k);
    }
    throw std::logic_error("PhaseFunction: bad kind");
}

double PhaseFunction::fractional_part(std::int64_t n) const {
    switch (kind_) {
        case PhaseKind::zeta_log: {
            if (n <= 0) throw std::domain_error("PhaseFunction: n must be positive");
            __float128 ph = -(__float128)t_ / (2 * M_PIq) * logq((__float128)n);
            return static_cast<double>(frac_q(ph));
        }
        case PhaseKind::polynomial: {
            // Horner with reduction mod 1 at each step; dropping integer
            // parts is exact because n is an integer.
            __float128 r = frac_q((__float128)coeffs_.back());
            for (std::size_t i = coeffs_.size() - 1; i-- > 0;)
                r = frac_q(frac_q(r * (__float128)n) + frac_q((__float128)coeffs_[i]));
            return static_cast<double>(r);
        }
        case PhaseKind::custom:
            throw std::domain_error("PhaseFunction: fractional_part unavailable for custom phases");
    }
    throw std::logic_error("PhaseFunction: bad kind");
}

DerivEnvelope derivative_envelope(const PhaseFunction& phase, std::int64_t n_start,
                                  std::int64_t L, int k) {
    if (L < 1) throw std::domain_error("derivative_envelope: L must be >= 1");
    if (k < 1) throw std::domain_error("derivative_envelope: order must be >= 1");
    const double a = static_cast<double>(n_start);
    const double b = static_cast<double>(n_start + L - 1);
    const double da = phase.derivative(a, k);
    const double db = phase.derivative(b, k);
    if (da == 0.0 || db == 0.0)
        throw std::domain_error("derivative_envelope: derivative vanishes on the interval");
    if ((da > 0.0) != (db > 0.0))
        throw std::domain_error("derivative_envelope: derivative changes sign on the interval");
    const double lo = std::min(std::fabs(da), std::fabs(db));
    const double hi = std::max(std::fabs(da), std::fabs(db));
    DerivEnvelope env;
    env.order = k;
    env.n_start = n_start;
    env.length = L;
    env.W = 1.0 / lo;
    env.lambda = hi / lo;
    return env;
}

}  // namespace zeta1
