#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace zeta1 {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;
inline constexpr double kEulerGamma = 0.57721566490153286061;

// Multiplicative slack applied at the final step of every closed-form
// evaluation. Dominates accumulated double rounding at the expression
// depths used here while staying invisible at reported precision.
inline constexpr double kUpperInflation = 1e-9;

/// A nonnegative scalar that never under-reports the quantity it bounds.
class UpperValue {
public:
    UpperValue() = default;

    /// Wrap the result of a closed-form evaluation, inflating once.
    static UpperValue closed_form(double raw) {
        if (!(raw >= 0.0) || !std::isfinite(raw))
            throw std::domain_error("UpperValue: closed form must be finite and nonnegative");
        return UpperValue(raw * (1.0 + kUpperInflation));
    }

    /// Wrap a value that is already a safe upper bound (no extra slack).
    static UpperValue exact(double v) {
        if (!(v >= 0.0))
            throw std::domain_error("UpperValue: negative value");
        return UpperValue(v);
    }

    double value() const { return value_; }

    // Sums and nonnegative scalings of upper bounds stay upper bounds;
    // no re-inflation.
    UpperValue operator+(const UpperValue& o) const { return UpperValue(value_ + o.value_); }
    UpperValue& operator+=(const UpperValue& o) { value_ += o.value_; return *this; }
    UpperValue scaled(double c) const {
        if (!(c >= 0.0))
            throw std::domain_error("UpperValue: negative scale");
        return UpperValue(value_ * c);
    }

private:
    explicit UpperValue(double v) : value_(v) {}
    double value_ = 0.0;
};

struct TailTerm {
    double coefficient;
    double t_power;  // negative
};

/// Power-form decomposition of a bound: additive + sum c_i t^{p_i} + c_log ln t.
/// Evaluating it at any t >= valid_from yields a valid upper bound; at the
/// anchor it reproduces the value the producing operation returned.
struct BoundBreakdown {
    double leading_coeff = 0.0;
    double additive_constant = 0.0;
    std::vector<TailTerm> tail_terms;
    double valid_from = 0.0;

    double evaluate(double t) const {
        double s = additive_constant + leading_coeff * std::log(t);
        for (const auto& term : tail_terms)
            s += term.coefficient * std::pow(t, term.t_power);
        return s;
    }
};

}  // namespace zeta1
