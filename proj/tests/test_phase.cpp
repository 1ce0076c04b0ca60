#include <doctest.h>

#include <cmath>
#include <random>

#include "zeta1/phase.hpp"
#include "zeta1/upper_value.hpp"

using namespace zeta1;

namespace {

// 7-point central stencil for the fifth derivative, O(h^2), evaluated in
// long double, with one Richardson step to O(h^4).
long double fd5_once(long double t, long double x, long double h) {
    auto f = [&](long double y) { return -t / (2.0L * 3.14159265358979323846264338328L) * std::log(y); };
    return (-0.5L * f(x - 3 * h) + 2.0L * f(x - 2 * h) - 2.5L * f(x - h)
            + 2.5L * f(x + h) - 2.0L * f(x + 2 * h) + 0.5L * f(x + 3 * h))
           / (h * h * h * h * h);
}

long double fd5(long double t, long double x, long double h) {
    return (16.0L * fd5_once(t, x, h / 2) - fd5_once(t, x, h)) / 15.0L;
}

}  // namespace

TEST_CASE("log phase derivative: direct values") {
    CHECK(log_phase_derivative(kTwoPi, 1.0, 1) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(log_phase_derivative(kPi, 2.0, 5) == doctest::Approx(-3.0 / 8.0).epsilon(1e-14));
}

TEST_CASE("log phase derivative: finite-difference cross-check at k=5") {
    const double got = log_phase_derivative(1e5, 100.0, 5);
    const double want = static_cast<double>(fd5(1e5L, 100.0L, 8.0L));
    CHECK(got == doctest::Approx(want).epsilon(1e-6));
}

TEST_CASE("log phase derivative: recurrence f^(k+1) = -k f^(k) / x") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ut(1.0, 1e8), ux(0.5, 1e5);
    for (int i = 0; i < 200; ++i) {
        const double t = ut(rng), x = ux(rng);
        for (int k = 1; k <= 7; ++k) {
            const double lhs = log_phase_derivative(t, x, k + 1);
            const double rhs = -k * log_phase_derivative(t, x, k) / x;
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
        }
    }
}

TEST_CASE("log phase derivative: domain errors") {
    CHECK_THROWS_AS(log_phase_derivative(0.0, 1.0, 1), std::domain_error);
    CHECK_THROWS_AS(log_phase_derivative(1.0, -2.0, 1), std::domain_error);
    CHECK_THROWS_AS(log_phase_derivative(1.0, 1.0, 0), std::domain_error);
    CHECK_THROWS_AS(log_phase_derivative(1.0, 1.0, 9), std::domain_error);
}

TEST_CASE("envelope: single-point zeta_log at t=2pi") {
    const auto env = derivative_envelope(PhaseFunction::zeta_log(kTwoPi), 1, 1, 1);
    CHECK(env.W == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(env.lambda == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("envelope: zeta_log fifth-order closed form W = pi b^5/(12t), lambda = (b/a)^5") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ut(1e4, 1e9);
    for (int i = 0; i < 50; ++i) {
        const double t = ut(rng);
        const std::int64_t a = 100 + static_cast<std::int64_t>(rng() % 10000);
        const std::int64_t L = 1 + static_cast<std::int64_t>(rng() % 5000);
        const double b = static_cast<double>(a + L - 1);
        const auto env = derivative_envelope(PhaseFunction::zeta_log(t), a, L, 5);
        CHECK(env.W == doctest::Approx(kPi * std::pow(b, 5) / (12.0 * t)).epsilon(1e-12));
        CHECK(env.lambda == doctest::Approx(std::pow(b / a, 5)).epsilon(1e-12));
        CHECK(env.lambda >= 1.0);
    }
}

TEST_CASE("envelope: W monotone in the right endpoint for zeta_log") {
    const auto phase = PhaseFunction::zeta_log(1e6);
    double prev = 0.0;
    for (std::int64_t L = 10; L <= 1000; L += 90) {
        const auto env = derivative_envelope(phase, 500, L, 3);
        CHECK(env.W > prev);
        prev = env.W;
    }
}

TEST_CASE("envelope: brackets |f^(k)| pointwise on a dense grid") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int rep = 0; rep < 40; ++rep) {
        // quadratic-through-quintic phases with positive increasing f''
        const double c2 = 1e-4 + 0.2 * u01(rng);
        const double c3 = 1e-6 + 1e-3 * u01(rng);
        const auto phase = PhaseFunction::polynomial({u01(rng), u01(rng), c2, c3});
        const std::int64_t a = static_cast<std::int64_t>(u01(rng) * 20);
        const std::int64_t L = 2 + static_cast<std::int64_t>(u01(rng) * 400);
        const auto env = derivative_envelope(phase, a, L, 2);
        for (int g = 0; g <= 1000; ++g) {
            const double x = a + (static_cast<double>(L - 1) * g) / 1000.0;
            const double d = std::fabs(phase.derivative(x, 2));
            CHECK(d >= 1.0 / env.W * (1 - 1e-12));
            CHECK(d <= env.lambda / env.W * (1 + 1e-12));
        }
    }
}

TEST_CASE("envelope: integer points of mixed phases satisfy the sandwich") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int rep = 0; rep < 100; ++rep) {
        const double t = 1e3 + 1e7 * u01(rng);
        const int k = 1 + static_cast<int>(u01(rng) * 5);
        const std::int64_t a = 10 + static_cast<std::int64_t>(u01(rng) * 1000);
        const std::int64_t L = 1 + static_cast<std::int64_t>(u01(rng) * 300);
        const auto phase = PhaseFunction::zeta_log(t);
        const auto env = derivative_envelope(phase, a, L, k);
        for (std::int64_t n = a; n < a + L; n += std::max<std::int64_t>(1, L / 17)) {
            const double d = std::fabs(phase.derivative(static_cast<double>(n), k));
            CHECK(d >= 1.0 / env.W * (1 - 1e-12));
            CHECK(d <= env.lambda / env.W * (1 + 1e-12));
        }
    }
}

TEST_CASE("envelope: error cases") {
    // f''(x) = 6x vanishes at x = 0
    CHECK_THROWS_AS(derivative_envelope(PhaseFunction::polynomial({0, 0, 0, 1}), 0, 10, 2),
                    std::domain_error);
    // f''(x) = -2 + 6e-2 x changes sign inside [0, 100]
    CHECK_THROWS_AS(derivative_envelope(PhaseFunction::polynomial({0, 0, -1.0, 1e-2}), 0, 101, 2),
                    std::domain_error);
    CHECK_THROWS_AS(derivative_envelope(PhaseFunction::zeta_log(10.0), 1, 0, 1),
                    std::domain_error);
    CHECK_THROWS_AS(PhaseFunction::zeta_log(-1.0), std::domain_error);
    CHECK_THROWS_AS(PhaseFunction::polynomial({}), std::domain_error);
}

TEST_CASE("fractional part matches direct evaluation for small phases") {
    const auto poly = PhaseFunction::polynomial({0.25, 0.5});
    for (std::int64_t n = 0; n < 20; ++n) {
        const double direct = std::fmod(poly.value(static_cast<double>(n)), 1.0);
        CHECK(poly.fractional_part(n) == doctest::Approx(direct).epsilon(1e-14));
    }
    const auto zl = PhaseFunction::zeta_log(12.5);
    for (std::int64_t n = 1; n < 50; ++n) {
        double direct = std::fmod(zl.value(static_cast<double>(n)), 1.0);
        if (direct < 0) direct += 1.0;
        CHECK(zl.fractional_part(n) == doctest::Approx(direct).epsilon(1e-12));
    }
}

TEST_CASE("custom phases evaluate but do not offer exact reduction") {
    const auto phase = PhaseFunction::custom([](double x, int k) {
        if (k == 0) return 0.1 * x * x;
        if (k == 1) return 0.2 * x;
        return k == 2 ? 0.2 : 0.0;
    });
    CHECK(phase.value(3.0) == doctest::Approx(0.9));
    CHECK(phase.derivative(3.0, 2) == doctest::Approx(0.2));
    CHECK(!phase.supports_fractional_part());
    const auto env = derivative_envelope(phase, 1, 100, 2);
    CHECK(env.W == doctest::Approx(5.0));
    CHECK(env.lambda == doctest::Approx(1.0));
}
