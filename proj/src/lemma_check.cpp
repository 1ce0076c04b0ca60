#include "zeta1/lemma_check.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zeta1 {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

std::int64_t log_uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    if (hi <= lo) return lo;
    std::uniform_real_distribution<double> u(std::log(static_cast<double>(lo)),
                                             std::log(static_cast<double>(hi) + 1.0));
    const double v = std::exp(u(rng));
    return std::clamp(static_cast<std::int64_t>(v), lo, hi);
}

double dist_to_integer(double x) {
    const double f = x - std::floor(x);
    return std::min(f, 1.0 - f);
}

/// Polynomial with prescribed linear k-th derivative: f^(k) runs from
/// min_v at a to lam*min_v at b; lower-order coefficients uniform in [0,1).
PhaseFunction poly_with_kth_derivative(int k, double a, double b, double min_v, double lam,
                                       std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    const double slope = (b > a) ? (lam - 1.0) * min_v / (b - a) : 0.0;
    const double intercept = min_v - slope * a;
    std::vector<double> coeffs(static_cast<std::size_t>(k) + 2, 0.0);
    for (int i = 0; i < k; ++i) coeffs[i] = u01(rng);
    coeffs[k] = intercept / factorial(k);
    coeffs[k + 1] = slope / factorial(k + 1);
    return PhaseFunction::polynomial(std::move(coeffs));
}

LemmaInstance kuzmin_landau_instance(std::mt19937_64& rng, std::int64_t max_length) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    LemmaInstance inst;
    inst.order = 1;
    if (u01(rng) < 0.5) {
        // Quadratic phase: f' = c1 + 2 c2 x kept inside one integer cell.
        const double d = 0.02 + 0.43 * u01(rng);
        const std::int64_t a = static_cast<std::int64_t>(u01(rng) * 50);
        const std::int64_t L = log_uniform_int(rng, 1, max_length);
        const double b = static_cast<double>(a + L - 1);
        const int m = static_cast<int>(u01(rng) * 7) - 3;
        std::uniform_real_distribution<double> cell(d, 1.0 - d);
        const double ya = m + cell(rng);
        const double yb = m + cell(rng);
        const double c2 = (L > 1) ? (yb - ya) / (2.0 * (b - a)) : 0.0;
        const double c1 = ya - 2.0 * c2 * a;
        inst.phase = PhaseFunction::polynomial({u01(rng), c1, c2});
        inst.n_start = a;
        inst.length = L;
        const double da = dist_to_integer(ya);
        const double db = dist_to_integer(L > 1 ? yb : ya);
        inst.U = 1.0 / std::min(da, db);
    } else {
        // zeta_log window where -f' = t/(2 pi x) stays inside one cell.
        const double t = std::exp(std::log(1e3) + u01(rng) * std::log(1e5));  // [1e3, 1e8]
        const double d = 0.02 + 0.38 * u01(rng);
        const double kmax = std::sqrt(t * (1.0 - 2.0 * d) / (kTwoPi * 16.0));
        const int k = 1 + static_cast<int>(u01(rng) * std::max(1.0, std::min(kmax, 1000.0) - 1.0));
        const double xlo = t / (kTwoPi * (k + 1.0 - d));
        const double xhi = t / (kTwoPi * (k + d));
        std::int64_t a = static_cast<std::int64_t>(std::ceil(xlo));
        std::int64_t bmax = static_cast<std::int64_t>(std::floor(xhi));
        if (a < 1) a = 1;
        if (bmax < a) bmax = a;
        const std::int64_t L = log_uniform_int(rng, 1, std::min(max_length, bmax - a + 1));
        inst.phase = PhaseFunction::zeta_log(t);
        inst.n_start = a;
        inst.length = L;
        const double ya = t / (kTwoPi * a);
        const double yb = t / (kTwoPi * (a + L - 1.0));
        if (std::floor(ya) != std::floor(yb))
            return kuzmin_landau_instance(rng, max_length);  // cell crossed, redraw
        inst.U = 1.0 / std::min(dist_to_integer(ya), dist_to_integer(yb));
    }
    if (inst.U < 2.0) inst.U = 2.0;
    return inst;
}

LemmaInstance envelope_instance(int k, std::mt19937_64& rng, std::int64_t max_length) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    LemmaInstance inst;
    inst.order = k;
    const std::int64_t min_length = (k == 2) ? 2 : 1;
    if (u01(rng) < 0.5) {
        const std::int64_t a = static_cast<std::int64_t>(u01(rng) * 50);
        const std::int64_t L = log_uniform_int(rng, min_length, max_length);
        const double min_v = std::exp(std::log(1e-6) + u01(rng) * std::log(0.5 / 1e-6));
        const double lam = (L > 1) ? std::exp(u01(rng) * std::log(8.0)) : 1.0;
        const double lam_eff = (k == 2) ? std::max(lam, 1.0 + 1e-6) : lam;
        inst.phase = poly_with_kth_derivative(k, static_cast<double>(a),
                                              static_cast<double>(a + L - 1), min_v, lam_eff, rng);
        inst.n_start = a;
        inst.length = L;
    } else if (k == 5 && u01(rng) < 0.4) {
        // Pipeline-shaped block: [ceil(j u (1+eps)^r), floor(j u (1+eps)^{r+1})]
        // for the zeta log-phase, t in [1e6, 1e8].
        const double t = std::exp(std::log(1e6) + u01(rng) * std::log(1e2));
        const double eps = 0.32;
        const int j = 60;
        double scale = j * std::pow(t, 0.2);
        const double n1 = std::sqrt(t / kTwoPi);
        const int rmax = std::max(0, static_cast<int>(
            std::floor(std::log(n1 / scale) / std::log1p(eps))) - 1);
        const int r = static_cast<int>(u01(rng) * (rmax + 1));
        for (int i = 0; i < r; ++i) scale *= 1.0 + eps;
        const std::int64_t a = static_cast<std::int64_t>(std::ceil(scale));
        const std::int64_t last = static_cast<std::int64_t>(std::floor(scale * (1.0 + eps)));
        const std::int64_t L = std::min(std::max<std::int64_t>(last - a + 1, 1), max_length);
        inst.phase = PhaseFunction::zeta_log(t);
        inst.n_start = a;
        inst.length = L;
    } else {
        const double t = std::exp(std::log(1e3) + u01(rng) * std::log(1e5));  // [1e3, 1e8]
        // W_k = 2 pi b^k / ((k-1)! t) must exceed 1: start past the unit-W point.
        const double x0 = std::pow(factorial(k - 1) * t / kTwoPi, 1.0 / k);
        const double scale = std::exp(std::log(1.05) + u01(rng) * std::log(1000.0 / 1.05));
        const std::int64_t a = std::max<std::int64_t>(2, static_cast<std::int64_t>(
            std::ceil(x0 * scale)));
        const double ratio = 1.0 + 3.0 * u01(rng);  // b/a up to 4, lambda up to 4^k
        const std::int64_t span = std::max<std::int64_t>(min_length,
            static_cast<std::int64_t>(a * (ratio - 1.0)));
        const std::int64_t L = log_uniform_int(rng, min_length, std::min(max_length, span));
        inst.phase = PhaseFunction::zeta_log(t);
        inst.n_start = a;
        inst.length = L;
    }
    inst.env = derivative_envelope(inst.phase, inst.n_start, inst.length, k);
    if (!(inst.env.W > 1.0) || (k == 2 && !(inst.env.lambda > 1.0)))
        return envelope_instance(k, rng, max_length);  // rare edge, redraw
    return inst;
}

}  // namespace

LemmaInstance random_lemma_instance(int order, std::mt19937_64& rng, std::int64_t max_length) {
    if (order < 1 || order > 5)
        throw std::domain_error("random_lemma_instance: order must be in 1..5");
    if (max_length < 2) throw std::domain_error("random_lemma_instance: max_length too small");
    if (order == 1) return kuzmin_landau_instance(rng, max_length);
    return envelope_instance(order, rng, max_length);
}

LemmaOutcome check_lemma_instance(const LemmaInstance& inst, const EtaVector& eta,
                                  Beta4Mode mode) {
    LemmaOutcome out;
    switch (inst.order) {
        case 1:
            out.bound = kuzmin_landau_bound(inst.U).value();
            break;
        case 2:
            out.bound = second_derivative_bound(inst.length, inst.env.W / inst.env.lambda,
                                                inst.env.W,
                                                SecondDerivVariant::cheng_graham_corrected)
                            .value();
            out.bound_alt = second_derivative_bound(inst.length, inst.env.W / inst.env.lambda,
                                                    inst.env.W,
                                                    SecondDerivVariant::platt_trudgian)
                                .value();
            break;
        case 3:
            out.bound = third_derivative_bound(inst.length, inst.env, eta.eta3).value();
            break;
        case 4:
            out.bound = fourth_derivative_bound(inst.length, inst.env, eta, mode).value();
            break;
        case 5:
            out.bound = fifth_derivative_bound(inst.length, inst.env, eta, mode).value();
            break;
        default:
            throw std::logic_error("check_lemma_instance: bad order");
    }
    const OracleResult brute = exp_sum_brute(inst.phase, inst.n_start, inst.length);
    out.brute = brute.value;
    out.brute_error = brute.error_bound;
    const double measured = brute.value + brute.error_bound;
    out.pass = measured <= out.bound && (inst.order != 2 || measured <= out.bound_alt);
    out.ratio = out.bound / std::max(measured, 1e-300);
    return out;
}

}  // namespace zeta1
