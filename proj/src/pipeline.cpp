#include "zeta1/pipeline.hpp"

#include <cmath>
#include <stdexcept>

#include "zeta1/gamma_chi.hpp"
#include "zeta1/one_line.hpp"
#include "zeta1/phase.hpp"

namespace zeta1 {

namespace {

double phi_factor(const PipelineParams& p, double t) {
    return p.epsilon - 2.0 / (p.j * std::pow(t, 0.2));
}

double geo_decreasing(double eps, double c) {
    // sum_{r>=0} (1+eps)^{-cr} <= (1+eps)^c / ((1+eps)^c - 1)
    const double q = std::pow(1.0 + eps, c);
    return q / (q - 1.0);
}

struct BlockEdges {
    std::int64_t first_n;
    std::int64_t floor_x;   // floor((1+eps)^{r+1} j u)
    std::int64_t last_nominal;
    std::int64_t length_nominal;
};

// Edges of block r from the running scale s_r = (1+eps)^r j u.
BlockEdges block_edges(double scale_r, double eps) {
    BlockEdges e;
    e.first_n = static_cast<std::int64_t>(std::ceil(scale_r));
    const double x = scale_r * (1.0 + eps);
    const double fx = std::floor(x);
    const int delta = (x == fx) ? 1 : 0;
    e.floor_x = static_cast<std::int64_t>(fx);
    e.last_nominal = e.floor_x - delta;
    e.length_nominal = e.last_nominal - e.first_n + 1;
    return e;
}

void require_desk_scale(double t) {
    if (!(t <= 1e30))
        throw std::domain_error("dyadic blocks: t beyond int64-exact endpoint range");
}

}  // namespace

bool PipelineParams::is_valid() const {
    return j >= 2 && epsilon > 0.0 && t0 > 0.0
        && eta.eta3 > 0.0 && eta.eta4 > 0.0 && eta.eta5 > 0.0
        && t0 > std::pow(2.0 / j, 5.0)
        && epsilon > 2.0 / (j * std::pow(t0, 0.2));
}

void PipelineParams::validate() const {
    if (!is_valid()) throw std::domain_error("PipelineParams: invariants violated");
}

int dyadic_count_bound(const PipelineParams& params, double t) {
    params.validate();
    if (!(t > 0.0)) throw std::domain_error("dyadic_count_bound: t must be positive");
    if (!(params.epsilon > 2.0 / (params.j * std::pow(t, 0.2))))
        throw std::domain_error("dyadic_count_bound: requires eps > 2/(j t^{1/5})");
    const double num = 0.3 * std::log(t) - std::log(std::sqrt(kTwoPi) * params.j);
    const double R = std::floor(num / std::log1p(params.epsilon)) + 1.0;
    return R < 1.0 ? 1 : static_cast<int>(R);
}

std::vector<DyadicBlock> dyadic_blocks_from_scale(const PipelineParams& params, double u,
                                                  std::int64_t n_max) {
    params.validate();
    if (!(u > 0.0)) throw std::domain_error("dyadic_blocks_from_scale: u must be positive");
    std::vector<DyadicBlock> blocks;
    double scale = params.j * u;
    const double t = std::pow(u, 5.0);
    for (int r = 0;; ++r) {
        const BlockEdges e = block_edges(scale, params.epsilon);
        if (e.first_n > n_max) break;
        if (e.length_nominal < 1)
            throw std::domain_error("dyadic blocks: empty block (eps too small for this t)");
        DyadicBlock b;
        b.r = r;
        b.first_n = e.first_n;
        b.length_nominal = e.length_nominal;
        const DerivEnvelope env = derivative_envelope(
            PhaseFunction::zeta_log(t), e.first_n, e.floor_x - e.first_n + 1, 5);
        b.W = env.W;
        b.lambda = env.lambda;
        if (e.last_nominal >= n_max) {
            b.last_n = n_max;
            b.clamped = e.last_nominal > n_max;
            blocks.push_back(b);
            break;
        }
        b.last_n = e.last_nominal;
        blocks.push_back(b);
        scale *= 1.0 + params.epsilon;
    }
    return blocks;
}

std::vector<DyadicBlock> dyadic_blocks(const PipelineParams& params, double t) {
    require_desk_scale(t);
    const double u = std::pow(t, 0.2);
    return dyadic_blocks_from_scale(params, u, sqrt_t_over_2pi_floor(t));
}

UpperValue block_bound(const PipelineParams& params, double t, int r) {
    params.validate();
    require_desk_scale(t);
    if (r < 0 || r >= dyadic_count_bound(params, t))
        throw std::domain_error("block_bound: r out of range");
    const double u = std::pow(t, 0.2);
    double scale = params.j * u;
    for (int i = 0; i < r; ++i) scale *= 1.0 + params.epsilon;
    const BlockEdges e = block_edges(scale, params.epsilon);
    if (e.length_nominal < 1) throw std::domain_error("block_bound: empty block");
    const DerivEnvelope env = derivative_envelope(
        PhaseFunction::zeta_log(t), e.first_n, e.floor_x - e.first_n + 1, 5);
    const UpperValue max_partial =
        fifth_derivative_bound(e.length_nominal, env, params.eta, params.beta4_mode);
    return partial_summation_reduce(max_partial, e.first_n - 1);
}

AggregateCoeffs aggregate_tail_bound(const PipelineParams& params, double t) {
    params.validate();
    if (!(t > 0.0)) throw std::domain_error("aggregate_tail_bound: t must be positive");
    const double eps = params.epsilon;
    const double j = static_cast<double>(params.j);
    const double phi = phi_factor(params, t);
    if (!(phi > 0.0))
        throw std::domain_error("aggregate_tail_bound: requires eps > 2/(j t^{1/5})");

    const double W = kPi * std::pow(j, 5.0) / 12.0;
    if (!(W > 1.0)) throw std::domain_error("aggregate_tail_bound: envelope W must exceed 1");
    const double lambda = std::pow(1.0 + eps, 5.0);
    const FifthOrderCoeffs c = fifth_order_coeffs(W, lambda, params.eta, params.beta4_mode);

    const double p = kPi / 12.0;
    const double one_eps = 1.0 + eps;
    const double C1 = std::sqrt(
        c.tau5 * std::pow(p, 2.0 / 15.0) * std::pow(one_eps, 2.0 / 3.0)
            * std::pow(j, 5.0 / 12.0) / std::pow(phi, 0.25)
        + c.gamma5 * std::pow(p, 0.2) * one_eps * std::sqrt(j) / std::sqrt(phi)
            / std::pow(t, 1.0 / 20.0)
        + c.omega5 * std::pow(p, 0.2) * one_eps * std::pow(j, 0.25) / std::pow(phi, 0.75)
            / std::pow(t, 0.1)
        + c.beta5 * std::pow(p, 4.0 / 15.0) * std::pow(one_eps, 4.0 / 3.0) * std::cbrt(j)
            / phi / std::pow(t, 0.15));
    const double eta5 = params.eta.eta5;
    const double C2 = std::sqrt(
        eta5 * c.alpha5 * std::pow(p, 1.0 / 15.0) * std::cbrt(one_eps)
            / (std::pow(j, 2.0 / 3.0) * phi)
        + eta5 * c.tau5 * std::pow(p, 0.2) * one_eps / (std::pow(j, 0.25) * std::pow(phi, 1.25))
            / std::pow(t, 1.0 / 20.0)
        + eta5 * c.gamma5 * std::pow(p, 4.0 / 15.0) * std::pow(one_eps, 4.0 / 3.0)
            / (std::pow(j, 1.0 / 6.0) * std::pow(phi, 1.5)) / std::pow(t, 0.1)
        + eta5 * c.omega5 * std::pow(p, 4.0 / 15.0) * std::pow(one_eps, 4.0 / 3.0)
            / (std::pow(j, 5.0 / 12.0) * std::pow(phi, 1.75)) / std::pow(t, 0.15)
        + eta5 * c.beta5 * std::cbrt(p) * std::pow(one_eps, 5.0 / 3.0)
            / (phi * phi * std::cbrt(j)) / std::pow(t, 0.2));

    const double d1 = std::pow(12.0 / kPi, 1.0 / 30.0) * eps / std::pow(j, 1.0 / 6.0);
    const double d2 = std::pow(12.0 / kPi, 1.0 / 30.0) / std::pow(j, 7.0 / 6.0);
    const double sqrt_a5 = std::sqrt(c.alpha5);

    AggregateCoeffs a;
    a.C1 = C1;
    a.C2 = C2;
    a.alpha5 = c.alpha5;
    a.A1 = UpperValue::closed_form(d2 * C2 * geo_decreasing(eps, 1.25));
    a.A2 = UpperValue::closed_form(d2 * C1 * geo_decreasing(eps, 11.0 / 12.0));
    a.A3 = UpperValue::closed_form(d2 * sqrt_a5 * geo_decreasing(eps, 7.0 / 6.0));
    a.A4 = UpperValue::closed_form(d1 * C2 * geo_decreasing(eps, 0.25));
    a.A5 = UpperValue::closed_form(
        d1 * sqrt_a5 * geo_decreasing(eps, 1.0 / 6.0)
        + d1 * C1 * std::pow(one_eps, 1.0 / 12.0)
              / (std::pow(kTwoPi, 1.0 / 24.0) * std::pow(j, 1.0 / 12.0)
                 * (std::pow(one_eps, 1.0 / 12.0) - 1.0)));
    return a;
}

UpperValue F_function(const PipelineParams& params, double t) {
    const AggregateCoeffs a = aggregate_tail_bound(params, t);
    const double jt = params.j * std::pow(t, 0.2);
    if (!(jt > 2.0)) throw std::domain_error("F_function: requires j t^{1/5} > 2");
    const double f = kEulerGamma + std::log(static_cast<double>(params.j))
                   + 1.0 / (jt - 2.0)
                   + a.A1.value() * std::pow(t, -0.3)
                   + a.A2.value() * std::pow(t, -9.0 / 40.0)
                   + a.A3.value() * std::pow(t, -0.2)
                   + a.A4.value() * std::pow(t, -0.1)
                   + a.A5.value()
                   + g_chi(t) / std::sqrt(kTwoPi)
                   + rs_remainder(t).value();
    return UpperValue::closed_form(f);
}

BoundBreakdown pipeline_breakdown(const PipelineParams& params) {
    const double t0 = params.t0;
    const AggregateCoeffs a = aggregate_tail_bound(params, t0);
    BoundBreakdown b;
    b.leading_coeff = 0.2;
    b.additive_constant = (kEulerGamma + std::log(static_cast<double>(params.j))
                           + a.A5.value() + g_chi(t0) / std::sqrt(kTwoPi)
                           + rs_remainder(t0).value()) * (1.0 + kUpperInflation);
    b.tail_terms = {
        {a.A1.value(), -0.3},
        {a.A2.value(), -9.0 / 40.0},
        {a.A3.value(), -0.2},
        {1.0 / (params.j - 2.0 * std::pow(t0, -0.2)), -0.2},
        {a.A4.value(), -0.1},
    };
    b.valid_from = t0;
    return b;
}

double stitch_constant(const PipelineParams& params) {
    params.validate();
    const double from_pipeline = F_function(params, params.t0).value();
    const double from_half_log = kHalfLogConstant + 0.3 * std::log(params.t0);
    const double c = std::max(from_pipeline, from_half_log) * (1.0 + kUpperInflation);
    return std::ceil(c * 1e4) / 1e4;
}

OneLineBoundResult zeta_one_line_bound(double t, const PipelineParams& params) {
    if (!(t >= kLogValidFrom)) throw std::domain_error("zeta_one_line_bound: requires t >= 3");
    params.validate();
    OneLineBoundResult r;
    const double lt = std::log(t);
    r.bound_log = lt;
    r.half_log_valid = t >= kHalfLogValidFrom;
    r.bound_half_log = 0.5 * lt + kHalfLogConstant;
    r.bound_fifth_log = 0.2 * lt + stitch_constant(params);

    double best = r.bound_log;
    BoundChoice which = BoundChoice::first_log;
    if (r.half_log_valid && r.bound_half_log < best) {
        best = r.bound_half_log;
        which = BoundChoice::second_half_log;
    }
    if (r.bound_fifth_log < best) {
        best = r.bound_fifth_log;
        which = BoundChoice::third_fifth_log;
    }
    r.value = UpperValue::exact(best);
    r.which = which;
    switch (which) {
        case BoundChoice::first_log:
            r.breakdown = {1.0, 0.0, {}, kLogValidFrom};
            break;
        case BoundChoice::second_half_log:
            r.breakdown = {0.5, kHalfLogConstant, {}, kHalfLogValidFrom};
            break;
        case BoundChoice::third_fifth_log:
            r.breakdown = {0.2, stitch_constant(params), {}, kLogValidFrom};
            break;
    }
    return r;
}

}  // namespace zeta1
