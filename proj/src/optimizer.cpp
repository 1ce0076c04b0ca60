#include "zeta1/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace zeta1 {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

double geo_mid(const ParamRange& r) { return std::sqrt(r.lo * r.hi); }

struct Searcher {
    const SearchSpec& spec;
    OptimizeResult result;
    int evals = 0;

    bool exhausted() const { return evals >= spec.budget; }

    double eval(const PipelineParams& p) {
        if (exhausted()) {
            result.budget_exhausted = true;
            return kInfinity;
        }
        ++evals;
        const double v = evaluate_objective(p);
        result.trace.push_back({p, v});
        if (v < result.best_value) {
            result.best_value = v;
            result.best_params = p;
        }
        return v;
    }

    // Coordinates: epsilon, eta3, eta4, eta5, t0 (t0 stepped in log space).
    void coordinate_descent(PipelineParams start) {
        PipelineParams cur = start;
        double cur_v = eval(cur);
        double step = 1.30;
        while (step > 1.0005 && !exhausted()) {
            bool improved = false;
            for (int coord = 0; coord < 5 && !exhausted(); ++coord) {
                for (double factor : {step, 1.0 / step}) {
                    PipelineParams cand = cur;
                    switch (coord) {
                        case 0: cand.epsilon = cur.epsilon * factor; break;
                        case 1: cand.eta.eta3 = cur.eta.eta3 * factor; break;
                        case 2: cand.eta.eta4 = cur.eta.eta4 * factor; break;
                        case 3: cand.eta.eta5 = cur.eta.eta5 * factor; break;
                        case 4:
                            cand.t0 = std::exp(std::log(cur.t0)
                                               + (factor > 1.0 ? 1.0 : -1.0) * std::log(step) * 40.0);
                            break;
                    }
                    if (!in_range(cand)) continue;
                    const double v = eval(cand);
                    if (v < cur_v) {
                        cur = cand;
                        cur_v = v;
                        improved = true;
                        break;
                    }
                }
            }
            if (!improved) step = std::sqrt(step);
        }
    }

    bool in_range(const PipelineParams& p) const {
        return spec.epsilon.contains(p.epsilon) && spec.eta3.contains(p.eta.eta3)
            && spec.eta4.contains(p.eta.eta4) && spec.eta5.contains(p.eta.eta5)
            && spec.t0.contains(p.t0);
    }
};

}  // namespace

SearchSpec SearchSpec::around_defaults() {
    const PipelineParams d;
    SearchSpec s;
    s.epsilon = {d.epsilon / 4.0, std::min(1.0, d.epsilon * 4.0)};
    s.j_values = {30, 40, 50, 60, 70, 80, 100, 120};
    s.eta3 = {d.eta.eta3 / 4.0, d.eta.eta3 * 4.0};
    s.eta4 = {d.eta.eta4 / 4.0, d.eta.eta4 * 4.0};
    s.eta5 = {d.eta.eta5 / 4.0, d.eta.eta5 * 4.0};
    s.t0 = {d.t0 / 1e12, d.t0 * 1e4};
    return s;
}

bool SearchSpec::is_valid() const {
    return budget >= 1 && !j_values.empty()
        && epsilon.lo > 0.0 && epsilon.lo <= epsilon.hi
        && eta3.lo > 0.0 && eta3.lo <= eta3.hi
        && eta4.lo > 0.0 && eta4.lo <= eta4.hi
        && eta5.lo > 0.0 && eta5.lo <= eta5.hi
        && t0.lo > 0.0 && t0.lo <= t0.hi
        && std::all_of(j_values.begin(), j_values.end(), [](int j) { return j >= 2; });
}

double evaluate_objective(const PipelineParams& params) {
    if (!params.is_valid()) return kInfinity;
    return stitch_constant(params);
}

OptimizeResult optimize(const SearchSpec& spec) {
    if (!spec.is_valid()) throw std::domain_error("optimize: invalid SearchSpec");
    Searcher searcher{spec, {}, 0};
    searcher.result.best_value = kInfinity;
    searcher.result.best_params = PipelineParams{};

    // Stage 1: coarse (epsilon, j) grid at mid etas / mid t0.
    constexpr int kEpsGrid = 7;
    std::vector<PipelineParams> grid_best;
    for (int j : spec.j_values) {
        PipelineParams best_for_j;
        double best_v = kInfinity;
        for (int i = 0; i < kEpsGrid && !searcher.exhausted(); ++i) {
            PipelineParams p;
            p.j = j;
            p.epsilon = spec.epsilon.lo
                      * std::pow(spec.epsilon.hi / spec.epsilon.lo,
                                 static_cast<double>(i) / (kEpsGrid - 1));
            p.eta = {geo_mid(spec.eta3), geo_mid(spec.eta4), geo_mid(spec.eta5)};
            p.t0 = geo_mid(spec.t0);
            const double v = searcher.eval(p);
            if (v < best_v) {
                best_v = v;
                best_for_j = p;
            }
        }
        if (best_v < kInfinity) grid_best.push_back(best_for_j);
    }

    // Stage 2: coordinate descent from the best grid points (top 3 by value),
    // plus one seeded jitter restart from the overall best.
    std::sort(grid_best.begin(), grid_best.end(),
              [](const PipelineParams& a, const PipelineParams& b) {
                  return evaluate_objective(a) < evaluate_objective(b);
              });
    const std::size_t starts = std::min<std::size_t>(3, grid_best.size());
    for (std::size_t i = 0; i < starts && !searcher.exhausted(); ++i)
        searcher.coordinate_descent(grid_best[i]);

    if (!searcher.exhausted() && searcher.result.best_value < kInfinity) {
        std::mt19937_64 rng(spec.seed);
        std::uniform_real_distribution<double> jitter(-0.15, 0.15);
        PipelineParams p = searcher.result.best_params;
        p.epsilon = std::clamp(p.epsilon * std::exp(jitter(rng)), spec.epsilon.lo, spec.epsilon.hi);
        p.eta.eta3 = std::clamp(p.eta.eta3 * std::exp(jitter(rng)), spec.eta3.lo, spec.eta3.hi);
        p.eta.eta4 = std::clamp(p.eta.eta4 * std::exp(jitter(rng)), spec.eta4.lo, spec.eta4.hi);
        p.eta.eta5 = std::clamp(p.eta.eta5 * std::exp(jitter(rng)), spec.eta5.lo, spec.eta5.hi);
        searcher.coordinate_descent(p);
    }

    searcher.result.budget_exhausted = searcher.exhausted();
    return searcher.result;
}

}  // namespace zeta1
