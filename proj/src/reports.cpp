#include "zeta1/reports.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>
#include <vector>

#include "zeta1/gamma_chi.hpp"
#include "zeta1/lemma_check.hpp"
#include "zeta1/one_line.hpp"
#include "zeta1/oracles.hpp"

namespace zeta1 {

namespace {

using nlohmann::json;

int resolve_threads(const RunConfig& config) {
    if (config.threads > 0) return config.threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 16u));
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    if (threads <= 1 || n <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    const int k = std::min(threads, n);
    pool.reserve(k);
    for (int i = 0; i < k; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

const char* which_name(BoundChoice c) {
    switch (c) {
        case BoundChoice::first_log: return "first";
        case BoundChoice::second_half_log: return "second";
        case BoundChoice::third_fifth_log: return "third";
    }
    return "?";
}

json breakdown_to_json(const BoundBreakdown& b) {
    json tails = json::array();
    for (const auto& term : b.tail_terms)
        tails.push_back({{"coefficient", term.coefficient}, {"t_power", term.t_power}});
    return {{"leading_coeff", b.leading_coeff},
            {"additive_constant", b.additive_constant},
            {"tail_terms", tails},
            {"valid_from", b.valid_from}};
}

json params_to_json(const PipelineParams& p) {
    return {{"epsilon", p.epsilon}, {"j", p.j},
            {"eta3", p.eta.eta3},   {"eta4", p.eta.eta4}, {"eta5", p.eta.eta5},
            {"t0", p.t0},           {"beta4_mode", to_string(p.beta4_mode)}};
}

/// Half log grid, half seeded log-uniform random, sorted ascending.
std::vector<double> sample_points(double t_min, double t_max, int samples, std::uint64_t seed) {
    std::vector<double> ts;
    ts.reserve(samples);
    const int grid = samples / 2;
    const double llo = std::log(t_min), lhi = std::log(t_max);
    for (int i = 0; i < grid; ++i)
        ts.push_back(std::exp(llo + (lhi - llo) * (grid == 1 ? 0.5 : double(i) / (grid - 1))));
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(llo, lhi);
    for (int i = grid; i < samples; ++i) ts.push_back(std::exp(u(rng)));
    std::sort(ts.begin(), ts.end());
    return ts;
}

json constants_for_mode(const PipelineParams& base, Beta4Mode mode) {
    PipelineParams p = base;
    p.beta4_mode = mode;
    const AggregateCoeffs a = aggregate_tail_bound(p, p.t0);
    const double const_part = kEulerGamma + std::log(static_cast<double>(p.j)) + a.A5.value()
                            + g_chi(p.t0) / std::sqrt(kTwoPi) + rs_remainder(p.t0).value();
    return {{"beta4_mode", to_string(mode)},
            {"A1", a.A1.value()},
            {"A2", a.A2.value()},
            {"A3", a.A3.value()},
            {"A4", a.A4.value()},
            {"A5", a.A5.value()},
            {"C1", a.C1},
            {"C2", a.C2},
            {"alpha5", a.alpha5},
            {"constant_part", const_part},
            {"F_at_t0", F_function(p, p.t0).value()},
            {"stitch_constant", stitch_constant(p)}};
}

}  // namespace

json bound_report(double t, const RunConfig& config) {
    const OneLineBoundResult r = zeta_one_line_bound(t, config.params);
    json bounds = json::array();
    bounds.push_back({{"which", "first"}, {"value", r.bound_log}, {"valid", true}});
    bounds.push_back(
        {{"which", "second"}, {"value", r.bound_half_log}, {"valid", r.half_log_valid}});
    bounds.push_back({{"which", "third"}, {"value", r.bound_fifth_log}, {"valid", true}});
    return {{"schema_version", kReportSchemaVersion},
            {"report", "bound"},
            {"t", t},
            {"bounds", bounds},
            {"min", r.value.value()},
            {"which", which_name(r.which)},
            {"breakdown", breakdown_to_json(r.breakdown)},
            {"pipeline_breakdown", breakdown_to_json(pipeline_breakdown(config.params))}};
}

json verify_report(const VerifyOptions& opt, const RunConfig& config) {
    if (!(opt.samples >= 1)) throw std::domain_error("verify: needs at least one sample");
    const double floor_t = opt.family == VerifyFamily::triangle ? kTwoPi + 0.5 : 3.0;
    if (!(opt.t_min >= floor_t) || !(opt.t_max > opt.t_min) || !(opt.t_max <= 1e8))
        throw std::domain_error("verify: t range must satisfy floor <= t_min < t_max <= 1e8");
    const auto start = std::chrono::steady_clock::now();
    const std::vector<double> ts = sample_points(opt.t_min, opt.t_max, opt.samples, opt.seed);

    struct Row {
        double t, zeta, err, bound, ratio;
        bool pass;
        std::string which;
    };
    std::vector<Row> rows(ts.size());
    parallel_for(static_cast<int>(ts.size()), resolve_threads(config), [&](int i) {
        const double t = ts[i];
        const ComplexOracleResult z = zeta_direct(t);
        Row row;
        row.t = t;
        row.zeta = std::abs(z.value);
        row.err = z.error_bound;
        if (opt.family == VerifyFamily::min_bound) {
            const OneLineBoundResult b = zeta_one_line_bound(t, config.params);
            row.bound = b.value.value();
            row.which = which_name(b.which);
        } else {
            row.bound = triangle_one_line_bound(t).evaluate(t);
            row.which = "triangle";
        }
        row.ratio = (row.zeta + row.err) / row.bound;
        row.pass = row.zeta + row.err <= row.bound;
        rows[i] = row;
    });

    json samples = json::array();
    int violations = 0;
    double max_ratio = 0.0;
    for (const Row& row : rows) {
        if (!row.pass) ++violations;
        max_ratio = std::max(max_ratio, row.ratio);
        samples.push_back({{"t", row.t},
                           {"zeta", row.zeta},
                           {"oracle_error", row.err},
                           {"bound", row.bound},
                           {"which", row.which},
                           {"ratio", row.ratio},
                           {"pass", row.pass}});
    }
    return {{"schema_version", kReportSchemaVersion},
            {"report", "verify"},
            {"family", opt.family == VerifyFamily::min_bound ? "min" : "triangle"},
            {"t_min", opt.t_min},
            {"t_max", opt.t_max},
            {"seed", opt.seed},
            {"samples", samples},
            {"violations", violations},
            {"max_ratio", max_ratio},
            {"runtime_ms", elapsed_ms(start)}};
}

json lemma_check_report(const LemmaCheckOptions& opt, const RunConfig& config) {
    if (opt.order < 1 || opt.order > 5)
        throw std::domain_error("lemma-check: order must be in 1..5");
    if (opt.trials < 1) throw std::domain_error("lemma-check: trials must be >= 1");
    const auto start = std::chrono::steady_clock::now();
    std::vector<LemmaOutcome> outs(opt.trials);
    parallel_for(opt.trials, resolve_threads(config), [&](int i) {
        std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * (i + 1)));
        const LemmaInstance inst = random_lemma_instance(opt.order, rng, opt.max_length);
        outs[i] = check_lemma_instance(inst, config.params.eta, config.params.beta4_mode);
    });

    int violations = 0;
    int pt_not_above_cg = 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    double sum_log_ratio = 0.0;
    double max_ratio = 0.0;
    for (const LemmaOutcome& o : outs) {
        if (!o.pass) ++violations;
        if (opt.order == 2 && o.bound_alt <= o.bound) ++pt_not_above_cg;
        min_ratio = std::min(min_ratio, o.ratio);
        max_ratio = std::max(max_ratio, o.ratio);
        sum_log_ratio += std::log(o.ratio);
    }
    json report = {{"schema_version", kReportSchemaVersion},
                   {"report", "lemma_check"},
                   {"order", opt.order},
                   {"trials", opt.trials},
                   {"seed", opt.seed},
                   {"max_length", opt.max_length},
                   {"violations", violations},
                   {"min_ratio", min_ratio},
                   {"max_ratio", max_ratio},
                   {"geomean_ratio", std::exp(sum_log_ratio / opt.trials)},
                   {"runtime_ms", elapsed_ms(start)}};
    if (opt.order == 2)
        report["platt_trudgian_leq_cheng_graham_fraction"] =
            static_cast<double>(pt_not_above_cg) / opt.trials;
    return report;
}

json constants_report(const RunConfig& config) {
    return {{"schema_version", kReportSchemaVersion},
            {"report", "constants"},
            {"params", params_to_json(config.params)},
            {"modes", json::array({constants_for_mode(config.params, Beta4Mode::proof_18_10),
                                   constants_for_mode(config.params, Beta4Mode::statement_18_20)})},
            {"reference",
             {{"constant_part", 43.9259},
              {"A1", 0.035264},
              {"A2", 0.255693},
              {"A3", 0.0552644},
              {"A4", 2.96078},
              {"stitch_constant", 44.02}}}};
}

json optimize_report(const SearchSpec& spec, const RunConfig& config) {
    (void)config;
    const auto start = std::chrono::steady_clock::now();
    const OptimizeResult r = optimize(spec);
    json trace_head = json::array();
    const std::size_t head = std::min<std::size_t>(r.trace.size(), 5);
    for (std::size_t i = 0; i < head; ++i)
        trace_head.push_back({{"params", params_to_json(r.trace[i].params)},
                              {"value", r.trace[i].value}});
    return {{"schema_version", kReportSchemaVersion},
            {"report", "optimize"},
            {"budget", spec.budget},
            {"seed", spec.seed},
            {"evaluations", r.trace.size()},
            {"budget_exhausted", r.budget_exhausted},
            {"best_value", r.best_value},
            {"best_params", params_to_json(r.best_params)},
            {"trace_head", trace_head},
            {"runtime_ms", elapsed_ms(start)}};
}

std::string report_to_text(const json& report) {
    std::ostringstream out;
    out.precision(10);
    const std::string kind = report.at("report").get<std::string>();
    if (kind == "bound") {
        out << "t = " << report.at("t").get<double>() << "\n";
        for (const auto& b : report.at("bounds")) {
            out << "  bound " << b.at("which").get<std::string>() << ": "
                << b.at("value").get<double>()
                << (b.at("valid").get<bool>() ? "" : "  (not valid at this t)") << "\n";
        }
        out << "  min = " << report.at("min").get<double>() << "  (which: "
            << report.at("which").get<std::string>() << ")\n";
        const auto& bd = report.at("breakdown");
        out << "  breakdown: " << bd.at("leading_coeff").get<double>() << " * log t + "
            << bd.at("additive_constant").get<double>() << ", valid from t = "
            << bd.at("valid_from").get<double>() << "\n";
    } else if (kind == "verify") {
        out << "verify family=" << report.at("family").get<std::string>() << " on ["
            << report.at("t_min").get<double>() << ", " << report.at("t_max").get<double>()
            << "], " << report.at("samples").size() << " samples\n";
        out << "  violations = " << report.at("violations").get<int>()
            << ", max |zeta|/bound = " << report.at("max_ratio").get<double>()
            << ", runtime " << report.at("runtime_ms").get<double>() << " ms\n";
    } else if (kind == "lemma_check") {
        out << "lemma-check order " << report.at("order").get<int>() << ", "
            << report.at("trials").get<int>() << " trials\n";
        out << "  violations = " << report.at("violations").get<int>()
            << ", bound/brute ratio min = " << report.at("min_ratio").get<double>()
            << ", geomean = " << report.at("geomean_ratio").get<double>()
            << ", max = " << report.at("max_ratio").get<double>() << "\n";
        if (report.contains("platt_trudgian_leq_cheng_graham_fraction"))
            out << "  platt_trudgian <= cheng_graham on "
                << 100.0 * report.at("platt_trudgian_leq_cheng_graham_fraction").get<double>()
                << "% of instances\n";
        out << "  runtime " << report.at("runtime_ms").get<double>() << " ms\n";
    } else if (kind == "constants") {
        const auto& ref = report.at("reference");
        out << "pipeline constants (derived vs reference)\n";
        for (const auto& mode : report.at("modes")) {
            out << "  mode " << mode.at("beta4_mode").get<std::string>() << ":\n";
            out << "    constant part = " << mode.at("constant_part").get<double>()
                << "   (reference " << ref.at("constant_part").get<double>() << ")\n";
            out << "    A1 = " << mode.at("A1").get<double>() << "   (reference "
                << ref.at("A1").get<double>() << ")\n";
            out << "    A2 = " << mode.at("A2").get<double>() << "   (reference "
                << ref.at("A2").get<double>() << ")\n";
            out << "    A3 = " << mode.at("A3").get<double>() << "   (reference "
                << ref.at("A3").get<double>() << ")\n";
            out << "    A4 = " << mode.at("A4").get<double>() << "   (reference "
                << ref.at("A4").get<double>() << ")\n";
            out << "    F(t0) = " << mode.at("F_at_t0").get<double>()
                << ", stitch constant = " << mode.at("stitch_constant").get<double>()
                << "   (reference " << ref.at("stitch_constant").get<double>() << ")\n";
        }
    } else if (kind == "optimize") {
        out << "optimize: " << report.at("evaluations").get<std::size_t>() << " evaluations"
            << (report.at("budget_exhausted").get<bool>() ? " (budget exhausted)" : "") << "\n";
        out << "  best value = " << report.at("best_value").get<double>() << "\n";
        const auto& p = report.at("best_params");
        out << "  best params: epsilon=" << p.at("epsilon").get<double>()
            << " j=" << p.at("j").get<int>() << " eta3=" << p.at("eta3").get<double>()
            << " eta4=" << p.at("eta4").get<double>() << " eta5=" << p.at("eta5").get<double>()
            << " t0=" << p.at("t0").get<double>()
            << " beta4_mode=" << p.at("beta4_mode").get<std::string>() << "\n";
    } else {
        out << report.dump(2) << "\n";
    }
    return out.str();
}

}  // namespace zeta1
