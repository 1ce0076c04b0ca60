#include <cstdio>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "zeta1/config.hpp"
#include "zeta1/reports.hpp"

namespace {

using zeta1::RunConfig;

struct ParamFlags {
    std::optional<double> epsilon, eta3, eta4, eta5, t0;
    std::optional<int> j;
    std::optional<std::string> beta4_mode;

    void apply(zeta1::PipelineParams& p) const {
        if (epsilon) p.epsilon = *epsilon;
        if (j) p.j = *j;
        if (eta3) p.eta.eta3 = *eta3;
        if (eta4) p.eta.eta4 = *eta4;
        if (eta5) p.eta.eta5 = *eta5;
        if (t0) p.t0 = *t0;
        if (beta4_mode) p.beta4_mode = zeta1::beta4_mode_from_string(*beta4_mode);
    }
};

void emit(const nlohmann::json& report, const RunConfig& config) {
    if (config.format == zeta1::OutputFormat::json)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << zeta1::report_to_text(report);
}

int exit_code_for(const nlohmann::json& report) {
    if (report.contains("violations") && report.at("violations").get<int>() > 0) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit bounds for |zeta(1+it)|: derivative tests, one-line "
                 "decomposition, dyadic pipeline, verification oracles"};
    app.require_subcommand(1);

    std::optional<std::string> config_path;
    std::string format = "text";
    int threads = 0;
    ParamFlags flags;
    app.add_option("--config", config_path, "config file (flat key=value)");
    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", threads, "worker threads (0 = auto)");
    app.add_option("--epsilon", flags.epsilon, "dyadic ratio parameter");
    app.add_option("--j", flags.j, "split parameter j");
    app.add_option("--eta3", flags.eta3, "order-3 free parameter");
    app.add_option("--eta4", flags.eta4, "order-4 free parameter");
    app.add_option("--eta5", flags.eta5, "order-5 free parameter");
    app.add_option("--t0", flags.t0, "stitching anchor t0");
    app.add_option("--beta4-mode", flags.beta4_mode,
                   "beta4 leading rational: proof_18_10 or statement_18_20")
        ->check(CLI::IsMember({"proof_18_10", "statement_18_20"}));

    auto* cmd_bound = app.add_subcommand("bound", "evaluate the three bounds at t");
    double bound_t = 0.0;
    cmd_bound->add_option("--t", bound_t, "point of evaluation")->required();

    auto* cmd_verify = app.add_subcommand("verify", "zeta oracle vs bound sweep");
    zeta1::VerifyOptions vopt;
    std::string family = "min";
    cmd_verify->add_option("--t-min", vopt.t_min, "lower end of the sweep");
    cmd_verify->add_option("--t-max", vopt.t_max, "upper end of the sweep");
    cmd_verify->add_option("--samples", vopt.samples, "number of sample points");
    cmd_verify->add_option("--seed", vopt.seed, "seed for the random half of the grid");
    cmd_verify->add_option("--bound", family, "bound family: min or triangle")
        ->check(CLI::IsMember({"min", "triangle"}));

    auto* cmd_lemma = app.add_subcommand("lemma-check", "derivative-test soundness sweep");
    zeta1::LemmaCheckOptions lopt;
    cmd_lemma->add_option("--order", lopt.order, "derivative-test order 1..5")->required();
    cmd_lemma->add_option("--trials", lopt.trials, "number of randomized instances");
    cmd_lemma->add_option("--seed", lopt.seed, "instance seed");
    cmd_lemma->add_option("--max-length", lopt.max_length, "largest interval length");

    auto* cmd_constants = app.add_subcommand("constants", "derived pipeline constants");

    auto* cmd_optimize = app.add_subcommand("optimize", "search for a smaller stitched constant");
    int budget = 10000;
    std::uint64_t opt_seed = 0;
    cmd_optimize->add_option("--budget", budget, "max objective evaluations");
    cmd_optimize->add_option("--seed", opt_seed, "restart jitter seed");

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig config;
        config.params = zeta1::load_params(config_path);
        flags.apply(config.params);
        config.params.validate();
        config.format = format == "json" ? zeta1::OutputFormat::json : zeta1::OutputFormat::text;
        config.threads = threads;

        nlohmann::json report;
        if (*cmd_bound) {
            report = zeta1::bound_report(bound_t, config);
        } else if (*cmd_verify) {
            vopt.family = family == "triangle" ? zeta1::VerifyFamily::triangle
                                               : zeta1::VerifyFamily::min_bound;
            report = zeta1::verify_report(vopt, config);
        } else if (*cmd_lemma) {
            report = zeta1::lemma_check_report(lopt, config);
        } else if (*cmd_constants) {
            report = zeta1::constants_report(config);
        } else if (*cmd_optimize) {
            zeta1::SearchSpec spec = zeta1::SearchSpec::around_defaults();
            spec.budget = budget;
            spec.seed = opt_seed;
            report = zeta1::optimize_report(spec, config);
        }
        emit(report, config);
        return exit_code_for(report);
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
