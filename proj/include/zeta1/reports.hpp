#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "zeta1/config.hpp"
#include "zeta1/optimizer.hpp"

namespace zeta1 {

inline constexpr int kReportSchemaVersion = 1;

enum class VerifyFamily { min_bound, triangle };

struct VerifyOptions {
    double t_min = 3.0;
    double t_max = 1e5;
    int samples = 100;
    std::uint64_t seed = 1;
    VerifyFamily family = VerifyFamily::min_bound;
};

struct LemmaCheckOptions {
    int order = 1;
    int trials = 1000;
    std::uint64_t seed = 1;
    std::int64_t max_length = 100000;
};

/// All three bounds at t, the minimum, the chosen branch, the breakdown.
nlohmann::json bound_report(double t, const RunConfig& config);

/// zeta_direct vs the selected bound family over a log grid plus seeded
/// random points; "violations" counts samples with |zeta| + error > bound.
nlohmann::json verify_report(const VerifyOptions& opt, const RunConfig& config);

/// Randomized derivative-test soundness sweep for one order.
nlohmann::json lemma_check_report(const LemmaCheckOptions& opt, const RunConfig& config);

/// Derived pipeline constants under both beta4 modes, side by side with
/// the published reference values.
nlohmann::json constants_report(const RunConfig& config);

/// Runs the optimizer and summarizes best params / value / trace.
nlohmann::json optimize_report(const SearchSpec& spec, const RunConfig& config);

/// Human-readable rendering keyed on the report's "report" field.
std::string report_to_text(const nlohmann::json& report);

}  // namespace zeta1
