#pragma once

#include <map>
#include <optional>
#include <string>

#include "zeta1/pipeline.hpp"

namespace zeta1 {

enum class OutputFormat { text, json };

/// Environment variable naming a config file applied before CLI flags.
inline constexpr const char* kConfigEnvVar = "ZETA1_CONFIG";

struct RunConfig {
    PipelineParams params;
    OutputFormat format = OutputFormat::text;
    int threads = 0;  // 0 = hardware concurrency
};

std::string to_string(Beta4Mode mode);
Beta4Mode beta4_mode_from_string(const std::string& s);

/// Flat key-value config format: one "key = value" per line, '#' comments.
/// Keys: epsilon, j, eta3, eta4, eta5, t0, beta4_mode.
std::map<std::string, std::string> parse_kv_file(const std::string& path);
std::map<std::string, std::string> parse_kv_text(const std::string& text);

/// Apply parsed keys onto params; throws on unknown keys or bad values.
void apply_config(PipelineParams& params, const std::map<std::string, std::string>& kv);

/// Defaults, then the file named by ZETA1_CONFIG (when set), then the
/// explicit path (when given). CLI flags are applied on top by the caller.
PipelineParams load_params(const std::optional<std::string>& config_path);

}  // namespace zeta1
