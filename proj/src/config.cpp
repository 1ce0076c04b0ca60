#include "zeta1/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zeta1 {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        throw std::invalid_argument("config: bad numeric value for " + key + ": " + value);
    }
    if (pos != value.size())
        throw std::invalid_argument("config: trailing characters in " + key + ": " + value);
    return v;
}

}  // namespace

std::string to_string(Beta4Mode mode) {
    return mode == Beta4Mode::proof_18_10 ? "proof_18_10" : "statement_18_20";
}

Beta4Mode beta4_mode_from_string(const std::string& s) {
    if (s == "proof_18_10") return Beta4Mode::proof_18_10;
    if (s == "statement_18_20") return Beta4Mode::statement_18_20;
    throw std::invalid_argument("config: unknown beta4_mode: " + s);
}

std::map<std::string, std::string> parse_kv_text(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("config: missing '=' on line " + std::to_string(lineno));
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty() || value.empty())
            throw std::invalid_argument("config: empty key or value on line " + std::to_string(lineno));
        kv[key] = value;
    }
    return kv;
}

std::map<std::string, std::string> parse_kv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_kv_text(ss.str());
}

void apply_config(PipelineParams& params, const std::map<std::string, std::string>& kv) {
    for (const auto& [key, value] : kv) {
        if (key == "epsilon") {
            params.epsilon = parse_double(key, value);
        } else if (key == "j") {
            const double v = parse_double(key, value);
            if (v != static_cast<int>(v))
                throw std::invalid_argument("config: j must be an integer");
            params.j = static_cast<int>(v);
        } else if (key == "eta3") {
            params.eta.eta3 = parse_double(key, value);
        } else if (key == "eta4") {
            params.eta.eta4 = parse_double(key, value);
        } else if (key == "eta5") {
            params.eta.eta5 = parse_double(key, value);
        } else if (key == "t0") {
            params.t0 = parse_double(key, value);
        } else if (key == "beta4_mode") {
            params.beta4_mode = beta4_mode_from_string(value);
        } else {
            throw std::invalid_argument("config: unknown key: " + key);
        }
    }
}

PipelineParams load_params(const std::optional<std::string>& config_path) {
    PipelineParams params;
    if (const char* env = std::getenv(kConfigEnvVar); env && *env)
        apply_config(params, parse_kv_file(env));
    if (config_path) apply_config(params, parse_kv_file(*config_path));
    return params;
}

}  // namespace zeta1
