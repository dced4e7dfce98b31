#include "rootcontract/config.hpp"

#include "rootcontract/error.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace rootcontract {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_positive(std::string_view key, std::string_view value) {
    int out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size() || out <= 0)
        throw ValidationError("config " + std::string(key) + " must be a positive integer", std::string(value));
    return out;
}

}  // namespace

Config parse_config(std::string_view text) {
    Config cfg;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        std::string_view line = raw;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ValidationError("config line must be key=value", std::string(line));
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key == "rank_cap") cfg.rank_cap = parse_positive(key, value);
        else if (key == "sweep_n_extra") cfg.sweep_n_extra = parse_positive(key, value);
        else if (key == "sweep_d_max") cfg.sweep_d_max = parse_positive(key, value);
        else if (key == "grid_bound") cfg.grid_bound = parse_positive(key, value);
        else throw ValidationError("unknown config key", std::string(key));
    }
    return cfg;
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("config file must be readable", path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

Config resolve_config(const std::optional<std::filesystem::path>& explicit_path) {
    if (explicit_path) return load_config(*explicit_path);
    if (const char* env = std::getenv("ROOTCONTRACT_CONFIG"); env && *env) return load_config(env);
    return {};
}

}  // namespace rootcontract
