#pragma once

#include <filesystem>
#include <optional>
#include <string_view>

namespace rootcontract {

struct Config {
    int rank_cap{64};
    /// Form families with no upper bound on n are swept up to n = 2r + this.
    int sweep_n_extra{4};
    int sweep_d_max{3};
    int grid_bound{4};
};

/// Line-oriented key=value; '#' starts a comment. Unknown keys and
/// non-positive values raise ValidationError.
Config parse_config(std::string_view text);
Config load_config(const std::filesystem::path& path);

/// Explicit path if given, else $ROOTCONTRACT_CONFIG if set, else defaults.
Config resolve_config(const std::optional<std::filesystem::path>& explicit_path);

}  // namespace rootcontract
