#pragma once

#include "rootcontract/config.hpp"
#include "rootcontract/groups.hpp"
#include "rootcontract/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rootcontract {

/// Raw instance parameters as given on the command line.
struct InstanceArgs {
    std::optional<std::string> family;  // family name, kind letter or alias
    std::optional<std::string> kind;    // A, B, C, BC, D
    std::optional<int> rank;
    std::optional<int> n;
    std::optional<int> d;
    std::string field{"real"};
};

struct AliasEntry {
    std::string pattern;
    std::string meaning;
};

/// Named real, quaternionic and complex groups accepted in place of a family.
const std::vector<AliasEntry>& alias_table();
std::optional<GroupInstance> resolve_alias(std::string_view name);

/// Builds and validates the instance. A kind letter with field=complex gives
/// the complex simple group of that type.
GroupInstance resolve_instance(const InstanceArgs& args);

/// which = 1: root-system constants for a kind and rank.
/// which = 2: multiplicities of an instance.
/// which = 3: Q, D, M and the inequalities of an instance.
Report cmd_table(int which, const InstanceArgs& args);

Report cmd_verdict(const InstanceArgs& args, int grid_bound);

/// Throws CapExceeded when rank_max exceeds config.rank_cap.
Report cmd_sweep(const InstanceArgs& args, int rank_max, const Config& config);

Report cmd_admissible(const InstanceArgs& args);

/// Formula path against the brute-force oracle. `gamma` is 1-based.
/// Throws InvariantViolation on any disagreement.
Report cmd_oracle_check(const InstanceArgs& args, std::optional<int> gamma, int grid_bound);

}  // namespace rootcontract
