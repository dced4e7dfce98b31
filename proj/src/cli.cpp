#include "rootcontract/cli.hpp"

#include "rootcontract/commands.hpp"
#include "rootcontract/config.hpp"
#include "rootcontract/error.hpp"
#include "rootcontract/report.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace rootcontract::cli {

namespace {

struct Options {
    InstanceArgs instance;
    std::string format{"md"};
    std::optional<int> gamma;
    std::optional<int> grid_bound;
    std::optional<int> rank_max;
    std::optional<std::string> config;
    int table{0};
};

void add_instance_flags(CLI::App* cmd, Options& o) {
    cmd->add_option("--family", o.instance.family, "SL, SUh, SOq, Sp, SUht, SOqt, a kind letter, or an alias");
    cmd->add_option("--kind", o.instance.kind, "root-system kind: A, B, C, BC, D");
    cmd->add_option("--rank", o.instance.rank, "rank (Witt index for form families)");
    cmd->add_option("--n", o.instance.n, "number of variables of the form");
    cmd->add_option("--d", o.instance.d, "degree of the division algebra (SL)");
    cmd->add_option("--field", o.instance.field, "real, complex or nonarch")->capture_default_str();
    cmd->add_option("--format", o.format, "md, csv or json")->capture_default_str();
    cmd->add_option("--config", o.config, "config file (overrides ROOTCONTRACT_CONFIG)");
}

std::string alias_help() {
    std::string out = "Group aliases accepted by --family:\n";
    for (const auto& a : alias_table()) out += "  " + a.pattern + "  ->  " + a.meaning + "\n";
    return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Contraction criterion for second L^p-cohomology of semisimple groups"};
    app.footer(alias_help());
    app.require_subcommand(1);
    Options o;

    auto* table = app.add_subcommand("table", "render table 1, 2 or 3 for a concrete rank");
    table->add_option("which", o.table, "1, 2 or 3")->required();
    add_instance_flags(table, o);

    auto* verdict = app.add_subcommand("verdict", "search for a contracting witness");
    add_instance_flags(verdict, o);
    verdict->add_option("--grid-bound", o.grid_bound, "oracle scan grid bound");

    auto* sweep = app.add_subcommand("sweep", "verdicts over all valid (rank, n, d) up to a rank");
    add_instance_flags(sweep, o);
    sweep->add_option("--rank-max", o.rank_max, "largest rank swept (default 12)");

    auto* admissible = app.add_subcommand("admissible", "good roots and uniform vanishing");
    add_instance_flags(admissible, o);

    auto* check = app.add_subcommand("oracle-check", "compare formula path with the brute-force oracle");
    add_instance_flags(check, o);
    check->add_option("--gamma", o.gamma, "gamma as a 1-based simple-root index");
    check->add_option("--grid-bound", o.grid_bound, "oracle scan grid bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        const Config cfg = resolve_config(o.config ? std::optional<std::filesystem::path>(*o.config) : std::nullopt);
        const Format format = parse_format(o.format);
        const int grid = o.grid_bound.value_or(cfg.grid_bound);
        if (grid < 1) throw ValidationError("--grid-bound >= 1", std::to_string(grid));

        Report report;
        if (*table) report = cmd_table(o.table, o.instance);
        else if (*verdict) report = cmd_verdict(o.instance, grid);
        else if (*sweep) report = cmd_sweep(o.instance, o.rank_max.value_or(12), cfg);
        else if (*admissible) report = cmd_admissible(o.instance);
        else report = cmd_oracle_check(o.instance, o.gamma, grid);
        out << render(report, format);
        return 0;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace rootcontract::cli
