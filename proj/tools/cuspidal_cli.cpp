#include "cuspidal/commands.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>

namespace {

int emit(const cuspidal::CommandResult& r) {
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace cuspidal;

    CLI::App app{"Cuspidal divisors, modular units and cuspidal class groups of X_0(N)"};
    app.require_subcommand(1);

    std::int64_t level = 0;
    std::string expr, criterion = "thm17", which = "rational", range;
    bool json = false;
    std::int64_t max_level = 60;

    auto* cusps = app.add_subcommand("cusps", "list the cusps of X_0(N)");
    cusps->add_option("--level", level, "level N")->required();
    cusps->add_flag("--json", json, "JSON output");

    auto* divisor = app.add_subcommand("divisor", "divisor of an eta/F product");
    divisor->add_option("--level", level, "level N")->required();
    divisor->add_option("--expr", expr, "product, e.g. 'eta(1)^12 * eta(11)^-12'")->required();
    divisor->add_flag("--json", json, "JSON output");

    auto* check = app.add_subcommand("check", "decide modularity of a product");
    check->add_option("--level", level, "level N")->required();
    check->add_option("--expr", expr, "product")->required();
    check->add_option("--criterion", criterion, "ligozat, thm17 or thm19")
        ->check(CLI::IsMember({"ligozat", "thm17", "thm19"}));
    check->add_flag("--json", json, "JSON output");

    auto* group = app.add_subcommand("group", "invariant factors of a cuspidal group");
    group->add_option("--level", level, "level N")->required();
    group->add_option("--which", which, "full (C_N), rational (C(N)) or fixed (C_N(Q))")
        ->check(CLI::IsMember({"full", "rational", "fixed"}));
    group->add_flag("--json", json, "JSON output");

    auto* verify = app.add_subcommand("verify", "check C_N(Q) = C(N) at a level or over a range");
    auto* verify_level = verify->add_option("--level", level, "level N");
    verify->add_option("--range", range, "levels A..B")->excludes(verify_level);
    verify->add_flag("--json", json, "JSON output");

    auto* selftest = app.add_subcommand("selftest", "run the consistency suites");
    selftest->add_option("--max-level,--level", max_level, "largest level to test");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*cusps) return emit(cmd_cusps(level, json));
    if (*divisor) return emit(cmd_divisor(level, expr, json));
    if (*check) return emit(cmd_check(level, expr, *parse_criterion(criterion), json));
    if (*group) return emit(cmd_group(level, *parse_group_kind(which), json));
    if (*verify) {
        if (range.empty() && level == 0) {
            std::cerr << "verify needs --level or --range\n";
            return kExitUsage;
        }
        try {
            const auto [lo, hi] = range.empty() ? std::pair{level, level} : parse_range(range);
            return emit(cmd_verify(lo, hi, json));
        } catch (const std::invalid_argument& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    }
    if (*selftest) return emit(cmd_selftest(max_level));
    return kExitUsage;
}
