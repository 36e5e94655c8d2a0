// coho: run named verification scenarios and report PASS/FAIL.
//
//   coho run <scenario> [--max-degree N] [--seed S] [--format text|csv|json]
//                       [--out PATH] [--slow] [--config FILE] [--fixture-dir DIR]
//   coho list
//   coho discover [--seed S] [--fixture-dir DIR]
//
// Exit status is 0 exactly when the scenario verdict is PASS.

#include <CLI11.hpp>
#include <coho/scenarios.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"verification workbench for the mod-2 cohomology computations"};
    app.require_subcommand(1);

    std::string name, config_file;
    coho::CliOptions base;   // values from --config
    coho::CliOptions flags;  // values given on the command line
    bool flag_slow = false;

    CLI::App* run = app.add_subcommand("run", "run one scenario and print its report");
    run->add_option("scenario", name, "scenario name (see 'coho list')")->required();
    run->add_option("--max-degree", flags.params.max_degree, "override the degree range");
    run->add_option("--seed", flags.params.seed, "seed for subgroup discovery");
    run->add_option("--format", flags.format, "report format: text, csv, or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    run->add_option("--out", flags.out, "also write the report to this file");
    run->add_flag("--slow", flag_slow, "allow the slow full-range computation");
    run->add_option("--config", config_file, "key = value configuration file");
    run->add_option("--fixture-dir", flags.params.fixture_dir,
                    "fixture directory (default: COHO_FIXTURE_DIR)");

    CLI::App* list = app.add_subcommand("list", "list scenarios with tier and anchor");

    uint64_t disc_seed = 2026;
    std::string disc_dir;
    CLI::App* disc = app.add_subcommand("discover", "search for the subgroup pair afresh "
                                                    "and rewrite the fixtures");
    disc->add_option("--seed", disc_seed, "search seed");
    disc->add_option("--fixture-dir", disc_dir, "fixture directory (default: COHO_FIXTURE_DIR)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (list->parsed()) {
            std::cout << coho::list_scenarios();
            return 0;
        }
        if (disc->parsed()) {
            coho::ScenarioParams p;
            p.seed = disc_seed;
            p.slow = true;
            p.fixture_dir = disc_dir;
            coho::Report r = coho::run_scenario("discover-subgroups", p);
            std::cout << coho::render_text(r);
            return r.pass() ? 0 : 1;
        }

        coho::CliOptions opt;
        if (!config_file.empty()) coho::apply_config(coho::parse_config(config_file), opt);
        if (run->count("--max-degree")) opt.params.max_degree = flags.params.max_degree;
        if (run->count("--seed")) opt.params.seed = flags.params.seed;
        if (run->count("--format")) opt.format = flags.format;
        if (run->count("--out")) opt.out = flags.out;
        if (flag_slow) opt.params.slow = true;
        if (run->count("--fixture-dir")) opt.params.fixture_dir = flags.params.fixture_dir;

        coho::Report r = coho::run_scenario(name, opt.params);
        std::cout << coho::render_report(r, opt.format);
        if (opt.format == "json") std::cout << "\n";
        if (!opt.out.empty()) coho::export_report(r, opt.format, opt.out);
        return r.pass() ? 0 : 1;
    } catch (const coho::UnknownScenario& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const coho::FixtureError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "hint: 'coho discover --seed 2026' rebuilds the group fixtures\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
