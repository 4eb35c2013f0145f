// mbqn: batch front end for compatibility queries, the concurrency
// experiment and its plot.
//
//   mbqn check --topology path:7 --tasks 1->3,5->6 --mode worst_case
//   mbqn simulate --sizes 4,8,16 --trials 10000 --seed 1 --out stats.csv
//   mbqn plot --stats stats.csv --out stats.svg

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mbqn/cli_io.hpp"
#include "mbqn/error.hpp"

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Task compatibility on measurement-based quantum network resource states"};
    app.require_subcommand(1);

    std::string topology = "path:7", tasks, mode = "worst_case";
    auto* check = app.add_subcommand("check", "Decide compatibility of a concurrent task set");
    check->add_option("--topology", topology, "path:<n>, ring:<n>, triangle or custom:<file>");
    check->add_option("--tasks", tasks, "Comma separated u->v literals")->required();
    check->add_option("--mode", mode, "worst_case, gk:<k> or partial:<dt>");

    mbqn::ExperimentConfig cfg;
    std::string sizes, measures = "baseline,worst_case,gk:1", out_path, format = "csv", sim_topology = "path";
    auto* simulate = app.add_subcommand("simulate", "Run the stochastic-arrival concurrency experiment");
    simulate->add_option("--sizes", sizes, "Comma separated network sizes");
    simulate->add_option("--trials", cfg.trials, "Trials per (N, measure)");
    simulate->add_option("--seed", cfg.seed, "Base seed");
    simulate->add_option("--measure", measures, "Comma separated: baseline, worst_case, gk:<k>");
    simulate->add_option("--shared-streams", cfg.shared_streams, "Share task sequences across measures");
    simulate->add_option("--topology", sim_topology, "path or ring");
    simulate->add_option("--workers", cfg.workers, "Worker threads (0: all cores)");
    simulate->add_option("--out", out_path, "Output file")->required();
    simulate->add_option("--format", format, "csv or json");

    std::string stats_path, svg_path;
    auto* plot = app.add_subcommand("plot", "Render simulate output as SVG");
    plot->add_option("--stats", stats_path, "CSV written by simulate")->required();
    plot->add_option("--out", svg_path, "SVG output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            return mbqn::cli::cmd_check(mbqn::cli::parse_topology(topology), mbqn::parse_task_list(tasks),
                                        mbqn::cli::parse_check_mode(mode), std::cout);
        }
        if (simulate->parsed()) {
            if (!sizes.empty()) {
                cfg.sizes.clear();
                for (const auto& s : split_commas(sizes)) cfg.sizes.push_back(std::stoi(s));
            }
            cfg.measures.clear();
            for (const auto& m : split_commas(measures)) cfg.measures.push_back(mbqn::parse_measure(m));
            cfg.topology = sim_topology;
            return mbqn::cli::cmd_simulate(cfg, out_path, mbqn::cli::parse_format(format));
        }
        if (plot->parsed()) return mbqn::cli::cmd_plot(stats_path, svg_path);
    } catch (const mbqn::Error& e) {
        std::cerr << "error (" << mbqn::to_string(e.code()) << "): " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
