#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "mbqn/graph.hpp"
#include "mbqn/montecarlo.hpp"
#include "mbqn/task_protocol.hpp"
#include "mbqn/timing_race.hpp"

namespace mbqn::cli {

struct TopologySpec {
    enum class Builder { Path, Ring, Triangle, Custom };

    Builder builder = Builder::Path;
    int n = 0;
    std::string literal;  // graph literal text for Builder::Custom

    Graph build() const;
};

// "path:<n>", "ring:<n>", "triangle", or "custom:<file>" (graph literal file).
TopologySpec parse_topology(std::string_view text);

struct CheckMode {
    enum class Kind { WorstCase, Gk, Partial };

    Kind kind = Kind::WorstCase;
    int k = 0;
    Tick dt = 0;
};

// "worst_case", "gk:<k>", "partial:<dt>"
CheckMode parse_check_mode(std::string_view text);

enum class OutputFormat { Csv, Json };

OutputFormat parse_format(std::string_view text);

// Column order of the stats table.
inline constexpr std::string_view kCsvHeader = "n,measure,mean,sem,trials,seed";

std::string to_csv(const ExperimentStats& stats);
std::string to_json(const ExperimentStats& stats);
// Errors name the missing column or the offending line/column.
ExperimentStats parse_csv(std::string_view text);

// Shortest decimal form that reads back to the same double.
std::string format_double(double x);

// Mean-vs-N curve per measure with a +/- 1 sem band, as standalone SVG.
std::string render_svg(const ExperimentStats& stats);

// Command entry points return the process exit status. check: 0 iff the set
// is compatible under the mode, 1 if not.
int cmd_check(const TopologySpec& topology, const TaskSet& tasks, const CheckMode& mode, std::ostream& out);
int cmd_simulate(const ExperimentConfig& cfg, const std::filesystem::path& out, OutputFormat format);
int cmd_plot(const std::filesystem::path& stats_csv, const std::filesystem::path& out);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, std::string_view contents);

}  // namespace mbqn::cli
