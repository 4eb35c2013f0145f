#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mbqn/graph.hpp"
#include "mbqn/task_protocol.hpp"

namespace mbqn {

// Admission rule applied to the augmented task set after every arrival.
struct Measure {
    enum class Kind { Baseline, WorstCase, Gk };

    Kind kind = Kind::WorstCase;
    int k = 0;  // budget for Kind::Gk

    static Measure baseline() { return {Kind::Baseline, 0}; }
    static Measure worst_case() { return {Kind::WorstCase, 0}; }
    static Measure gk(int budget) { return {Kind::Gk, budget}; }

    friend bool operator==(const Measure&, const Measure&) = default;
};

// "baseline", "worst_case", "gk:<k>"
std::string to_string(const Measure& m);
Measure parse_measure(std::string_view text);

using Rng = std::mt19937_64;

// Uniform over the n(n-1) ordered pairs on vertices 1..n. Bounded draws use
// rejection on the raw 64-bit stream so sequences are identical on every
// standard library.
Task sample_task(int n, Rng& rng);

// Derives the generator for one trial. With shared streams the measure does
// not enter the derivation, so every measure sees the same task sequence.
Rng trial_rng(std::uint64_t seed, int n, const Measure& m, std::uint64_t trial, bool shared_streams);

// True iff the set is admissible under the measure on g.
bool admissible(const Graph& g, const TaskSet& tasks, const Measure& m);

struct TrialOutcome {
    int supported = 0;
    std::optional<Task> rejected_task;
};

// Appends arrivals from `next` until the augmented set stops being admissible.
TrialOutcome run_trial(const Graph& g, const Measure& m, const std::function<Task()>& next);
TrialOutcome run_trial(int n, const Measure& m, Rng& rng);

// Builds the resource graph for a topology name ("path" or "ring") on n nodes.
Graph build_topology(std::string_view name, int n);

struct ExperimentConfig {
    std::vector<int> sizes{4, 8, 12, 16, 24, 32, 48, 64};
    int trials = 10000;
    std::vector<Measure> measures{Measure::baseline(), Measure::worst_case(), Measure::gk(1)};
    std::uint64_t seed = 1;
    std::string topology = "path";
    bool shared_streams = true;
    unsigned workers = 0;  // 0: hardware concurrency

    // Throws InvalidArgument on trials < 1, N < 2, no sizes or no measures.
    void validate() const;
};

struct StatsRow {
    int n = 0;
    Measure measure;
    double mean = 0;
    double sem = 0;  // sample standard deviation / sqrt(trials)
    int trials = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const StatsRow&, const StatsRow&) = default;
};

struct ExperimentStats {
    std::vector<StatsRow> rows;  // sizes outer, measures inner, config order
};

// Supported-task counts of every trial, indexed by trial.
std::vector<int> run_trials(const ExperimentConfig& cfg, int n, const Measure& m);

ExperimentStats run_experiment(const ExperimentConfig& cfg);

struct MeanSem {
    double mean = 0;
    double sem = 0;
};

MeanSem summarize(const std::vector<int>& samples);

}  // namespace mbqn
