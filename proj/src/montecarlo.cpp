#include "mbqn/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <thread>

#include "mbqn/compatibility.hpp"
#include "mbqn/error.hpp"

namespace mbqn {

std::string to_string(const Measure& m) {
    switch (m.kind) {
        case Measure::Kind::Baseline: return "baseline";
        case Measure::Kind::WorstCase: return "worst_case";
        case Measure::Kind::Gk: return "gk:" + std::to_string(m.k);
    }
    return "unknown";
}

Measure parse_measure(std::string_view text) {
    if (text == "baseline") return Measure::baseline();
    if (text == "worst_case") return Measure::worst_case();
    if (text.starts_with("gk:")) {
        const std::string_view digits = text.substr(3);
        int k = -1;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && k >= 0) return Measure::gk(k);
        throw ParseError(1, 4, "expected a non-negative budget after 'gk:'");
    }
    throw ParseError(1, 1, "unknown measure '" + std::string(text) + "'");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t measure_tag(const Measure& m) {
    return (static_cast<std::uint64_t>(m.kind) + 1) | (static_cast<std::uint64_t>(m.k) << 8);
}

std::uint64_t bounded(Rng& rng, std::uint64_t range) {
    const std::uint64_t threshold = (0 - range) % range;
    std::uint64_t r;
    do {
        r = rng();
    } while (r < threshold);
    return r % range;
}

}  // namespace

Task sample_task(int n, Rng& rng) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "need at least two nodes to draw a task");
    const auto pairs = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1);
    const std::uint64_t idx = bounded(rng, pairs);
    const Node origin = static_cast<Node>(idx / static_cast<std::uint64_t>(n - 1)) + 1;
    Node target = static_cast<Node>(idx % static_cast<std::uint64_t>(n - 1)) + 1;
    if (target >= origin) ++target;
    return Task(origin, target);
}

Rng trial_rng(std::uint64_t seed, int n, const Measure& m, std::uint64_t trial, bool shared_streams) {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(n));
    h = splitmix64(h ^ (shared_streams ? 0 : measure_tag(m)));
    h = splitmix64(h ^ trial);
    return Rng(h);
}

bool admissible(const Graph& g, const TaskSet& tasks, const Measure& m) {
    switch (m.kind) {
        case Measure::Kind::Baseline: return tasks.size() == 1;
        case Measure::Kind::WorstCase: return worst_case_compatible(g, tasks).compatible;
        case Measure::Kind::Gk: return gk_compatible(g, tasks, m.k).verdict.compatible;
    }
    return false;
}

TrialOutcome run_trial(const Graph& g, const Measure& m, const std::function<Task()>& next) {
    TaskSet active;
    while (true) {
        const Task t = next();
        active.push_back(t);
        if (!admissible(g, active, m)) return {static_cast<int>(active.size()) - 1, t};
    }
}

TrialOutcome run_trial(int n, const Measure& m, Rng& rng) {
    const Graph g = build_topology("path", n);
    return run_trial(g, m, [&] { return sample_task(n, rng); });
}

Graph build_topology(std::string_view name, int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "topology needs at least one node");
    std::vector<Edge> edges;
    for (Node v = 1; v < n; ++v) edges.push_back({v, v + 1});
    if (name == "path") return Graph(n, edges);
    if (name == "ring") {
        if (n >= 3) edges.push_back({1, n});
        return Graph(n, edges);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown topology '" + std::string(name) + "'");
}

void ExperimentConfig::validate() const {
    if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
    if (sizes.empty()) throw Error(ErrorCode::InvalidArgument, "no network sizes given");
    if (measures.empty()) throw Error(ErrorCode::InvalidArgument, "no measures given");
    for (int n : sizes)
        if (n < 2) throw Error(ErrorCode::InvalidArgument, "network sizes must be at least 2");
    for (const Measure& m : measures)
        if (m.kind == Measure::Kind::Gk && m.k < 0)
            throw Error(ErrorCode::InvalidArgument, "negative supplement budget");
    build_topology(topology, 2);
}

std::vector<int> run_trials(const ExperimentConfig& cfg, int n, const Measure& m) {
    cfg.validate();
    const Graph g = build_topology(cfg.topology, n);
    std::vector<int> supported(static_cast<std::size_t>(cfg.trials));

    // Each trial owns its generator, so the split across workers cannot change results.
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
        for (std::size_t i = cursor++; i < supported.size(); i = cursor++) {
            Rng rng = trial_rng(cfg.seed, n, m, i, cfg.shared_streams);
            supported[i] = run_trial(g, m, [&] { return sample_task(n, rng); }).supported;
        }
    };

    unsigned workers = cfg.workers ? cfg.workers : std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, supported.size()));
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    return supported;
}

MeanSem summarize(const std::vector<int>& samples) {
    MeanSem out;
    if (samples.empty()) return out;
    const auto count = static_cast<double>(samples.size());
    double sum = 0;
    for (int x : samples) sum += x;
    out.mean = sum / count;
    if (samples.size() > 1) {
        double ss = 0;
        for (int x : samples) ss += (x - out.mean) * (x - out.mean);
        out.sem = std::sqrt(ss / (count - 1)) / std::sqrt(count);
    }
    return out;
}

ExperimentStats run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    ExperimentStats stats;
    for (int n : cfg.sizes) {
        for (const Measure& m : cfg.measures) {
            const MeanSem s = summarize(run_trials(cfg, n, m));
            stats.rows.push_back({n, m, s.mean, s.sem, cfg.trials, cfg.seed});
        }
    }
    return stats;
}

}  // namespace mbqn
