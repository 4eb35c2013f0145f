#include <gtest/gtest.h>

#include <cmath>
#include <deque>
#include <map>

#include "mbqn/error.hpp"
#include "mbqn/montecarlo.hpp"
#include "oracles.hpp"

using namespace mbqn;
using mbqn::testing::path_graph;

namespace {

std::function<Task()> feed(std::deque<Task> tasks) {
    return [q = std::make_shared<std::deque<Task>>(std::move(tasks))] {
        Task t = q->front();
        q->pop_front();
        return t;
    };
}

ExperimentConfig small_config() {
    ExperimentConfig cfg;
    cfg.sizes = {4, 7, 10};
    cfg.trials = 400;
    cfg.measures = {Measure::baseline(), Measure::worst_case(), Measure::gk(0), Measure::gk(1)};
    cfg.seed = 99;
    cfg.workers = 1;
    return cfg;
}

}  // namespace

TEST(MeasureLiteral, RoundTrip) {
    for (const Measure& m : {Measure::baseline(), Measure::worst_case(), Measure::gk(0), Measure::gk(3)})
        EXPECT_EQ(parse_measure(to_string(m)), m);
    EXPECT_THROW(parse_measure("gk:-1"), ParseError);
    EXPECT_THROW(parse_measure("best"), ParseError);
}

TEST(SampleTask, TwoNodes) {
    Rng rng(5);
    int forward = 0;
    for (int i = 0; i < 20000; ++i) {
        const Task t = sample_task(2, rng);
        EXPECT_TRUE((t == Task(1, 2)) || (t == Task(2, 1)));
        forward += t.origin == 1;
    }
    EXPECT_NEAR(forward / 20000.0, 0.5, 5 * std::sqrt(0.25 / 20000));
    EXPECT_THROW(sample_task(1, rng), Error);
}

TEST(SampleTask, UniformOverOrderedPairs) {
    Rng rng(6);
    constexpr int kDraws = 1'000'000;
    std::map<std::pair<Node, Node>, int> counts;
    for (int i = 0; i < kDraws; ++i) {
        const Task t = sample_task(7, rng);
        ++counts[{t.origin, t.target}];
    }
    ASSERT_EQ(counts.size(), 42u);
    const double p = 1.0 / 42, expected = kDraws * p, sigma = std::sqrt(kDraws * p * (1 - p));
    double chi2 = 0;
    for (const auto& [pair, c] : counts) {
        EXPECT_LT(std::abs(c - expected), 5 * sigma);
        chi2 += (c - expected) * (c - expected) / expected;
    }
    // 41 degrees of freedom; the 99.99% quantile is about 84.
    EXPECT_LT(chi2, 84.0);
}

TEST(SampleTask, FixedSeedRepeats) {
    Rng a(7), b(7);
    for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_task(9, a), sample_task(9, b));
}

TEST(TrialRng, SharedStreamsIgnoreMeasure) {
    Rng a = trial_rng(1, 8, Measure::worst_case(), 3, true);
    Rng b = trial_rng(1, 8, Measure::gk(1), 3, true);
    EXPECT_EQ(a(), b());
    Rng c = trial_rng(1, 8, Measure::worst_case(), 3, false);
    Rng d = trial_rng(1, 8, Measure::gk(1), 3, false);
    EXPECT_NE(c(), d());
    Rng e = trial_rng(1, 8, Measure::worst_case(), 4, true);
    EXPECT_NE(trial_rng(1, 8, Measure::worst_case(), 3, true)(), e());
}

TEST(RunTrial, ScriptedArrivals) {
    const auto out = run_trial(path_graph(7), Measure::worst_case(), feed({{1, 3}, {5, 6}, {4, 5}}));
    EXPECT_EQ(out.supported, 2);
    EXPECT_EQ(out.rejected_task, Task(4, 5));
    const auto base = run_trial(path_graph(7), Measure::baseline(), feed({{1, 3}, {5, 6}}));
    EXPECT_EQ(base.supported, 1);
    const auto gk = run_trial(path_graph(7), Measure::gk(1), feed({{1, 6}, {3, 4}, {2, 3}}));
    EXPECT_EQ(gk.supported, 2);
}

TEST(RunTrial, TwoNodePathSupportsOne) {
    Rng rng(8);
    for (int i = 0; i < 50; ++i) EXPECT_EQ(run_trial(2, Measure::worst_case(), rng).supported, 1);
}

TEST(Topology, Builders) {
    EXPECT_EQ(build_topology("path", 7), path_graph(7));
    EXPECT_EQ(build_topology("ring", 7), mbqn::testing::ring_graph(7));
    EXPECT_THROW(build_topology("torus", 7), Error);
}

TEST(Config, Validation) {
    ExperimentConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.trials = 0;
    EXPECT_THROW(cfg.validate(), Error);
    cfg = ExperimentConfig{};
    cfg.sizes = {1};
    EXPECT_THROW(cfg.validate(), Error);
    cfg = ExperimentConfig{};
    cfg.measures.clear();
    EXPECT_THROW(cfg.validate(), Error);
}

TEST(Summarize, SampleStandardError) {
    const MeanSem s = summarize({1, 2, 3, 4});
    EXPECT_DOUBLE_EQ(s.mean, 2.5);
    EXPECT_NEAR(s.sem, std::sqrt(5.0 / 3.0) / 2.0, 1e-12);
    const MeanSem flat = summarize({1, 1, 1});
    EXPECT_EQ(flat.mean, 1.0);
    EXPECT_EQ(flat.sem, 0.0);
}

TEST(Experiment, BaselineIsOne) {
    const auto stats = run_experiment(small_config());
    ASSERT_EQ(stats.rows.size(), 12u);
    for (const StatsRow& r : stats.rows) {
        if (r.measure.kind != Measure::Kind::Baseline) continue;
        EXPECT_EQ(r.mean, 1.0);
        EXPECT_EQ(r.sem, 0.0);
        EXPECT_EQ(r.trials, 400);
        EXPECT_EQ(r.seed, 99u);
    }
}

TEST(ExperimentProperty, PerTrialDominance) {
    const ExperimentConfig cfg = small_config();
    for (int n : cfg.sizes) {
        const auto base = run_trials(cfg, n, Measure::baseline());
        const auto wc = run_trials(cfg, n, Measure::worst_case());
        const auto g0 = run_trials(cfg, n, Measure::gk(0));
        const auto g1 = run_trials(cfg, n, Measure::gk(1));
        EXPECT_EQ(wc, g0);
        for (int i = 0; i < cfg.trials; ++i) {
            EXPECT_EQ(base[i], 1);
            EXPECT_GE(wc[i], base[i]);
            EXPECT_GE(g1[i], wc[i]);
        }
    }
}

TEST(ExperimentProperty, IndependentOfWorkerCount) {
    ExperimentConfig cfg = small_config();
    const auto one = run_experiment(cfg);
    cfg.workers = 4;
    EXPECT_EQ(run_experiment(cfg).rows, one.rows);
}

TEST(ExperimentProperty, SevenPathMatchesExactExpectation) {
    ExperimentConfig cfg;
    cfg.sizes = {7};
    cfg.trials = 20000;
    cfg.measures = {Measure::worst_case()};
    cfg.seed = 2024;
    const MeanSem mc = summarize(run_trials(cfg, 7, Measure::worst_case()));
    const double exact = mbqn::testing::ArrivalChainOracle(7).expected_supported();
    EXPECT_LT(std::abs(mc.mean - exact), 4 * mc.sem) << mc.mean << " vs " << exact;
}
