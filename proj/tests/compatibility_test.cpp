#include <gtest/gtest.h>

#include <random>

#include "mbqn/compatibility.hpp"
#include "mbqn/error.hpp"
#include "oracles.hpp"

using namespace mbqn;
using mbqn::testing::path_graph;
using mbqn::testing::random_graph;
using mbqn::testing::ring_graph;

namespace {

const TaskSet kCovering{{3, 4}, {1, 6}};
const TaskSet kIntersecting{{2, 6}, {4, 7}};
const TaskSet kAdjacent{{1, 3}, {4, 6}};
const TaskSet kSeparated{{1, 3}, {5, 6}};

TaskSet random_tasks(int n, std::size_t m, std::mt19937_64& rng) {
    TaskSet out;
    while (out.size() < m) {
        const Node u = 1 + static_cast<Node>(rng() % n), v = 1 + static_cast<Node>(rng() % n);
        if (u != v) out.emplace_back(u, v);
    }
    return out;
}

}  // namespace

TEST(WorstCase, SeparatedTasks) {
    const auto v = worst_case_compatible(path_graph(7), kSeparated);
    ASSERT_TRUE(v.compatible);
    EXPECT_EQ(*v.witness, (PathAssignment{{0, {1, 2, 3}}, {1, {5, 6}}}));
    EXPECT_FALSE(v.violated);
}

TEST(WorstCase, AdjacentTasks) {
    const auto v = worst_case_compatible(path_graph(7), kAdjacent);
    EXPECT_FALSE(v.compatible);
    EXPECT_FALSE(v.witness);
    EXPECT_EQ(v.violated, Violation::Separability);
}

TEST(WorstCase, CoveringTasks) { EXPECT_FALSE(worst_case_compatible(path_graph(7), kCovering).compatible); }

TEST(WorstCase, IntersectingTasks) {
    const auto v = worst_case_compatible(path_graph(7), kIntersecting);
    EXPECT_FALSE(v.compatible);
    EXPECT_EQ(v.violated, Violation::Disjointness);
}

TEST(WorstCase, RingRedesign) {
    const auto v = worst_case_compatible(ring_graph(7), kCovering);
    ASSERT_TRUE(v.compatible);
    EXPECT_EQ(v.witness->at(1).path, (Path{1, 7, 6}));
    EXPECT_FALSE(worst_case_compatible(ring_graph(7), TaskSet{{1, 2}, {6, 7}}).compatible);
}

TEST(WorstCase, EdgeAdditionFlipsBothWays) {
    // Adding (1,7) to the 7-path makes one pair compatible and another not.
    const Graph path = path_graph(7), ring = toggle_edge(path, 1, 7);
    const TaskSet ends{{1, 2}, {6, 7}};
    EXPECT_FALSE(worst_case_compatible(path, kCovering).compatible);
    EXPECT_TRUE(worst_case_compatible(ring, kCovering).compatible);
    EXPECT_TRUE(worst_case_compatible(path, ends).compatible);
    EXPECT_FALSE(worst_case_compatible(ring, ends).compatible);
}

TEST(WorstCase, TrivialSets) {
    EXPECT_TRUE(worst_case_compatible(path_graph(3), {}).compatible);
    EXPECT_TRUE(worst_case_compatible(path_graph(7), TaskSet{{1, 7}}).compatible);
    const auto split = worst_case_compatible(Graph(3), TaskSet{{1, 3}});
    EXPECT_FALSE(split.compatible);
    EXPECT_EQ(split.violated, Violation::NoPath);
    EXPECT_FALSE(worst_case_compatible(path_graph(7), TaskSet{{1, 3}, {3, 1}}).compatible);
    try {
        (void)worst_case_compatible(path_graph(3), TaskSet{{1, 9}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnknownVertex);
    }
}

TEST(WorstCase, MaxLenCapsCandidates) {
    EXPECT_TRUE(worst_case_compatible(ring_graph(7), kCovering, 3).compatible);
    const auto v = worst_case_compatible(ring_graph(7), kCovering, 2);
    EXPECT_FALSE(v.compatible);
    EXPECT_EQ(v.violated, Violation::NoPath);
}

TEST(WorstCase, JointAssignmentNotPairwise) {
    // Task 1->2 has two routes, via 3 or via 4; 5->6 hangs off 3 and 7->8
    // off 4. Every pair has a witness but no single assignment serves all.
    const Edge e[] = {{1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 5}, {5, 6}, {4, 7}, {7, 8}};
    const Graph theta(8, e);
    const TaskSet all{{1, 2}, {5, 6}, {7, 8}};
    for (std::size_t skip = 0; skip < 3; ++skip) {
        TaskSet pair;
        for (std::size_t i = 0; i < 3; ++i)
            if (i != skip) pair.push_back(all[i]);
        EXPECT_TRUE(worst_case_compatible(theta, pair).compatible);
    }
    const auto v = worst_case_compatible(theta, all);
    EXPECT_FALSE(v.compatible);
    EXPECT_EQ(v.violated, Violation::Separability);
}

TEST(Interval1d, Examples) {
    EXPECT_TRUE(interval_compatible_1d(7, kSeparated).compatible);
    EXPECT_FALSE(interval_compatible_1d(7, kAdjacent).compatible);
    EXPECT_TRUE(interval_compatible_1d(7, TaskSet{{1, 7}}).compatible);
    try {
        (void)interval_compatible_1d(7, TaskSet{{1, 8}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
    }
}

TEST(Gk, CoveringNeedsOneChain) {
    const auto r = gk_compatible(path_graph(7), kCovering, 1);
    ASSERT_TRUE(r.verdict.compatible);
    ASSERT_TRUE(r.plan);
    EXPECT_EQ(r.plan->chain_tasks(), (std::vector<std::size_t>{0}));
    EXPECT_EQ(r.plan->cost(), 1u);
    EXPECT_TRUE(validate_gk(path_graph(7), kCovering, 1, r));
}

TEST(Gk, AdjacentNeedsOneFission) {
    const auto r = gk_compatible(path_graph(7), kAdjacent, 1);
    ASSERT_TRUE(r.verdict.compatible);
    EXPECT_EQ(r.plan->fission_edges(), (std::vector<Edge>{{3, 4}}));
    EXPECT_TRUE(r.plan->chain_tasks().empty());
}

TEST(Gk, IntersectingNeedsThree) {
    EXPECT_FALSE(gk_compatible(path_graph(7), kIntersecting, 1).verdict.compatible);
    EXPECT_FALSE(gk_compatible(path_graph(7), kIntersecting, 2).verdict.compatible);
    const auto r = gk_compatible(path_graph(7), kIntersecting, 3);
    ASSERT_TRUE(r.verdict.compatible);
    EXPECT_EQ(r.plan->chain_tasks(), (std::vector<std::size_t>{1}));
    const std::vector<Placement> want{{{4, 5}, PlacementRole::ChainLink, 1},
                                      {{5, 6}, PlacementRole::ChainLink, 1},
                                      {{6, 7}, PlacementRole::ChainLink, 1}};
    EXPECT_EQ(r.plan->placements, want);
}

TEST(Gk, ZeroBudgetIsWorstCase) {
    const auto r = gk_compatible(path_graph(7), kSeparated, 0);
    EXPECT_TRUE(r.verdict.compatible);
    ASSERT_TRUE(r.plan);
    EXPECT_EQ(r.plan->cost(), 0u);
    EXPECT_EQ(r.verdict.witness, worst_case_compatible(path_graph(7), kSeparated).witness);
    EXPECT_THROW(gk_compatible(path_graph(7), kSeparated, -1), Error);
}

TEST(MinimalK, Examples) {
    EXPECT_EQ(minimal_k(path_graph(7), kCovering, 5), 1);
    EXPECT_EQ(minimal_k(path_graph(7), kSeparated, 5), 0);
    EXPECT_EQ(minimal_k(path_graph(7), kIntersecting, 5), 3);
    EXPECT_EQ(minimal_k(path_graph(7), kIntersecting, 2), std::nullopt);
}

TEST(MinimalK, MatchesBruteForcePlans) {
    std::mt19937_64 rng(51);
    for (int round = 0; round < 150; ++round) {
        const int n = 4 + static_cast<int>(rng() % 4);
        const TaskSet tasks = random_tasks(n, 2 + rng() % 2, rng);
        const auto want = mbqn::testing::brute_force_min_supplement(n, tasks, 4);
        EXPECT_EQ(minimal_k(path_graph(n), tasks, 4), want) << n;
    }
    EXPECT_EQ(mbqn::testing::brute_force_min_supplement(7, kIntersecting, 3), 3);
}

TEST(CompatibilityProperty, ClosedFormOnPaths) {
    std::mt19937_64 rng(52);
    for (int round = 0; round < 2000; ++round) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const TaskSet tasks = random_tasks(n, 1 + rng() % 4, rng);
        EXPECT_EQ(worst_case_compatible(path_graph(n), tasks).compatible,
                  interval_compatible_1d(n, tasks).compatible);
    }
}

TEST(CompatibilityProperty, SubsetsOfCompatibleSetsAreCompatible) {
    std::mt19937_64 rng(53);
    int found = 0;
    while (found < 100) {
        const int n = 5 + static_cast<int>(rng() % 5);
        const Graph g = random_graph(n, 0.35, rng);
        const TaskSet tasks = random_tasks(n, 2 + rng() % 2, rng);
        if (!worst_case_compatible(g, tasks).compatible) continue;
        ++found;
        for (std::uint32_t mask = 0; mask < (1U << tasks.size()); ++mask) {
            TaskSet sub;
            for (std::size_t i = 0; i < tasks.size(); ++i)
                if (mask >> i & 1U) sub.push_back(tasks[i]);
            EXPECT_TRUE(worst_case_compatible(g, sub).compatible);
        }
    }
}

TEST(CompatibilityProperty, WitnessesValidate) {
    std::mt19937_64 rng(54);
    for (int round = 0; round < 300; ++round) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const Graph g = random_graph(n, 0.4, rng);
        const TaskSet tasks = random_tasks(n, 1 + rng() % 3, rng);
        const auto v = worst_case_compatible(g, tasks);
        EXPECT_EQ(v.compatible, v.witness.has_value());
        EXPECT_NE(v.compatible, v.violated.has_value());
        if (!v.witness) continue;
        EXPECT_EQ(v.witness->size(), tasks.size());
        EXPECT_TRUE(validate_assignment(g, tasks, *v.witness));
    }
}

TEST(CompatibilityProperty, GkMonotoneInBudgetWithValidPlans) {
    std::mt19937_64 rng(55);
    for (int round = 0; round < 100; ++round) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const Graph g = random_graph(n, 0.45, rng);
        const TaskSet tasks = random_tasks(n, 1 + rng() % 3, rng);
        bool before = false;
        for (int k = 0; k <= 3; ++k) {
            const auto r = gk_compatible(g, tasks, k);
            EXPECT_TRUE(!before || r.verdict.compatible) << k;
            before = r.verdict.compatible;
            if (r.verdict.compatible) EXPECT_TRUE(validate_gk(g, tasks, k, r));
        }
        EXPECT_EQ(gk_compatible(g, tasks, 0).verdict.compatible, worst_case_compatible(g, tasks).compatible);
    }
}

TEST(Validate, RejectsBrokenWitnesses) {
    const Graph g = path_graph(7);
    EXPECT_FALSE(validate_assignment(g, kAdjacent, {{0, {1, 2, 3}}, {1, {4, 5, 6}}}));
    EXPECT_FALSE(validate_assignment(g, kSeparated, {{0, {1, 3}}, {1, {5, 6}}}));
    EXPECT_FALSE(validate_assignment(g, kSeparated, {{0, {1, 2, 3}}, {0, {1, 2, 3}}}));
    EXPECT_FALSE(validate_assignment(g, kSeparated, {{0, {1, 2}}, {1, {5, 6}}}));

    GkVerdict over;
    over.verdict.compatible = true;
    over.verdict.witness = PathAssignment{{1, {1, 2, 3, 4, 5, 6}}};
    over.plan = SupplementPlan{{{{3, 4}, PlacementRole::ChainLink, 0}}};
    EXPECT_TRUE(validate_gk(g, kCovering, 1, over));
    EXPECT_FALSE(validate_gk(g, kCovering, 0, over));
    over.plan = SupplementPlan{{{{3, 5}, PlacementRole::ChainLink, 0}}};
    EXPECT_FALSE(validate_gk(g, kCovering, 1, over));
}
