#pragma once

// Test-only oracles. These deliberately avoid the library's search code: the
// 1D models below work directly on integer intervals.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "mbqn/graph.hpp"
#include "mbqn/task_protocol.hpp"

namespace mbqn::testing {

inline Graph path_graph(int n) {
    std::vector<Edge> e;
    for (Node v = 1; v < n; ++v) e.push_back({v, v + 1});
    return Graph(n, e);
}

inline Graph ring_graph(int n) {
    std::vector<Edge> e;
    for (Node v = 1; v < n; ++v) e.push_back({v, v + 1});
    e.push_back({1, n});
    return Graph(n, e);
}

// G(n, p) on vertices 1..n.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (Node u = 1; u <= n; ++u)
        for (Node v = u + 1; v <= n; ++v)
            if (coin(rng)) e.push_back({u, v});
    return Graph(n, e);
}

inline bool connected(const Graph& g) {
    const auto vs = g.vertices();
    return vs.empty() || component_of(g, vs.front()).size() == vs.size();
}

// Every labelled simple graph on vertices 1..n.
inline std::vector<Graph> all_graphs(int n) {
    std::vector<Edge> slots;
    for (Node u = 1; u <= n; ++u)
        for (Node v = u + 1; v <= n; ++v) slots.push_back({u, v});
    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1U) e.push_back(slots[i]);
        out.emplace_back(n, e);
    }
    return out;
}

struct Interval {
    int lo, hi;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

inline Interval interval_of(const Task& t) {
    return {std::min(t.origin, t.target), std::max(t.origin, t.target)};
}

// Pairwise gap rule on the path: no shared vertex and at least one free
// vertex between any two intervals.
inline bool gap_rule(const std::vector<Interval>& iv) {
    for (std::size_t a = 0; a < iv.size(); ++a)
        for (std::size_t b = a + 1; b < iv.size(); ++b)
            if (!(iv[a].hi + 2 <= iv[b].lo || iv[b].hi + 2 <= iv[a].lo)) return false;
    return true;
}

/**
 * Exact expected number of supported tasks for sequential uniform arrivals on
 * the n-path under worst-case admission. The chain state is the multiset of
 * admitted intervals; a rejected arrival ends the trial with |S| tasks.
 */
class ArrivalChainOracle {
public:
    explicit ArrivalChainOracle(int n) : n_(n) {
        for (int u = 1; u <= n; ++u)
            for (int v = 1; v <= n; ++v)
                if (u != v) arrivals_.push_back({std::min(u, v), std::max(u, v)});
    }

    double expected_supported() { return value({}); }

private:
    double value(std::vector<Interval> state) {
        std::sort(state.begin(), state.end());
        if (auto it = memo_.find(state); it != memo_.end()) return it->second;
        double acc = 0;
        for (const Interval& t : arrivals_) {
            std::vector<Interval> next = state;
            next.push_back(t);
            acc += gap_rule(next) ? value(next) : static_cast<double>(state.size());
        }
        const double v = acc / static_cast<double>(arrivals_.size());
        memo_.emplace(std::move(state), v);
        return v;
    }

    int n_;
    std::vector<Interval> arrivals_;
    std::map<std::vector<Interval>, double> memo_;
};

/**
 * Brute-force cheapest (G,k) plan on the n-path: every subset of tasks served
 * by chains (|u - v| pairs each) and every set of cut edges, scored by total
 * pairs. Remaining tasks must avoid cut edges, be pairwise disjoint, and keep
 * a free vertex between them unless a cut separates them.
 */
inline std::optional<int> brute_force_min_supplement(int n, const TaskSet& tasks, int k_max) {
    const std::size_t m = tasks.size();
    const int edges = n - 1;
    std::optional<int> best;
    for (std::uint32_t chain = 0; chain < (1U << m); ++chain) {
        int chain_cost = 0;
        std::vector<Interval> rest;
        for (std::size_t i = 0; i < m; ++i) {
            const Interval iv = interval_of(tasks[i]);
            if (chain >> i & 1U)
                chain_cost += iv.hi - iv.lo;
            else
                rest.push_back(iv);
        }
        if (chain_cost > k_max) continue;
        for (std::uint64_t cut = 0; cut < (std::uint64_t{1} << edges); ++cut) {
            const int cost = chain_cost + std::popcount(cut);
            if (cost > k_max || (best && cost >= *best)) continue;
            // edge index e joins vertices e+1 and e+2
            auto cut_between = [&](int lo, int hi) {  // any cut edge with both ends in [lo, hi]
                for (int e = lo; e < hi; ++e)
                    if (cut >> (e - 1) & 1U) return true;
                return false;
            };
            bool ok = true;
            for (const Interval& iv : rest) ok = ok && !cut_between(iv.lo, iv.hi);
            for (std::size_t a = 0; ok && a < rest.size(); ++a) {
                for (std::size_t b = a + 1; ok && b < rest.size(); ++b) {
                    Interval x = rest[a], y = rest[b];
                    if (y.lo < x.lo) std::swap(x, y);
                    if (x.hi >= y.lo) ok = false;                            // shared vertex
                    else if (x.hi + 1 == y.lo && !cut_between(x.hi, y.lo)) ok = false;  // adjacent
                }
            }
            if (ok) best = cost;
        }
    }
    return best;
}

}  // namespace mbqn::testing
