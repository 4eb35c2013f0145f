#include "mbqn/compatibility.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "mbqn/error.hpp"

namespace mbqn {

std::string_view to_string(Violation v) {
    switch (v) {
        case Violation::Disjointness: return "disjointness";
        case Violation::Separability: return "separability";
        case Violation::NoPath: return "no-path";
    }
    return "unknown";
}

std::string_view to_string(PlacementRole r) {
    return r == PlacementRole::ChainLink ? "chain" : "fission";
}

std::vector<std::size_t> SupplementPlan::chain_tasks() const {
    std::set<std::size_t> out;
    for (const auto& p : placements)
        if (p.role == PlacementRole::ChainLink && p.task) out.insert(*p.task);
    return {out.begin(), out.end()};
}

std::vector<Edge> SupplementPlan::fission_edges() const {
    std::vector<Edge> out;
    for (const auto& p : placements)
        if (p.role == PlacementRole::Fission) out.push_back(p.edge);
    return out;
}

namespace {

void require_endpoints(const Graph& g, const TaskSet& tasks) {
    for (const Task& t : tasks) {
        g.neighbors(t.origin);
        g.neighbors(t.target);
    }
}

using Candidates = std::vector<std::vector<Path>>;

Candidates candidate_paths(const Graph& g, const TaskSet& tasks, const std::vector<std::size_t>& which,
                           std::size_t max_len) {
    Candidates out;
    out.reserve(which.size());
    for (std::size_t i : which)
        out.push_back(enumerate_simple_paths(g, tasks[i].origin, tasks[i].target, max_len));
    return out;
}

// Backtracking over one candidate path per task. With `separate` set, a path
// may not touch the closed neighbourhood of any chosen path; otherwise only
// the chosen vertices themselves are off limits.
class JointSearch {
public:
    JointSearch(const Graph& g, const Candidates& candidates, bool separate)
        : g_(g), candidates_(candidates), separate_(separate), blocked_(g.id_bound(), 0) {}

    std::optional<std::vector<std::size_t>> run() {
        choice_.assign(candidates_.size(), 0);
        if (descend(0)) return choice_;
        return std::nullopt;
    }

private:
    bool descend(std::size_t i) {
        if (i == candidates_.size()) return true;
        for (std::size_t c = 0; c < candidates_[i].size(); ++c) {
            const Path& p = candidates_[i][c];
            if (std::any_of(p.begin(), p.end(), [&](Node x) { return blocked_[x] > 0; })) continue;
            mark(p, +1);
            choice_[i] = c;
            if (descend(i + 1)) return true;
            mark(p, -1);
        }
        return false;
    }

    void mark(const Path& p, int delta) {
        for (Node x : p) {
            blocked_[x] += delta;
            if (separate_)
                for (Node y : g_.neighbors(x)) blocked_[y] += delta;
        }
    }

    const Graph& g_;
    const Candidates& candidates_;
    bool separate_;
    std::vector<int> blocked_;
    std::vector<std::size_t> choice_;
};

// Verdict for the subset `which` of tasks given their candidate paths.
CompatibilityVerdict decide(const Graph& g, const std::vector<std::size_t>& which,
                            const Candidates& candidates) {
    CompatibilityVerdict out;
    if (std::any_of(candidates.begin(), candidates.end(), [](const auto& c) { return c.empty(); })) {
        out.violated = Violation::NoPath;
        return out;
    }
    if (auto choice = JointSearch(g, candidates, true).run()) {
        out.compatible = true;
        PathAssignment w;
        for (std::size_t j = 0; j < which.size(); ++j) w.push_back({which[j], candidates[j][(*choice)[j]]});
        out.witness = std::move(w);
        return out;
    }
    out.violated = JointSearch(g, candidates, false).run() ? Violation::Separability
                                                           : Violation::Disjointness;
    return out;
}

std::size_t resolve_max_len(const Graph& g, std::optional<std::size_t> max_len) {
    return max_len.value_or(std::max<std::size_t>(g.num_vertices(), 1));
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& edges) {
    Graph out = g;
    for (const Edge& e : edges) out = toggle_edge(out, e.u, e.v);
    return out;
}

// Calls fn(combination) for each size-r combination of items, lexicographic
// by index; stops when fn returns true.
template <typename T, typename Fn>
bool for_each_combination(const std::vector<T>& items, std::size_t r, Fn&& fn) {
    if (r > items.size()) return false;
    std::vector<std::size_t> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<T> pick(r);
    while (true) {
        for (std::size_t j = 0; j < r; ++j) pick[j] = items[idx[j]];
        if (fn(pick)) return true;
        std::size_t j = r;
        while (j > 0 && idx[j - 1] == items.size() - r + (j - 1)) --j;
        if (j == 0) return false;
        ++idx[j - 1];
        for (std::size_t m = j; m < r; ++m) idx[m] = idx[m - 1] + 1;
    }
}

}  // namespace

CompatibilityVerdict worst_case_compatible(const Graph& g, const TaskSet& tasks,
                                           std::optional<std::size_t> max_len) {
    require_endpoints(g, tasks);
    std::vector<std::size_t> all(tasks.size());
    std::iota(all.begin(), all.end(), 0);
    return decide(g, all, candidate_paths(g, tasks, all, resolve_max_len(g, max_len)));
}

CompatibilityVerdict interval_compatible_1d(int n, const TaskSet& tasks) {
    struct Interval {
        Node lo, hi;
        std::size_t task;
    };
    std::vector<Interval> iv;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        const Task& t = tasks[i];
        for (Node x : {t.origin, t.target})
            if (x < 1 || x > n)
                throw Error(ErrorCode::OutOfRange, "endpoint " + std::to_string(x) + " outside 1.." +
                                                       std::to_string(n));
        iv.push_back({std::min(t.origin, t.target), std::max(t.origin, t.target), i});
    }
    std::stable_sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });

    CompatibilityVerdict out;
    for (std::size_t j = 0; j + 1 < iv.size(); ++j) {
        if (iv[j].hi + 2 <= iv[j + 1].lo) continue;
        out.violated = iv[j].hi >= iv[j + 1].lo ? Violation::Disjointness : Violation::Separability;
        return out;
    }
    out.compatible = true;
    PathAssignment w(tasks.size());
    for (const Interval& x : iv) {
        const Task& t = tasks[x.task];
        Path p;
        const int step = t.origin < t.target ? 1 : -1;
        for (Node v = t.origin; v != t.target + step; v += step) p.push_back(v);
        w[x.task] = {x.task, std::move(p)};
    }
    out.witness = std::move(w);
    return out;
}

GkVerdict gk_compatible(const Graph& g, const TaskSet& tasks, int k, std::optional<std::size_t> max_len) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "supplement budget k must be non-negative");
    require_endpoints(g, tasks);
    const std::size_t len = resolve_max_len(g, max_len);
    const std::size_t n = tasks.size();

    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    const Candidates base = candidate_paths(g, tasks, all, len);

    GkVerdict out;
    out.verdict = decide(g, all, base);
    if (out.verdict.compatible) {
        out.plan = SupplementPlan{};
        return out;
    }
    const CompatibilityVerdict original = out.verdict;

    // A chain along a shortest path costs one pair per hop.
    constexpr int kUnreachable = std::numeric_limits<int>::max();
    std::vector<int> chain_cost(n, kUnreachable);
    std::vector<Path> chain(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (auto p = shortest_path(g, tasks[i].origin, tasks[i].target)) {
            chain_cost[i] = static_cast<int>(p->size()) - 1;
            chain[i] = std::move(*p);
        }
    }

    // For the resource-served tasks `rest`, try every set of `fissions` edges
    // that could matter. An edge only helps if it joins candidate paths of two
    // different tasks: witness paths on G-F are paths of G, and any other
    // removed edge could be dropped for a cheaper plan.
    auto try_rest = [&](const std::vector<std::size_t>& rest,
                        std::size_t fissions) -> std::optional<std::pair<CompatibilityVerdict, std::vector<Edge>>> {
        Candidates sub;
        for (std::size_t i : rest) sub.push_back(base[i]);
        if (fissions == 0) {
            CompatibilityVerdict v = decide(g, rest, sub);
            if (v.compatible) return std::make_pair(std::move(v), std::vector<Edge>{});
            return std::nullopt;
        }
        if (std::any_of(sub.begin(), sub.end(), [](const auto& c) { return c.empty(); })) return std::nullopt;

        std::vector<int> owner(g.id_bound(), -1);  // -1 none, -2 several tasks
        for (std::size_t j = 0; j < rest.size(); ++j) {
            for (const Path& p : sub[j]) {
                for (Node x : p) {
                    if (owner[x] == -1)
                        owner[x] = static_cast<int>(j);
                    else if (owner[x] != static_cast<int>(j))
                        owner[x] = -2;
                }
            }
        }
        std::vector<Edge> useful;
        for (const Edge& e : g.edges()) {
            const int a = owner[e.u], b = owner[e.v];
            if (a == -1 || b == -1) continue;
            if (a == -2 || b == -2 || a != b) useful.push_back(e);
        }

        std::optional<std::pair<CompatibilityVerdict, std::vector<Edge>>> found;
        for_each_combination(useful, fissions, [&](const std::vector<Edge>& cut) {
            const Graph h = remove_edges(g, cut);
            CompatibilityVerdict v = decide(h, rest, candidate_paths(h, tasks, rest, len));
            if (!v.compatible) return false;
            found.emplace(std::move(v), cut);
            return true;
        });
        return found;
    };

    for (int c = 1; c <= k; ++c) {
        std::vector<std::size_t> chainable;
        for (std::size_t i = 0; i < n; ++i)
            if (chain_cost[i] <= c) chainable.push_back(i);

        // Chain subsets by size, then lexicographically.
        for (std::size_t size = 0; size <= chainable.size(); ++size) {
            const bool done = for_each_combination(chainable, size, [&](const std::vector<std::size_t>& chained) {
                int spent = 0;
                for (std::size_t i : chained) spent += chain_cost[i];
                if (spent > c) return false;
                std::vector<std::size_t> rest;
                for (std::size_t i = 0; i < n; ++i)
                    if (std::find(chained.begin(), chained.end(), i) == chained.end()) rest.push_back(i);

                auto hit = try_rest(rest, static_cast<std::size_t>(c - spent));
                if (!hit) return false;

                SupplementPlan plan;
                for (std::size_t i : chained)
                    for (std::size_t h = 0; h + 1 < chain[i].size(); ++h)
                        plan.placements.push_back({Edge{chain[i][h], chain[i][h + 1]}, PlacementRole::ChainLink, i});
                for (const Edge& e : hit->second) plan.placements.push_back({e, PlacementRole::Fission, std::nullopt});
                out.verdict = std::move(hit->first);
                out.plan = std::move(plan);
                return true;
            });
            if (done) return out;
        }
    }
    out.verdict = original;
    out.plan.reset();
    return out;
}

std::optional<int> minimal_k(const Graph& g, const TaskSet& tasks, int k_max) {
    if (k_max < 0) return std::nullopt;
    const GkVerdict r = gk_compatible(g, tasks, k_max);
    if (!r.verdict.compatible) return std::nullopt;
    return static_cast<int>(r.plan->cost());
}

bool validate_assignment(const Graph& g, const TaskSet& tasks, const PathAssignment& witness) {
    std::set<std::size_t> seen;
    for (const auto& w : witness) {
        if (w.task >= tasks.size() || !seen.insert(w.task).second) return false;
        const Task& t = tasks[w.task];
        if (w.path.size() < 2 || w.path.front() != t.origin || w.path.back() != t.target) return false;
        std::set<Node> distinct(w.path.begin(), w.path.end());
        if (distinct.size() != w.path.size()) return false;
        for (std::size_t i = 0; i + 1 < w.path.size(); ++i)
            if (!g.has_edge(w.path[i], w.path[i + 1])) return false;
    }
    for (std::size_t a = 0; a < witness.size(); ++a) {
        for (std::size_t b = a + 1; b < witness.size(); ++b) {
            const auto d = pairwise_set_distance(g, witness[a].path, witness[b].path);
            if (d && *d < 2) return false;
        }
    }
    return true;
}

bool validate_gk(const Graph& g, const TaskSet& tasks, int k, const GkVerdict& result) {
    if (!result.verdict.compatible) return !result.plan.has_value() && result.verdict.violated.has_value();
    if (!result.plan || !result.verdict.witness) return false;
    const SupplementPlan& plan = *result.plan;
    if (plan.cost() > static_cast<std::size_t>(k)) return false;

    Graph h = g;
    std::vector<std::vector<Edge>> links(tasks.size());
    for (const auto& p : plan.placements) {
        if (!g.has_edge(p.edge.u, p.edge.v)) return false;
        if (p.role == PlacementRole::Fission) {
            if (p.task || !h.has_edge(p.edge.u, p.edge.v)) return false;
            h = toggle_edge(h, p.edge.u, p.edge.v);
        } else {
            if (!p.task || *p.task >= tasks.size()) return false;
            links[*p.task].push_back(p.edge);
        }
    }

    std::vector<char> served(tasks.size(), 0);
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (links[i].empty()) continue;
        // Contiguous walk of distinct vertices from origin to target.
        std::set<Node> visited{tasks[i].origin};
        Node at = tasks[i].origin;
        for (const Edge& e : links[i]) {
            if (e.u != at || !visited.insert(e.v).second) return false;
            at = e.v;
        }
        if (at != tasks[i].target) return false;
        served[i] = 1;
    }
    for (const auto& w : *result.verdict.witness) {
        if (w.task >= tasks.size() || served[w.task]) return false;
        served[w.task] = 1;
    }
    if (std::find(served.begin(), served.end(), 0) != served.end()) return false;
    return validate_assignment(h, tasks, *result.verdict.witness);
}

}  // namespace mbqn
