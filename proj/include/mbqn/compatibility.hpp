#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mbqn/graph.hpp"
#include "mbqn/task_protocol.hpp"

namespace mbqn {

// Which requirement failed when no joint assignment exists.
enum class Violation { Disjointness, Separability, NoPath };

std::string_view to_string(Violation v);

struct WitnessPath {
    std::size_t task;  // index into the task set
    Path path;

    friend bool operator==(const WitnessPath&, const WitnessPath&) = default;
};

// Joint choice of one path per resource-served task: pairwise vertex-disjoint
// and at graph distance >= 2 from each other.
using PathAssignment = std::vector<WitnessPath>;

struct CompatibilityVerdict {
    bool compatible = false;
    std::optional<PathAssignment> witness;  // present iff compatible
    std::optional<Violation> violated;      // present iff !compatible
};

enum class PlacementRole { ChainLink, Fission };

std::string_view to_string(PlacementRole r);

// One on-demand EPR pair between G-adjacent nodes. Chain links are stored in
// walk order (edge.u is the end nearer the task origin) and name the task they
// serve; fission placements carry no task.
struct Placement {
    Edge edge;
    PlacementRole role;
    std::optional<std::size_t> task;

    friend bool operator==(const Placement&, const Placement&) = default;
};

struct SupplementPlan {
    std::vector<Placement> placements;

    std::size_t cost() const { return placements.size(); }
    // Tasks served entirely by supplemental chains, ascending.
    std::vector<std::size_t> chain_tasks() const;
    std::vector<Edge> fission_edges() const;
};

struct GkVerdict {
    CompatibilityVerdict verdict;  // witness covers resource-served tasks only
    std::optional<SupplementPlan> plan;
};

/**
 * Worst-case compatibility: searches for one joint path assignment (in task
 * arrival order, candidates from enumerate_simple_paths) that is pairwise
 * disjoint and separated. max_len defaults to |V|.
 *
 * An empty task set is trivially compatible; a singleton is compatible iff
 * it has a path.
 */
CompatibilityVerdict worst_case_compatible(const Graph& g, const TaskSet& tasks,
                                           std::optional<std::size_t> max_len = std::nullopt);

// Closed form on the path graph 1..n: sorted intervals must leave a gap of at
// least one untouched vertex between consecutive tasks.
CompatibilityVerdict interval_compatible_1d(int n, const TaskSet& tasks);

/**
 * (G,k)-compatibility with a budget of k one-hop EPR pairs shared by the
 * whole set. Each pair either links a supplemental chain that serves one task
 * outright, or removes a resource edge by fission. The remaining tasks must
 * be worst-case compatible on the fissioned graph.
 *
 * Plans are tried by increasing total cost, so the returned plan is a
 * cheapest one. k = 0 reproduces worst_case_compatible.
 */
GkVerdict gk_compatible(const Graph& g, const TaskSet& tasks, int k,
                        std::optional<std::size_t> max_len = std::nullopt);

// Smallest k <= k_max for which gk_compatible holds.
std::optional<int> minimal_k(const Graph& g, const TaskSet& tasks, int k_max);

// Re-checks a witness against its invariants in g.
bool validate_assignment(const Graph& g, const TaskSet& tasks, const PathAssignment& witness);

// Re-checks a (G,k) answer: plan invariants, budget, every task served exactly
// once (chain or witness), and the witness valid on the fissioned graph.
bool validate_gk(const Graph& g, const TaskSet& tasks, int k, const GkVerdict& result);

}  // namespace mbqn
