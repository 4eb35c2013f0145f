#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "mbqn/graph.hpp"
#include "mbqn/graph_state_ops.hpp"
#include "mbqn/task_protocol.hpp"

namespace mbqn {

using Tick = long;

struct RaceEntry {
    Task task;
    Tick arrival = 0;  // when the origin learns of the task
};

// Classical feed-forward moves one hop per tick along shortest routes in G.
struct RaceSchedule {
    std::vector<RaceEntry> entries;
};

struct Commitment {
    std::size_t task;
    PauliBasis basis;
    Tick time;

    friend bool operator==(const Commitment&, const Commitment&) = default;
};

struct RaceOutcome {
    std::set<std::size_t> satisfied;
    std::map<Node, Commitment> commitments;
    ResourceState final_state;
};

/**
 * First-instruction-wins race between the repeater programs of all tasks.
 *
 * Every task compiles its program on its default path. Instruction (node,
 * basis) reaches the node at arrival + dist(origin, node); the task target
 * learns it is an endpoint at arrival + dist(origin, target), the origin at
 * arrival. Events run in time order, ties by task arrival (then index), then
 * node id. A node measures on the first instruction it receives unless it is
 * already consumed or already knows it is an endpoint of some task.
 */
RaceOutcome run_race(const Graph& g, const RaceSchedule& schedule);

// At least one of the two tasks survives every arrival offset in 0..dt,
// whichever task arrives first.
bool partial_compatible(const Graph& g, const Task& t1, const Task& t2, Tick dt);

}  // namespace mbqn
