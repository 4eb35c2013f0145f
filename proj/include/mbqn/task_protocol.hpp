#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mbqn/graph.hpp"
#include "mbqn/graph_state_ops.hpp"

namespace mbqn {

// Request for an EPR pair between origin (the requester) and target.
struct Task {
    Node origin;
    Node target;

    // Throws InvalidArgument when origin == target.
    Task(Node origin, Node target);

    friend bool operator==(const Task&, const Task&) = default;
};

// Arrival order; duplicates allowed.
using TaskSet = std::vector<Task>;

// "u->v"
std::string to_string(const Task& t);
Task parse_task(std::string_view text);
// Comma separated list of task literals, e.g. "1->3,5->6".
TaskSet parse_task_list(std::string_view text);

struct MeasurementStep {
    Node node;
    PauliBasis basis;

    friend bool operator==(const MeasurementStep&, const MeasurementStep&) = default;
};

// Repeater-path program: Z on every off-path neighbour (ascending id), then Y
// along the path interior in path order.
struct MeasurementProgram {
    Path path;
    std::vector<MeasurementStep> steps;
};

// Origin and target share a connected component.
bool feasible(const Graph& g, const Task& t);

// Throws NotAPath unless `path` is a simple path in g with >= 2 vertices.
MeasurementProgram compile_repeater_program(const Graph& g, const Path& path);

ResourceState execute_program(const ResourceState& state, const MeasurementProgram& program);

// Both endpoints alive and forming an isolated edge.
bool task_satisfied(const ResourceState& state, const Task& t);

// Shortest (lexicographically first) path for the task, if any.
std::optional<Path> default_path(const Graph& g, const Task& t);

}  // namespace mbqn
