#pragma once

#include <set>
#include <string_view>

#include "mbqn/graph.hpp"

namespace mbqn {

enum class PauliBasis { Z, Y };

std::string_view to_string(PauliBasis basis);

// Graph-level view of a shared resource state: what is still entangled and
// which qubits have already been measured away.
struct ResourceState {
    Graph graph;
    std::set<Node> consumed;

    ResourceState() = default;
    explicit ResourceState(Graph g) : graph(std::move(g)) {}

    friend bool operator==(const ResourceState&, const ResourceState&) = default;
};

// Z: delete v. Y: local complement at v, then delete v.
// The graph update does not depend on the measurement outcome.
ResourceState measure(const ResourceState& state, Node v, PauliBasis basis);

// Removes edge (u, v) by spending one supplemental EPR pair between u and v.
// The ancilla halves are measured out immediately, so only the edge toggle
// survives at graph level; no resource qubit is consumed.
ResourceState fission_remove_edge(const ResourceState& state, Node u, Node v);

}  // namespace mbqn
