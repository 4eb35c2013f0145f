#include "mbqn/graph_state_ops.hpp"

#include "mbqn/error.hpp"

namespace mbqn {

std::string_view to_string(PauliBasis basis) { return basis == PauliBasis::Z ? "Z" : "Y"; }

ResourceState measure(const ResourceState& state, Node v, PauliBasis basis) {
    if (state.consumed.contains(v))
        throw Error(ErrorCode::AlreadyConsumed, "qubit " + std::to_string(v) + " already measured");
    if (!state.graph.has_vertex(v))
        throw Error(ErrorCode::UnknownVertex, "unknown vertex " + std::to_string(v));

    ResourceState out;
    out.graph = basis == PauliBasis::Z ? delete_vertex(state.graph, v)
                                       : delete_vertex(local_complement(state.graph, v), v);
    out.consumed = state.consumed;
    out.consumed.insert(v);
    return out;
}

ResourceState fission_remove_edge(const ResourceState& state, Node u, Node v) {
    if (!state.graph.has_edge(u, v)) {
        throw Error(ErrorCode::MissingEdge,
                    "no edge " + std::to_string(u) + "-" + std::to_string(v) + " to fission");
    }
    ResourceState out = state;
    out.graph = toggle_edge(state.graph, u, v);
    return out;
}

}  // namespace mbqn
