#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "mbqn/graph.hpp"
#include "mbqn/graph_state_ops.hpp"

namespace mbqn::sv {

using Amplitude = std::complex<double>;
using Gate = std::array<Amplitude, 4>;  // row-major 2x2

inline constexpr std::size_t kMaxQubits = 12;
inline constexpr std::size_t kMaxOracleVertices = 6;
inline constexpr double kTolerance = 1e-9;

/**
 * Dense state over the qubits listed in `labels`.
 *
 * Qubit i (labels[i], ascending vertex order) sits at bit position
 * (n - 1 - i) of the basis index, i.e. the first vertex is the most
 * significant bit.
 */
struct GraphStateVector {
    std::vector<Node> labels;
    std::vector<Amplitude> amplitudes;

    std::size_t num_qubits() const { return labels.size(); }
    std::size_t index_of(Node label) const;
};

// |+>^n followed by CZ on every edge. Throws SizeLimit above kMaxQubits.
GraphStateVector build_graph_state(const Graph& g);

double norm(const GraphStateVector& s);
Amplitude inner_product(const GraphStateVector& a, const GraphStateVector& b);

// |<a|b>| >= 1 - tol, i.e. equal up to global phase for unit vectors.
bool equal_up_to_phase(const GraphStateVector& a, const GraphStateVector& b,
                       double tol = kTolerance);

void apply_gate(GraphStateVector& s, std::size_t qubit, const Gate& gate);

namespace gates {
extern const Gate I, X, Y, Z, S, Sdg;
}

struct Projection {
    GraphStateVector state;  // renormalized; meaningless when !valid
    double probability = 0;
    bool valid = false;
};

// Projects qubit `qubit` onto the outcome (+1 or -1) eigenspace of the basis.
Projection measure_pauli(const GraphStateVector& s, std::size_t qubit, PauliBasis basis, int outcome);

// Contracts a qubit known to be in the given eigenstate, dropping it from the
// register. Only meaningful after measure_pauli with the same basis/outcome.
GraphStateVector factor_out(const GraphStateVector& s, std::size_t qubit, PauliBasis basis, int outcome);

// True iff some correction D * X^a per listed qubit (D in {I, Z, S, S^dag},
// a in {0, 1}) maps `state` onto `target` up to global phase.
bool equal_up_to_local_corrections(const GraphStateVector& state, const GraphStateVector& target,
                                   const std::vector<std::size_t>& qubits);

// True iff, for both outcomes, the post-measurement state of the remaining
// qubits equals |G'> (G' from the graphical rule) after some per-neighbour
// correction from {I, Z, S, S^dag} x {I, X}. Throws SizeLimit above
// kMaxOracleVertices.
bool oracle_check_measure_rule(const Graph& g, Node v, PauliBasis basis);

}  // namespace mbqn::sv
