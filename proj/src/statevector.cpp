#include "mbqn/statevector.hpp"

#include <algorithm>
#include <cmath>

#include "mbqn/error.hpp"

namespace mbqn::sv {

namespace {

constexpr Amplitude kI{0.0, 1.0};

std::size_t bit_of(std::size_t n, std::size_t qubit) { return n - 1 - qubit; }

// Eigenvector of the basis for the given outcome, as (c0, c1).
std::array<Amplitude, 2> eigenvector(PauliBasis basis, int outcome) {
    const double r = 1.0 / std::sqrt(2.0);
    if (basis == PauliBasis::Z) return outcome > 0 ? std::array<Amplitude, 2>{1.0, 0.0}
                                                   : std::array<Amplitude, 2>{0.0, 1.0};
    return outcome > 0 ? std::array<Amplitude, 2>{r, kI * r} : std::array<Amplitude, 2>{r, -kI * r};
}

void check_outcome(int outcome) {
    if (outcome != 1 && outcome != -1)
        throw Error(ErrorCode::InvalidArgument, "measurement outcome must be +1 or -1");
}

}  // namespace

namespace gates {
const Gate I{1.0, 0.0, 0.0, 1.0};
const Gate X{0.0, 1.0, 1.0, 0.0};
const Gate Y{0.0, -kI, kI, 0.0};
const Gate Z{1.0, 0.0, 0.0, -1.0};
const Gate S{1.0, 0.0, 0.0, kI};
const Gate Sdg{1.0, 0.0, 0.0, -kI};
}  // namespace gates

std::size_t GraphStateVector::index_of(Node label) const {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label)
        throw Error(ErrorCode::UnknownVertex, "no qubit for vertex " + std::to_string(label));
    return static_cast<std::size_t>(it - labels.begin());
}

GraphStateVector build_graph_state(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n > kMaxQubits) {
        throw Error(ErrorCode::SizeLimit,
                    "statevector limited to " + std::to_string(kMaxQubits) + " qubits");
    }
    GraphStateVector s;
    s.labels = g.vertices();
    std::vector<std::pair<std::size_t, std::size_t>> edge_bits;
    for (const Edge& e : g.edges())
        edge_bits.emplace_back(bit_of(n, s.index_of(e.u)), bit_of(n, s.index_of(e.v)));

    const std::size_t dim = std::size_t{1} << n;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    s.amplitudes.resize(dim);
    for (std::size_t x = 0; x < dim; ++x) {
        int parity = 0;
        for (auto [a, b] : edge_bits) parity ^= static_cast<int>((x >> a) & (x >> b) & 1U);
        s.amplitudes[x] = parity ? -scale : scale;
    }
    return s;
}

double norm(const GraphStateVector& s) {
    double acc = 0;
    for (const auto& a : s.amplitudes) acc += std::norm(a);
    return std::sqrt(acc);
}

Amplitude inner_product(const GraphStateVector& a, const GraphStateVector& b) {
    if (a.amplitudes.size() != b.amplitudes.size())
        throw Error(ErrorCode::InvalidArgument, "inner product of mismatched registers");
    Amplitude acc = 0;
    for (std::size_t i = 0; i < a.amplitudes.size(); ++i) acc += std::conj(a.amplitudes[i]) * b.amplitudes[i];
    return acc;
}

bool equal_up_to_phase(const GraphStateVector& a, const GraphStateVector& b, double tol) {
    if (a.labels != b.labels) return false;
    return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

void apply_gate(GraphStateVector& s, std::size_t qubit, const Gate& gate) {
    const std::size_t n = s.num_qubits();
    if (qubit >= n) throw Error(ErrorCode::OutOfRange, "qubit index out of range");
    const std::size_t mask = std::size_t{1} << bit_of(n, qubit);
    for (std::size_t x = 0; x < s.amplitudes.size(); ++x) {
        if (x & mask) continue;
        const Amplitude a0 = s.amplitudes[x];
        const Amplitude a1 = s.amplitudes[x | mask];
        s.amplitudes[x] = gate[0] * a0 + gate[1] * a1;
        s.amplitudes[x | mask] = gate[2] * a0 + gate[3] * a1;
    }
}

Projection measure_pauli(const GraphStateVector& s, std::size_t qubit, PauliBasis basis, int outcome) {
    check_outcome(outcome);
    if (s.num_qubits() > kMaxQubits) throw Error(ErrorCode::SizeLimit, "register too large");
    const auto e = eigenvector(basis, outcome);
    // |e><e|
    const Gate projector{e[0] * std::conj(e[0]), e[0] * std::conj(e[1]), e[1] * std::conj(e[0]),
                         e[1] * std::conj(e[1])};
    Projection p;
    p.state = s;
    apply_gate(p.state, qubit, projector);
    const double nrm = norm(p.state);
    p.probability = nrm * nrm;
    p.valid = p.probability > kTolerance;
    if (p.valid)
        for (auto& a : p.state.amplitudes) a /= nrm;
    return p;
}

GraphStateVector factor_out(const GraphStateVector& s, std::size_t qubit, PauliBasis basis, int outcome) {
    check_outcome(outcome);
    const std::size_t n = s.num_qubits();
    if (qubit >= n) throw Error(ErrorCode::OutOfRange, "qubit index out of range");
    const auto e = eigenvector(basis, outcome);
    const std::size_t b = bit_of(n, qubit);
    const std::size_t low = (std::size_t{1} << b) - 1;

    GraphStateVector out;
    out.labels = s.labels;
    out.labels.erase(out.labels.begin() + static_cast<std::ptrdiff_t>(qubit));
    out.amplitudes.resize(std::size_t{1} << (n - 1));
    for (std::size_t y = 0; y < out.amplitudes.size(); ++y) {
        const std::size_t x0 = ((y & ~low) << 1) | (y & low);
        const std::size_t x1 = x0 | (std::size_t{1} << b);
        out.amplitudes[y] = std::conj(e[0]) * s.amplitudes[x0] + std::conj(e[1]) * s.amplitudes[x1];
    }
    return out;
}

bool equal_up_to_local_corrections(const GraphStateVector& state, const GraphStateVector& target,
                                   const std::vector<std::size_t>& qubits) {
    if (state.labels != target.labels) return false;
    const std::size_t n = state.num_qubits();
    const std::size_t d = qubits.size();
    std::vector<std::size_t> bits;
    for (std::size_t q : qubits) bits.push_back(std::size_t{1} << bit_of(n, q));

    static const std::array<std::array<Amplitude, 2>, 4> kDiag{{
        {1.0, 1.0}, {1.0, -1.0}, {1.0, kI}, {1.0, -kI}}};

    const std::size_t patterns = std::size_t{1} << d;
    std::vector<Amplitude> partial(patterns);
    for (std::size_t xmask = 0; xmask < patterns; ++xmask) {
        std::size_t flip = 0;
        for (std::size_t j = 0; j < d; ++j)
            if (xmask >> j & 1U) flip |= bits[j];

        // Overlap split by the values of the corrected qubits, so each
        // diagonal choice only touches 2^d partial sums.
        std::fill(partial.begin(), partial.end(), Amplitude{});
        for (std::size_t x = 0; x < state.amplitudes.size(); ++x) {
            std::size_t p = 0;
            for (std::size_t j = 0; j < d; ++j)
                if (x & bits[j]) p |= std::size_t{1} << j;
            partial[p] += std::conj(target.amplitudes[x]) * state.amplitudes[x ^ flip];
        }

        std::size_t combos = 1;
        for (std::size_t j = 0; j < d; ++j) combos *= 4;
        for (std::size_t c = 0; c < combos; ++c) {
            Amplitude overlap = 0;
            for (std::size_t p = 0; p < patterns; ++p) {
                Amplitude phase = 1.0;
                std::size_t code = c;
                for (std::size_t j = 0; j < d; ++j, code /= 4) phase *= kDiag[code % 4][p >> j & 1U];
                overlap += phase * partial[p];
            }
            if (std::abs(overlap) >= 1.0 - kTolerance) return true;
        }
    }
    return false;
}

bool oracle_check_measure_rule(const Graph& g, Node v, PauliBasis basis) {
    if (g.num_vertices() > kMaxOracleVertices) {
        throw Error(ErrorCode::SizeLimit,
                    "oracle limited to " + std::to_string(kMaxOracleVertices) + " vertices");
    }
    const GraphStateVector initial = build_graph_state(g);
    const std::size_t q = initial.index_of(v);
    const ResourceState after = measure(ResourceState(g), v, basis);
    const GraphStateVector expected = build_graph_state(after.graph);

    std::vector<std::size_t> corrected;
    for (Node w : g.neighbors(v)) corrected.push_back(expected.index_of(w));

    for (int outcome : {+1, -1}) {
        const Projection p = measure_pauli(initial, q, basis, outcome);
        if (!p.valid) continue;
        GraphStateVector rest = factor_out(p.state, q, basis, outcome);
        const double nrm = norm(rest);
        if (std::abs(nrm - 1.0) > kTolerance) return false;
        if (!equal_up_to_local_corrections(rest, expected, corrected)) return false;
    }
    return true;
}

}  // namespace mbqn::sv
