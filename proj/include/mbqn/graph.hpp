#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mbqn {

// Vertex identifiers are small positive integers (1..N in every builder).
using Node = int;
using Path = std::vector<Node>;

struct Edge {
    Node u;
    Node v;

    // Normalized so that u < v.
    static Edge of(Node a, Node b) { return a < b ? Edge{a, b} : Edge{b, a}; }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/**
 * Undirected simple graph over integer vertex ids.
 *
 * Values are immutable from the outside: every rewrite (delete_vertex,
 * local_complement, toggle_edge) returns a new Graph. Neighbor lists are
 * kept sorted so iteration order is deterministic everywhere.
 */
class Graph {
public:
    Graph() = default;

    // Vertices 1..n with no edges.
    explicit Graph(int n);

    // Vertices 1..n plus the given edges. Rejects self-loops, duplicates and
    // ids outside 1..n.
    Graph(int n, std::span<const Edge> edges);

    // Arbitrary vertex set (ids must be positive and distinct).
    static Graph from_vertices(std::span<const Node> vertices, std::span<const Edge> edges = {});

    bool has_vertex(Node v) const noexcept;
    bool has_edge(Node u, Node v) const noexcept;

    std::size_t num_vertices() const noexcept { return count_; }
    std::size_t num_edges() const noexcept;

    // Ascending.
    std::vector<Node> vertices() const;
    // Sorted by (u, v) with u < v.
    std::vector<Edge> edges() const;

    // Sorted neighbor list. Throws UnknownVertex.
    const std::vector<Node>& neighbors(Node v) const;
    std::size_t degree(Node v) const { return neighbors(v).size(); }

    // One past the largest id that may be present; sizes per-vertex scratch arrays.
    std::size_t id_bound() const noexcept { return adj_.size(); }

    friend bool operator==(const Graph& a, const Graph& b);

    friend Graph delete_vertex(const Graph& g, Node v);
    friend Graph local_complement(const Graph& g, Node v);
    friend Graph toggle_edge(const Graph& g, Node u, Node v);

private:
    void require(Node v) const;
    void add_vertex(Node v);
    void flip(Node u, Node v);

    std::vector<char> present_;
    std::vector<std::vector<Node>> adj_;
    std::size_t count_ = 0;
};

// N(v); never contains v.
const std::vector<Node>& neighbors(const Graph& g, Node v);

// Removes v and every incident edge.
Graph delete_vertex(const Graph& g, Node v);

// Complements the edge set induced on N(v); v's own edges are untouched.
Graph local_complement(const Graph& g, Node v);

// Adds (u, v) if absent, removes it otherwise.
Graph toggle_edge(const Graph& g, Node u, Node v);

// Minimum shortest-path distance between any a in A and b in B.
// std::nullopt stands for "no connecting path".
std::optional<int> pairwise_set_distance(const Graph& g, std::span<const Node> a,
                                         std::span<const Node> b);

// Hop distances from a source; -1 marks unreachable ids. Indexed by vertex id.
std::vector<int> bfs_distances(const Graph& g, Node source);

// All simple u-v paths with at most max_len vertices, shortest first and
// lexicographic within a length.
std::vector<Path> enumerate_simple_paths(const Graph& g, Node u, Node v, std::size_t max_len);

// Lexicographically smallest shortest path, i.e. the first entry of
// enumerate_simple_paths without enumerating the rest.
std::optional<Path> shortest_path(const Graph& g, Node u, Node v);

// Connected component containing v, ascending.
std::vector<Node> component_of(const Graph& g, Node v);

// Relabels vertices through mapping[old_id] = new_id.
Graph relabel(const Graph& g, std::span<const Node> mapping);

// Textual form: "n=<N>" followed by one "u-v" per line.
Graph parse_graph_literal(std::string_view text);
std::string to_graph_literal(const Graph& g);

}  // namespace mbqn
