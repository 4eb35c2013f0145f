#include "mbqn/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "mbqn/error.hpp"

namespace mbqn {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::UnknownVertex: return "unknown-vertex";
        case ErrorCode::SelfLoop: return "self-loop";
        case ErrorCode::DuplicateEdge: return "duplicate-edge";
        case ErrorCode::EmptySet: return "empty-set";
        case ErrorCode::AlreadyConsumed: return "already-consumed";
        case ErrorCode::MissingEdge: return "missing-edge";
        case ErrorCode::NotAPath: return "not-a-path";
        case ErrorCode::SizeLimit: return "size-limit";
        case ErrorCode::InvalidArgument: return "invalid-argument";
        case ErrorCode::OutOfRange: return "out-of-range";
        case ErrorCode::Parse: return "parse";
        case ErrorCode::Io: return "io";
    }
    return "unknown";
}

namespace {

[[noreturn]] void unknown_vertex(Node v) {
    throw Error(ErrorCode::UnknownVertex, "unknown vertex " + std::to_string(v));
}

}  // namespace

Graph::Graph(int n) {
    if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
    for (Node v = 1; v <= n; ++v) add_vertex(v);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
        if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(e.u));
        require(e.u);
        require(e.v);
        if (has_edge(e.u, e.v)) {
            throw Error(ErrorCode::DuplicateEdge, "duplicate edge " + std::to_string(e.u) + "-" +
                                                      std::to_string(e.v));
        }
        flip(e.u, e.v);
    }
}

Graph Graph::from_vertices(std::span<const Node> vertices, std::span<const Edge> edges) {
    Graph g;
    for (Node v : vertices) {
        if (v <= 0) throw Error(ErrorCode::InvalidArgument, "vertex ids must be positive");
        if (g.has_vertex(v)) throw Error(ErrorCode::InvalidArgument, "repeated vertex id");
        g.add_vertex(v);
    }
    for (const Edge& e : edges) {
        if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(e.u));
        g.require(e.u);
        g.require(e.v);
        if (g.has_edge(e.u, e.v)) throw Error(ErrorCode::DuplicateEdge, "duplicate edge");
        g.flip(e.u, e.v);
    }
    return g;
}

bool Graph::has_vertex(Node v) const noexcept {
    return v > 0 && static_cast<std::size_t>(v) < present_.size() && present_[v];
}

bool Graph::has_edge(Node u, Node v) const noexcept {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

std::size_t Graph::num_edges() const noexcept {
    std::size_t twice = 0;
    for (const auto& n : adj_) twice += n.size();
    return twice / 2;
}

std::vector<Node> Graph::vertices() const {
    std::vector<Node> out;
    out.reserve(count_);
    for (std::size_t v = 0; v < present_.size(); ++v)
        if (present_[v]) out.push_back(static_cast<Node>(v));
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < adj_.size(); ++u)
        for (Node v : adj_[u])
            if (static_cast<Node>(u) < v) out.push_back({static_cast<Node>(u), v});
    return out;
}

const std::vector<Node>& Graph::neighbors(Node v) const {
    require(v);
    return adj_[v];
}

void Graph::require(Node v) const {
    if (!has_vertex(v)) unknown_vertex(v);
}

void Graph::add_vertex(Node v) {
    const auto idx = static_cast<std::size_t>(v);
    if (idx >= present_.size()) {
        present_.resize(idx + 1, 0);
        adj_.resize(idx + 1);
    }
    present_[idx] = 1;
    ++count_;
}

void Graph::flip(Node u, Node v) {
    auto toggle = [](std::vector<Node>& list, Node x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it != list.end() && *it == x)
            list.erase(it);
        else
            list.insert(it, x);
    };
    toggle(adj_[u], v);
    toggle(adj_[v], u);
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.count_ != b.count_) return false;
    const std::size_t bound = std::max(a.present_.size(), b.present_.size());
    for (std::size_t v = 0; v < bound; ++v) {
        const bool pa = v < a.present_.size() && a.present_[v];
        const bool pb = v < b.present_.size() && b.present_[v];
        if (pa != pb) return false;
        if (pa && a.adj_[v] != b.adj_[v]) return false;
    }
    return true;
}

const std::vector<Node>& neighbors(const Graph& g, Node v) { return g.neighbors(v); }

Graph delete_vertex(const Graph& g, Node v) {
    g.require(v);
    Graph out = g;
    for (Node w : g.adj_[v]) {
        auto& list = out.adj_[w];
        list.erase(std::lower_bound(list.begin(), list.end(), v));
    }
    out.adj_[v].clear();
    out.present_[v] = 0;
    --out.count_;
    return out;
}

Graph local_complement(const Graph& g, Node v) {
    g.require(v);
    Graph out = g;
    const auto& nv = g.adj_[v];
    for (std::size_t i = 0; i < nv.size(); ++i)
        for (std::size_t j = i + 1; j < nv.size(); ++j) out.flip(nv[i], nv[j]);
    return out;
}

Graph toggle_edge(const Graph& g, Node u, Node v) {
    g.require(u);
    g.require(v);
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(u));
    Graph out = g;
    out.flip(u, v);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, Node source) {
    g.neighbors(source);
    std::vector<int> dist(g.id_bound(), -1);
    std::deque<Node> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        const Node x = queue.front();
        queue.pop_front();
        for (Node y : g.neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

std::optional<int> pairwise_set_distance(const Graph& g, std::span<const Node> a,
                                         std::span<const Node> b) {
    if (a.empty() || b.empty()) throw Error(ErrorCode::EmptySet, "empty vertex set");
    std::vector<int> dist(g.id_bound(), -1);
    std::deque<Node> queue;
    for (Node x : a) {
        g.neighbors(x);
        if (dist[x] < 0) {
            dist[x] = 0;
            queue.push_back(x);
        }
    }
    std::vector<char> target(g.id_bound(), 0);
    for (Node y : b) {
        g.neighbors(y);
        target[y] = 1;
    }
    while (!queue.empty()) {
        const Node x = queue.front();
        queue.pop_front();
        if (target[x]) return dist[x];
        for (Node y : g.neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return std::nullopt;
}

std::vector<Path> enumerate_simple_paths(const Graph& g, Node u, Node v, std::size_t max_len) {
    g.neighbors(u);
    g.neighbors(v);
    if (u == v) throw Error(ErrorCode::InvalidArgument, "path endpoints must differ");
    if (max_len < 1) throw Error(ErrorCode::InvalidArgument, "max_len must be at least 1");

    // Vertices that cannot reach v within the remaining budget are pruned.
    const std::vector<int> to_target = bfs_distances(g, v);
    std::vector<Path> out;
    if (to_target[u] < 0) return out;

    std::vector<char> on_path(g.id_bound(), 0);
    Path current{u};
    on_path[u] = 1;

    auto dfs = [&](auto&& self, Node x) -> void {
        if (x == v) {
            out.push_back(current);
            return;
        }
        for (Node y : g.neighbors(x)) {
            if (on_path[y] || to_target[y] < 0) continue;
            if (current.size() + 1 + static_cast<std::size_t>(to_target[y]) > max_len) continue;
            on_path[y] = 1;
            current.push_back(y);
            self(self, y);
            current.pop_back();
            on_path[y] = 0;
        }
    };
    dfs(dfs, u);

    std::stable_sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

std::optional<Path> shortest_path(const Graph& g, Node u, Node v) {
    g.neighbors(u);
    const std::vector<int> to_target = bfs_distances(g, v);
    if (to_target[u] < 0) return std::nullopt;
    Path path{u};
    Node x = u;
    while (x != v) {
        // Neighbor lists are sorted, so the first step closer is the smallest id.
        for (Node y : g.neighbors(x)) {
            if (to_target[y] == to_target[x] - 1) {
                x = y;
                break;
            }
        }
        path.push_back(x);
    }
    return path;
}

std::vector<Node> component_of(const Graph& g, Node v) {
    const std::vector<int> dist = bfs_distances(g, v);
    std::vector<Node> out;
    for (std::size_t x = 0; x < dist.size(); ++x)
        if (dist[x] >= 0) out.push_back(static_cast<Node>(x));
    return out;
}

Graph relabel(const Graph& g, std::span<const Node> mapping) {
    std::vector<Node> vs;
    std::vector<Edge> es;
    for (Node v : g.vertices()) {
        if (static_cast<std::size_t>(v) >= mapping.size())
            throw Error(ErrorCode::InvalidArgument, "relabel mapping too short");
        vs.push_back(mapping[v]);
    }
    for (const Edge& e : g.edges()) es.push_back(Edge::of(mapping[e.u], mapping[e.v]));
    return Graph::from_vertices(vs, es);
}

namespace {

struct LineCursor {
    std::string_view line;
    std::size_t line_no;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= line.size();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_no, pos + 1, msg); }

    int integer() {
        skip_ws();
        int value = 0;
        const char* first = line.data() + pos;
        const char* last = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr == first) fail("expected an integer");
        pos += static_cast<std::size_t>(ptr - first);
        return value;
    }
    void expect(std::string_view token) {
        skip_ws();
        if (line.substr(pos, token.size()) != token) fail("expected '" + std::string(token) + "'");
        pos += token.size();
    }
};

}  // namespace

Graph parse_graph_literal(std::string_view text) {
    std::optional<int> n;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        LineCursor cur{text.substr(start, end - start), ++line_no};
        start = end + 1;

        if (auto hash = cur.line.find('#'); hash != std::string_view::npos)
            cur.line = cur.line.substr(0, hash);
        if (cur.at_end()) continue;

        if (!n) {
            cur.expect("n");
            cur.expect("=");
            const std::size_t at = cur.pos;
            n = cur.integer();
            if (*n < 0) throw ParseError(line_no, at + 1, "vertex count must be non-negative");
            if (!cur.at_end()) cur.fail("trailing characters");
            continue;
        }
        const std::size_t u_at = (cur.skip_ws(), cur.pos);
        const int u = cur.integer();
        cur.expect("-");
        const std::size_t v_at = (cur.skip_ws(), cur.pos);
        const int v = cur.integer();
        if (!cur.at_end()) cur.fail("trailing characters");
        if (u < 1 || u > *n) throw ParseError(line_no, u_at + 1, "vertex out of range");
        if (v < 1 || v > *n) throw ParseError(line_no, v_at + 1, "vertex out of range");
        if (u == v) throw ParseError(line_no, u_at + 1, "self-loop");
        if (!seen.insert(Edge::of(u, v)).second) throw ParseError(line_no, u_at + 1, "duplicate edge");
        edges.push_back(Edge::of(u, v));
    }
    if (!n) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing 'n=<N>' header");
    return Graph(*n, edges);
}

std::string to_graph_literal(const Graph& g) {
    const auto vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i] != static_cast<Node>(i + 1))
            throw Error(ErrorCode::InvalidArgument, "graph literal requires vertices 1..N");
    std::ostringstream os;
    os << "n=" << vs.size() << '\n';
    for (const Edge& e : g.edges()) os << e.u << '-' << e.v << '\n';
    return os.str();
}

}  // namespace mbqn
