#include "mbqn/task_protocol.hpp"

#include <algorithm>
#include <charconv>

#include "mbqn/error.hpp"

namespace mbqn {

Task::Task(Node o, Node t) : origin(o), target(t) {
    if (o == t) throw Error(ErrorCode::InvalidArgument, "task endpoints must differ");
}

std::string to_string(const Task& t) {
    return std::to_string(t.origin) + "->" + std::to_string(t.target);
}

namespace {

// Parses one "u->v" literal; `offset` is the column of text[0] (0-based).
Task parse_task_at(std::string_view text, std::size_t offset) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto fail = [&](const std::string& msg) -> Task { throw ParseError(1, offset + pos + 1, msg); };
    auto integer = [&]() -> int {
        skip();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc{} || ptr == text.data() + pos) fail("expected a vertex id");
        pos = static_cast<std::size_t>(ptr - text.data());
        return value;
    };

    const int u = integer();
    skip();
    if (text.substr(pos, 2) != "->") return fail("expected '->'");
    pos += 2;
    const std::size_t v_at = pos;
    const int v = integer();
    skip();
    if (pos != text.size()) return fail("trailing characters");
    if (u == v) {
        pos = v_at;
        skip();
        return fail("task endpoints must differ");
    }
    return Task(u, v);
}

}  // namespace

Task parse_task(std::string_view text) { return parse_task_at(text, 0); }

TaskSet parse_task_list(std::string_view text) {
    TaskSet out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = std::min(text.find(',', start), text.size());
        out.push_back(parse_task_at(text.substr(start, comma - start), start));
        if (comma == text.size()) break;
        start = comma + 1;
    }
    return out;
}

bool feasible(const Graph& g, const Task& t) {
    g.neighbors(t.origin);
    g.neighbors(t.target);
    return bfs_distances(g, t.origin)[t.target] >= 0;
}

MeasurementProgram compile_repeater_program(const Graph& g, const Path& path) {
    if (path.size() < 2) throw Error(ErrorCode::NotAPath, "path needs at least two vertices");
    std::vector<char> on_path(g.id_bound(), 0);
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (!g.has_vertex(path[i]))
            throw Error(ErrorCode::NotAPath, "path vertex " + std::to_string(path[i]) + " not in graph");
        if (on_path[path[i]]) throw Error(ErrorCode::NotAPath, "path repeats a vertex");
        on_path[path[i]] = 1;
        if (i > 0 && !g.has_edge(path[i - 1], path[i]))
            throw Error(ErrorCode::NotAPath, "consecutive path vertices are not adjacent");
    }

    std::vector<char> z_mark(g.id_bound(), 0);
    for (Node p : path)
        for (Node w : g.neighbors(p))
            if (!on_path[w]) z_mark[w] = 1;

    MeasurementProgram prog;
    prog.path = path;
    for (std::size_t w = 0; w < z_mark.size(); ++w)
        if (z_mark[w]) prog.steps.push_back({static_cast<Node>(w), PauliBasis::Z});
    for (std::size_t i = 1; i + 1 < path.size(); ++i) prog.steps.push_back({path[i], PauliBasis::Y});
    return prog;
}

ResourceState execute_program(const ResourceState& state, const MeasurementProgram& program) {
    ResourceState cur = state;
    for (const auto& step : program.steps) cur = measure(cur, step.node, step.basis);
    return cur;
}

bool task_satisfied(const ResourceState& state, const Task& t) {
    const Graph& g = state.graph;
    if (state.consumed.contains(t.origin) || state.consumed.contains(t.target)) return false;
    if (!g.has_vertex(t.origin) || !g.has_vertex(t.target)) return false;
    return g.has_edge(t.origin, t.target) && g.degree(t.origin) == 1 && g.degree(t.target) == 1;
}

std::optional<Path> default_path(const Graph& g, const Task& t) {
    return shortest_path(g, t.origin, t.target);
}

}  // namespace mbqn
