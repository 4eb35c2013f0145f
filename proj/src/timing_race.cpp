#include "mbqn/timing_race.hpp"

#include <algorithm>
#include <tuple>

#include "mbqn/error.hpp"

namespace mbqn {

namespace {

struct Event {
    Tick time;
    Tick arrival;
    std::size_t task;
    Node node;
    bool notify;  // endpoint learns about its task; otherwise a measurement instruction
    PauliBasis basis;

    auto key() const { return std::tie(time, arrival, task, node); }
};

}  // namespace

RaceOutcome run_race(const Graph& g, const RaceSchedule& schedule) {
    std::vector<Event> events;
    for (std::size_t i = 0; i < schedule.entries.size(); ++i) {
        const auto& [task, arrival] = schedule.entries[i];
        if (arrival < 0) throw Error(ErrorCode::InvalidArgument, "arrival times must be non-negative");
        g.neighbors(task.origin);
        g.neighbors(task.target);
        const std::vector<int> dist = bfs_distances(g, task.origin);

        events.push_back({arrival, arrival, i, task.origin, true, PauliBasis::Z});
        if (dist[task.target] < 0) continue;
        events.push_back({arrival + dist[task.target], arrival, i, task.target, true, PauliBasis::Z});

        const auto path = default_path(g, task);
        for (const auto& step : compile_repeater_program(g, *path).steps)
            events.push_back({arrival + dist[step.node], arrival, i, step.node, false, step.basis});
    }
    std::stable_sort(events.begin(), events.end(),
                     [](const Event& a, const Event& b) { return a.key() < b.key(); });

    RaceOutcome out;
    out.final_state = ResourceState(g);
    std::vector<char> knows_endpoint(g.id_bound(), 0);
    for (const Event& e : events) {
        if (e.notify) {
            knows_endpoint[e.node] = 1;
            continue;
        }
        if (knows_endpoint[e.node] || out.final_state.consumed.contains(e.node)) continue;
        out.final_state = measure(out.final_state, e.node, e.basis);
        out.commitments.emplace(e.node, Commitment{e.task, e.basis, e.time});
    }

    for (std::size_t i = 0; i < schedule.entries.size(); ++i)
        if (task_satisfied(out.final_state, schedule.entries[i].task)) out.satisfied.insert(i);
    return out;
}

bool partial_compatible(const Graph& g, const Task& t1, const Task& t2, Tick dt) {
    if (dt < 0) throw Error(ErrorCode::InvalidArgument, "dt must be non-negative");
    for (Tick d = 0; d <= dt; ++d) {
        for (const auto& [a1, a2] : {std::pair<Tick, Tick>{0, d}, std::pair<Tick, Tick>{d, 0}}) {
            const RaceSchedule s{{{t1, a1}, {t2, a2}}};
            if (run_race(g, s).satisfied.empty()) return false;
        }
    }
    return true;
}

}  // namespace mbqn
