#include "mbqn/cli_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mbqn/compatibility.hpp"
#include "mbqn/error.hpp"

namespace mbqn::cli {

namespace {

int parse_int(std::string_view text, std::size_t column, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ParseError(1, column, "expected an integer " + std::string(what));
    return value;
}

std::string fixed(double x, int precision) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::fixed, precision);
    return std::string(buf.data(), ptr);
}

}  // namespace

Graph TopologySpec::build() const {
    switch (builder) {
        case Builder::Path: return build_topology("path", n);
        case Builder::Ring: return build_topology("ring", n);
        case Builder::Triangle: {
            const std::array<Edge, 3> edges{Edge{1, 2}, Edge{1, 3}, Edge{2, 3}};
            return Graph(3, edges);
        }
        case Builder::Custom: return parse_graph_literal(literal);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown topology builder");
}

TopologySpec parse_topology(std::string_view text) {
    TopologySpec spec;
    const std::size_t colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    if (name == "triangle" && colon == std::string_view::npos) {
        spec.builder = TopologySpec::Builder::Triangle;
        spec.n = 3;
        return spec;
    }
    if (name == "path" || name == "ring") {
        if (colon == std::string_view::npos) throw ParseError(1, text.size() + 1, "expected ':<n>'");
        spec.builder = name == "path" ? TopologySpec::Builder::Path : TopologySpec::Builder::Ring;
        spec.n = parse_int(arg, colon + 2, "node count");
        if (spec.n < 1) throw ParseError(1, colon + 2, "node count must be positive");
        return spec;
    }
    if (name == "custom") {
        if (arg.empty()) throw ParseError(1, text.size() + 1, "expected ':<file>'");
        spec.builder = TopologySpec::Builder::Custom;
        spec.literal = read_file(std::string(arg));
        const Graph g = parse_graph_literal(spec.literal);
        spec.n = static_cast<int>(g.num_vertices());
        return spec;
    }
    throw ParseError(1, 1, "unknown topology builder '" + std::string(name) + "'");
}

CheckMode parse_check_mode(std::string_view text) {
    CheckMode mode;
    if (text == "worst_case") return mode;
    if (text.starts_with("gk:")) {
        mode.kind = CheckMode::Kind::Gk;
        mode.k = parse_int(text.substr(3), 4, "budget");
        if (mode.k < 0) throw ParseError(1, 4, "budget must be non-negative");
        return mode;
    }
    if (text.starts_with("partial:")) {
        mode.kind = CheckMode::Kind::Partial;
        mode.dt = parse_int(text.substr(8), 9, "offset window");
        if (mode.dt < 0) throw ParseError(1, 9, "offset window must be non-negative");
        return mode;
    }
    throw ParseError(1, 1, "unknown mode '" + std::string(text) + "'");
}

OutputFormat parse_format(std::string_view text) {
    if (text == "csv") return OutputFormat::Csv;
    if (text == "json") return OutputFormat::Json;
    throw ParseError(1, 1, "unknown format '" + std::string(text) + "'");
}

std::string format_double(double x) {
    std::array<char, 64> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    std::string s(buf.data(), ptr);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

std::string to_csv(const ExperimentStats& stats) {
    std::string out(kCsvHeader);
    out += '\n';
    for (const StatsRow& r : stats.rows) {
        out += std::to_string(r.n) + ',' + to_string(r.measure) + ',' + format_double(r.mean) + ',' +
               format_double(r.sem) + ',' + std::to_string(r.trials) + ',' + std::to_string(r.seed) + '\n';
    }
    return out;
}

std::string to_json(const ExperimentStats& stats) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const StatsRow& r : stats.rows) {
        rows.push_back({{"n", r.n},
                        {"measure", to_string(r.measure)},
                        {"mean", r.mean},
                        {"sem", r.sem},
                        {"trials", r.trials},
                        {"seed", r.seed}});
    }
    return rows.dump(2) + '\n';
}

ExperimentStats parse_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t start = 0; start < text.size();) {
        std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    if (lines.empty() || lines.front().empty()) throw ParseError(1, 1, "missing header row");

    auto split = [](std::string_view line) {
        std::vector<std::pair<std::string_view, std::size_t>> cells;  // text, 1-based column
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = std::min(line.find(',', start), line.size());
            cells.emplace_back(line.substr(start, comma - start), start + 1);
            if (comma == line.size()) break;
            start = comma + 1;
        }
        return cells;
    };

    const auto header = split(lines.front());
    constexpr std::array<std::string_view, 6> kColumns{"n", "measure", "mean", "sem", "trials", "seed"};
    std::array<std::size_t, 6> at{};
    for (std::size_t c = 0; c < kColumns.size(); ++c) {
        auto it = std::find_if(header.begin(), header.end(), [&](const auto& h) { return h.first == kColumns[c]; });
        if (it == header.end())
            throw ParseError(1, lines.front().size() + 1, "missing column '" + std::string(kColumns[c]) + "'");
        at[c] = static_cast<std::size_t>(it - header.begin());
    }

    ExperimentStats stats;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (lines[li].empty()) continue;
        const auto cells = split(lines[li]);
        if (cells.size() != header.size())
            throw ParseError(li + 1, 1, "expected " + std::to_string(header.size()) + " fields");
        auto cell = [&](std::size_t c) { return cells[at[c]]; };
        auto number = [&](std::size_t c, auto& value) {
            const auto [txt, col] = cell(c);
            auto [ptr, ec] = std::from_chars(txt.data(), txt.data() + txt.size(), value);
            if (ec != std::errc{} || ptr != txt.data() + txt.size() || txt.empty())
                throw ParseError(li + 1, col, "bad value for column '" + std::string(kColumns[c]) + "'");
        };
        StatsRow row;
        number(0, row.n);
        try {
            row.measure = parse_measure(cell(1).first);
        } catch (const ParseError&) {
            throw ParseError(li + 1, cell(1).second, "bad value for column 'measure'");
        }
        number(2, row.mean);
        number(3, row.sem);
        number(4, row.trials);
        number(5, row.seed);
        stats.rows.push_back(row);
    }
    return stats;
}

namespace {

struct Axis {
    double lo, hi, step;
};

Axis nice_axis(double lo, double hi) {
    if (hi - lo < 1e-12) {
        lo -= 1;
        hi += 1;
    }
    const double raw = (hi - lo) / 5;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        step = m * mag;
        if (raw <= step) break;
    }
    return {std::floor(lo / step) * step, std::ceil(hi / step) * step, step};
}

std::string tick_label(double v, double step) {
    const int digits = step >= 1 ? 0 : static_cast<int>(std::ceil(-std::log10(step)));
    return fixed(v, digits);
}

}  // namespace

std::string render_svg(const ExperimentStats& stats) {
    constexpr double kWidth = 720, kHeight = 440;
    constexpr double kLeft = 70, kRight = 170, kTop = 30, kBottom = 60;
    constexpr std::array<std::string_view, 6> kPalette{"#1f77b4", "#d62728", "#2ca02c",
                                                       "#9467bd", "#ff7f0e", "#8c564b"};

    std::vector<std::string> order;
    std::map<std::string, std::vector<const StatsRow*>> series;
    for (const StatsRow& r : stats.rows) {
        const std::string name = to_string(r.measure);
        if (!series.contains(name)) order.push_back(name);
        series[name].push_back(&r);
    }
    for (auto& [name, rows] : series)
        std::stable_sort(rows.begin(), rows.end(), [](auto* a, auto* b) { return a->n < b->n; });

    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    if (!stats.rows.empty()) {
        xmin = ymin = 1e300;
        xmax = ymax = -1e300;
        for (const StatsRow& r : stats.rows) {
            xmin = std::min(xmin, double(r.n));
            xmax = std::max(xmax, double(r.n));
            ymin = std::min(ymin, r.mean - r.sem);
            ymax = std::max(ymax, r.mean + r.sem);
        }
    }
    const Axis xa = nice_axis(xmin, xmax);
    const Axis ya = nice_axis(std::min(ymin, 1.0) - 0.05, ymax + 0.05);
    const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
    auto px = [&](double x) { return fixed(kLeft + (x - xa.lo) / (xa.hi - xa.lo) * pw, 2); };
    auto py = [&](double y) { return fixed(kTop + (ya.hi - y) / (ya.hi - ya.lo) * ph, 2); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";

    // axes and grid
    os << "<g stroke=\"#cccccc\" stroke-width=\"0.5\">\n";
    for (double y = ya.lo; y <= ya.hi + ya.step / 2; y += ya.step)
        os << "<line x1=\"" << kLeft << "\" y1=\"" << py(y) << "\" x2=\"" << kLeft + pw << "\" y2=\"" << py(y) << "\"/>\n";
    os << "</g>\n";
    os << "<g stroke=\"black\" stroke-width=\"1\">\n"
       << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + ph << "\" x2=\"" << kLeft + pw << "\" y2=\"" << kTop + ph << "\"/>\n"
       << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + ph << "\"/>\n"
       << "</g>\n";
    os << "<g text-anchor=\"middle\">\n";
    for (double x = xa.lo; x <= xa.hi + xa.step / 2; x += xa.step)
        os << "<text x=\"" << px(x) << "\" y=\"" << kTop + ph + 18 << "\">" << tick_label(x, xa.step) << "</text>\n";
    os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 15 << "\">network size N</text>\n";
    os << "</g>\n<g text-anchor=\"end\">\n";
    for (double y = ya.lo; y <= ya.hi + ya.step / 2; y += ya.step)
        os << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(y) << "\" dy=\"4\">" << tick_label(y, ya.step) << "</text>\n";
    os << "</g>\n";
    os << "<text x=\"18\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
       << kTop + ph / 2 << ")\">supported tasks (mean)</text>\n";

    for (std::size_t s = 0; s < order.size(); ++s) {
        const auto& rows = series[order[s]];
        const std::string_view color = kPalette[s % kPalette.size()];
        os << "<g class=\"series\" data-measure=\"" << order[s] << "\">\n";
        if (rows.size() > 1) {
            os << "<path class=\"band\" fill=\"" << color << "\" fill-opacity=\"0.2\" stroke=\"none\" d=\"";
            for (std::size_t i = 0; i < rows.size(); ++i)
                os << (i ? " L" : "M") << px(rows[i]->n) << ',' << py(rows[i]->mean + rows[i]->sem);
            for (std::size_t i = rows.size(); i-- > 0;)
                os << " L" << px(rows[i]->n) << ',' << py(rows[i]->mean - rows[i]->sem);
            os << " Z\"/>\n";
            os << "<path class=\"curve\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" d=\"";
            for (std::size_t i = 0; i < rows.size(); ++i)
                os << (i ? " L" : "M") << px(rows[i]->n) << ',' << py(rows[i]->mean);
            os << "\"/>\n";
        }
        for (const StatsRow* r : rows)
            os << "<circle cx=\"" << px(r->n) << "\" cy=\"" << py(r->mean) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
        const double ly = kTop + 10 + 20 * static_cast<double>(s);
        os << "<line x1=\"" << kLeft + pw + 15 << "\" y1=\"" << ly << "\" x2=\"" << kLeft + pw + 40 << "\" y2=\"" << ly
           << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << kLeft + pw + 46 << "\" y=\"" << ly << "\" dy=\"4\">" << order[s] << "</text>\n";
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot read " + p.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::filesystem::path& p, std::string_view contents) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + p.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorCode::Io, "write failed for " + p.string());
}

namespace {

std::string join_path(const Path& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
    return s;
}

void print_witness(std::ostream& out, const TaskSet& tasks, const PathAssignment& w) {
    out << "witness:\n";
    for (const auto& wp : w) out << "  " << to_string(tasks[wp.task]) << ": " << join_path(wp.path) << '\n';
}

}  // namespace

int cmd_check(const TopologySpec& topology, const TaskSet& tasks, const CheckMode& mode, std::ostream& out) {
    const Graph g = topology.build();
    out << "tasks:";
    for (const Task& t : tasks) out << ' ' << to_string(t);
    out << '\n';

    switch (mode.kind) {
        case CheckMode::Kind::WorstCase: {
            const CompatibilityVerdict v = worst_case_compatible(g, tasks);
            out << "mode: worst_case\n";
            out << "verdict: " << (v.compatible ? "compatible" : "incompatible") << '\n';
            if (v.witness) print_witness(out, tasks, *v.witness);
            if (v.violated) out << "violated: " << to_string(*v.violated) << '\n';
            return v.compatible ? 0 : 1;
        }
        case CheckMode::Kind::Gk: {
            const GkVerdict r = gk_compatible(g, tasks, mode.k);
            out << "mode: gk:" << mode.k << '\n';
            out << "verdict: " << (r.verdict.compatible ? "compatible" : "incompatible") << '\n';
            if (r.plan) {
                out << "plan: cost " << r.plan->cost() << '\n';
                for (const Placement& p : r.plan->placements) {
                    out << "  " << to_string(p.role) << ' ' << p.edge.u << '-' << p.edge.v;
                    if (p.task) out << " serves " << to_string(tasks[*p.task]);
                    out << '\n';
                }
            }
            if (r.verdict.witness) print_witness(out, tasks, *r.verdict.witness);
            if (r.verdict.violated) out << "violated: " << to_string(*r.verdict.violated) << '\n';
            return r.verdict.compatible ? 0 : 1;
        }
        case CheckMode::Kind::Partial: {
            if (tasks.size() != 2) throw Error(ErrorCode::InvalidArgument, "partial mode needs exactly two tasks");
            out << "mode: partial:" << mode.dt << '\n';
            for (Tick d = 0; d <= mode.dt; ++d) {
                for (int first : {0, 1}) {
                    if (d == 0 && first == 1) continue;
                    const Tick a0 = first == 0 ? 0 : d, a1 = first == 0 ? d : 0;
                    const RaceOutcome r = run_race(g, RaceSchedule{{{tasks[0], a0}, {tasks[1], a1}}});
                    out << "  arrivals " << a0 << ',' << a1 << ": satisfied {";
                    bool sep = false;
                    for (std::size_t i : r.satisfied) {
                        out << (sep ? ", " : "") << to_string(tasks[i]);
                        sep = true;
                    }
                    out << "}\n";
                }
            }
            const bool ok = partial_compatible(g, tasks[0], tasks[1], mode.dt);
            out << "verdict: " << (ok ? "partial-compatible" : "not partial-compatible") << '\n';
            return ok ? 0 : 1;
        }
    }
    return 2;
}

int cmd_simulate(const ExperimentConfig& cfg, const std::filesystem::path& out, OutputFormat format) {
    const ExperimentStats stats = run_experiment(cfg);
    write_file(out, format == OutputFormat::Csv ? to_csv(stats) : to_json(stats));
    return 0;
}

int cmd_plot(const std::filesystem::path& stats_csv, const std::filesystem::path& out) {
    write_file(out, render_svg(parse_csv(read_file(stats_csv))));
    return 0;
}

}  // namespace mbqn::cli
