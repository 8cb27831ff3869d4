#pragma once

// NS-2 movement scenario files (`$ns_ at T "$node_(i) setdest X Y S"`) and
// node position files (`$node_(i) set X_ x`). The writers are canonical and
// strict; the parsers accept integer or decimal numbers and loose spacing.

#include <cmath>
#include <cstdint>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "anchorpath/error.hpp"
#include "anchorpath/geometry.hpp"
#include "anchorpath/number_format.hpp"
#include "anchorpath/path_models.hpp"

namespace anchorpath {

struct ScenarioCommand {
    double time = 0.0;
    int node_id = 0;
    Point2D dest;
    double speed = 0.0;

    friend bool operator==(const ScenarioCommand&, const ScenarioCommand&) = default;
};

struct ScenarioFile {
    std::vector<ScenarioCommand> commands;

    friend bool operator==(const ScenarioFile&, const ScenarioFile&) = default;
};

enum class NodeRole { sensor, base_station, anchor };

struct TopologyEntry {
    int node_id = 0;
    Point2D position;
    NodeRole role = NodeRole::sensor;

    bool is_base_station() const { return role == NodeRole::base_station; }

    friend bool operator==(const TopologyEntry&, const TopologyEntry&) = default;
};

struct TopologyFile {
    std::vector<TopologyEntry> entries;

    /// The entry tagged as the anchor's start position, if any.
    std::optional<TopologyEntry> anchor() const {
        for (const auto& e : entries)
            if (e.role == NodeRole::anchor) return e;
        return std::nullopt;
    }

    friend bool operator==(const TopologyFile&, const TopologyFile&) = default;
};

/// Cumulative departure times along `path` at constant `speed`: entry k is
/// the time the anchor leaves waypoint k (entry 0 is 0).
inline std::vector<double> departure_times(const Polyline& path, double speed) {
    std::vector<double> times;
    times.reserve(path.size());
    double walked = 0.0;
    times.push_back(0.0);
    for (std::size_t i = 1; i < path.size(); ++i) {
        walked += distance(path[i - 1], path[i]);
        times.push_back(walked / speed);
    }
    return times;
}

inline ScenarioFile build_commands(const Trajectory& t, double speed, int anchor_id) {
    if (t.path.size() < 2) throw InvalidArgument("trajectory has no motion");
    if (!(speed > 0.0) || !std::isfinite(speed)) throw InvalidArgument("invalid speed");
    if (anchor_id < 0) throw InvalidArgument("invalid anchor id");
    const auto times = departure_times(t.path, speed);
    ScenarioFile f;
    f.commands.reserve(t.path.size() - 1);
    for (std::size_t k = 0; k + 1 < t.path.size(); ++k)
        f.commands.push_back({times[k], anchor_id, t.path[k + 1], speed});
    return f;
}

inline std::string render_command(const ScenarioCommand& c) {
    std::string line = "$ns_ at ";
    line += format_shortest(c.time);
    line += " \"$node_(" + std::to_string(c.node_id) + ") setdest ";
    line += format_decimal(c.dest.x) + " " + format_decimal(c.dest.y) + " " + format_decimal(c.speed);
    line += "\"";
    return line;
}

inline std::string render_scenario(const ScenarioFile& f) {
    std::string out;
    for (const auto& c : f.commands) {
        out += render_command(c);
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

inline bool is_blank(std::string_view s) { return s.find_first_not_of(" \t") == std::string_view::npos; }

inline std::string excerpt(std::string_view s) {
    constexpr std::size_t max_len = 80;
    std::string out(s.substr(0, max_len));
    if (s.size() > max_len) out += "...";
    return out;
}

inline const std::regex& setdest_pattern() {
    static const std::regex re(
        R"(^\s*\$ns_\s+at\s+(\S+)\s+"\s*\$node_\(\s*(\d+)\s*\)\s+setdest\s+(\S+)\s+(\S+)\s+([^\s"]+)\s*"\s*$)");
    return re;
}

inline int parse_node_id(const std::string& s, std::size_t line_no, std::string_view line) {
    if (s.size() > 9) throw ParseError(line_no, "node id out of range: '" + excerpt(line) + "'");
    return std::stoi(s);
}

}  // namespace detail

/// Parses one `setdest` line. Throws ParseError tagged with `line_no`.
inline ScenarioCommand parse_command(std::string_view line, std::size_t line_no) {
    std::match_results<std::string_view::const_iterator> m;
    if (!std::regex_match(line.begin(), line.end(), m, detail::setdest_pattern()))
        throw ParseError(line_no, "malformed setdest command: '" + detail::excerpt(line) + "'");
    ScenarioCommand c;
    auto num = [&](int group, double& out, const char* what) {
        if (!parse_double(std::string_view(&*m[group].first, m[group].length()), out) || !std::isfinite(out))
            throw ParseError(line_no, std::string("bad ") + what + " in '" + detail::excerpt(line) + "'");
    };
    num(1, c.time, "time");
    c.node_id = detail::parse_node_id(m[2].str(), line_no, line);
    num(3, c.dest.x, "x coordinate");
    num(4, c.dest.y, "y coordinate");
    num(5, c.speed, "speed");
    if (c.time < 0.0) throw ParseError(line_no, "negative time in '" + detail::excerpt(line) + "'");
    if (!(c.speed > 0.0)) throw ParseError(line_no, "speed must be positive in '" + detail::excerpt(line) + "'");
    return c;
}

/// A scenario line together with its 1-based position in the source text.
struct NumberedCommand {
    std::size_t line = 0;
    ScenarioCommand command;
};

/// Parses every non-blank line, collecting one message per failure instead of
/// stopping at the first. Used by validation, which reports all problems.
inline std::vector<NumberedCommand> parse_scenario_lines(std::string_view text, std::vector<std::string>& problems) {
    std::vector<NumberedCommand> out;
    const auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (detail::is_blank(lines[i])) continue;
        try {
            out.push_back({i + 1, parse_command(lines[i], i + 1)});
        } catch (const ParseError& e) {
            problems.push_back(e.what());
        }
    }
    for (std::size_t i = 1; i < out.size(); ++i) {
        if (out[i].command.time < out[i - 1].command.time)
            problems.push_back("line " + std::to_string(out[i].line) + ": non-monotonic time");
        if (out[i].command.node_id != out[0].command.node_id)
            problems.push_back("line " + std::to_string(out[i].line) + ": multiple mobile nodes");
    }
    return out;
}

/// Parses a whole scenario file; throws on the first problem.
inline ScenarioFile parse_scenario(std::string_view text, std::vector<std::size_t>* line_numbers = nullptr) {
    ScenarioFile f;
    const auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (detail::is_blank(lines[i])) continue;
        auto c = parse_command(lines[i], i + 1);
        if (!f.commands.empty()) {
            if (c.time < f.commands.back().time) throw ParseError(i + 1, "non-monotonic time");
            if (c.node_id != f.commands.front().node_id) throw ParseError(i + 1, "multiple mobile nodes");
        }
        f.commands.push_back(c);
        if (line_numbers) line_numbers->push_back(i + 1);
    }
    return f;
}

inline std::string render_topology(const TopologyFile& t) {
    std::string out;
    for (const auto& e : t.entries) {
        const std::string node = "$node_(" + std::to_string(e.node_id) + ")";
        if (e.role == NodeRole::base_station) out += "# base_station " + std::to_string(e.node_id) + "\n";
        if (e.role == NodeRole::anchor) out += "# anchor " + std::to_string(e.node_id) + "\n";
        out += node + " set X_ " + format_decimal(e.position.x) + "\n";
        out += node + " set Y_ " + format_decimal(e.position.y) + "\n";
        out += node + " set Z_ 0.0\n";
    }
    return out;
}

/// Reads the three-lines-per-node position format. `# base_station ID` and
/// `# anchor ID` comments tag the node that follows; other comments are ignored.
inline TopologyFile parse_topology(std::string_view text) {
    static const std::regex set_re(R"(^\s*\$node_\(\s*(\d+)\s*\)\s+set\s+([XYZ])_\s+(\S+)\s*$)");
    static const std::regex tag_re(R"(^\s*#\s*(base_station|anchor)\s+(\d+)\s*$)");

    struct Pending {
        int id;
        std::size_t first_line;
        std::optional<double> x, y, z;
        NodeRole role;
    };

    TopologyFile out;
    std::set<int> seen;
    std::optional<Pending> cur;
    int tag_id = -1;  // node named by the last `#` tag, -1 if none pending
    NodeRole tag_role = NodeRole::sensor;

    auto finish = [&](std::size_t line_no) {
        if (!cur) return;
        if (!cur->x || !cur->y)
            throw ParseError(cur->first_line, "node " + std::to_string(cur->id) + " lacks X_ or Y_");
        if (!seen.insert(cur->id).second) throw ParseError(line_no, "duplicate node id " + std::to_string(cur->id));
        out.entries.push_back({cur->id, {*cur->x, *cur->y}, cur->role});
        cur.reset();
    };

    const auto lines = detail::split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const auto line = lines[i];
        const std::size_t no = i + 1;
        if (detail::is_blank(line)) continue;
        std::match_results<std::string_view::const_iterator> m;
        if (std::regex_match(line.begin(), line.end(), m, tag_re)) {
            finish(no);
            tag_id = detail::parse_node_id(m[2].str(), no, line);
            tag_role = m[1].str() == "anchor" ? NodeRole::anchor : NodeRole::base_station;
            continue;
        }
        if (line[line.find_first_not_of(" \t")] == '#') continue;
        if (!std::regex_match(line.begin(), line.end(), m, set_re))
            throw ParseError(no, "malformed topology line: '" + detail::excerpt(line) + "'");
        const int id = detail::parse_node_id(m[1].str(), no, line);
        double v = 0.0;
        if (!parse_double(std::string_view(&*m[3].first, m[3].length()), v) || !std::isfinite(v))
            throw ParseError(no, "bad coordinate in '" + detail::excerpt(line) + "'");
        if (!cur || cur->id != id) {
            finish(no);
            NodeRole role = NodeRole::sensor;
            if (tag_id >= 0) {
                if (tag_id != id)
                    throw ParseError(no, "tag names node " + std::to_string(tag_id) + " but node " +
                                             std::to_string(id) + " follows");
                role = tag_role;
            }
            tag_id = -1;
            cur = Pending{id, no, std::nullopt, std::nullopt, std::nullopt, role};
        }
        auto& slot = m[2].str() == "X" ? cur->x : m[2].str() == "Y" ? cur->y : cur->z;
        if (slot) throw ParseError(no, "duplicate node id " + std::to_string(id) + " (coordinate set twice)");
        slot = v;
    }
    finish(lines.size());
    if (tag_id >= 0) throw ParseError(lines.size(), "dangling tag for node " + std::to_string(tag_id));
    return out;
}

}  // namespace anchorpath
