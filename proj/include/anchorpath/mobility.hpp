#pragma once

// Constant-speed replay of an anchor path: position queries, periodic beacon
// schedules and caller-driven stepping. No clocks or threads; the caller
// decides what time it is.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anchorpath/error.hpp"
#include "anchorpath/geometry.hpp"
#include "anchorpath/ns2_scenario.hpp"
#include "anchorpath/number_format.hpp"
#include "anchorpath/path_models.hpp"

namespace anchorpath {

struct TimedWaypoint {
    double time = 0.0;  ///< arrival time, seconds
    Point2D point;
};

struct TimedPath {
    std::vector<TimedWaypoint> waypoints;
    double speed = 0.0;
    double total_time = 0.0;
};

struct BeaconEvent {
    double time = 0.0;
    Point2D position;
    std::int64_t seq = 0;
};

struct Progress {
    double elapsed = 0.0;
    double fraction = 0.0;
    Point2D position;
    bool finished = false;
};

inline TimedPath build_timed_path(const Polyline& path, double speed) {
    if (!(speed > 0.0) || !std::isfinite(speed)) throw InvalidArgument("invalid speed");
    if (path.size() < 2) throw InvalidArgument("trajectory has no motion");
    const auto times = departure_times(path, speed);
    TimedPath tp;
    tp.speed = speed;
    tp.waypoints.reserve(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) tp.waypoints.push_back({times[i], path[i]});
    tp.total_time = times.back();
    return tp;
}

inline TimedPath build_timed_path(const Trajectory& t, double speed) { return build_timed_path(t.path, speed); }

/// Departure times in a scenario may deviate from the path geometry by this much.
inline constexpr double scenario_time_tolerance = 1e-6;

struct TimingProblem {
    std::size_t line = 0;
    std::string message;
};

/// Checks that each command departs exactly when the previous leg arrives.
/// Without `start` the first leg's length is unknown and is not checked.
inline std::vector<TimingProblem> scenario_timing_problems(const std::vector<NumberedCommand>& cmds,
                                                           std::optional<Point2D> start) {
    std::vector<TimingProblem> out;
    for (std::size_t k = 1; k < cmds.size(); ++k) {
        const auto& prev = cmds[k - 1].command;
        const auto& cur = cmds[k].command;
        if (cur.speed != prev.speed) {
            out.push_back({cmds[k].line, "speed changes at line " + std::to_string(cmds[k].line) + ": " +
                                             format_decimal(prev.speed) + " to " + format_decimal(cur.speed) +
                                             " m/s"});
            continue;
        }
        std::optional<Point2D> from;
        if (k >= 2)
            from = cmds[k - 2].command.dest;
        else
            from = start;
        if (!from) continue;
        const double leg = distance(*from, prev.dest) / prev.speed;
        const double expected = prev.time + leg;
        if (std::abs(expected - cur.time) > scenario_time_tolerance) {
            out.push_back({cmds[k].line, "scenario timing infeasible at line " + std::to_string(cmds[k].line) +
                                             ": expected t=" + format_shortest(expected) + ", got t=" +
                                             format_shortest(cur.time) + " (leg needs " + format_shortest(leg) +
                                             " s, file allows " + format_shortest(cur.time - prev.time) + " s)"});
        }
    }
    return out;
}

/// Rebuilds the replay path [start, dest_0, dest_1, ...] from a scenario.
/// The replay clock starts at the first command's departure time.
inline TimedPath from_scenario(const ScenarioFile& f, const Point2D& start,
                               const std::vector<std::size_t>& line_numbers = {}) {
    if (f.commands.empty()) throw ParseError(0, "scenario has no commands");
    std::vector<NumberedCommand> numbered;
    numbered.reserve(f.commands.size());
    for (std::size_t i = 0; i < f.commands.size(); ++i)
        numbered.push_back({i < line_numbers.size() ? line_numbers[i] : i + 1, f.commands[i]});

    const auto problems = scenario_timing_problems(numbered, start);
    if (!problems.empty())
        throw ParseError(ParseError::Verbatim{}, problems.front().line, problems.front().message);

    TimedPath tp;
    tp.speed = f.commands.front().speed;
    const double t0 = f.commands.front().time;
    tp.waypoints.push_back({0.0, start});
    Point2D prev = start;
    for (std::size_t i = 0; i < f.commands.size(); ++i) {
        const auto& c = f.commands[i];
        if (c.dest == prev) throw ParseError(numbered[i].line, "zero-length move");
        const double arrival =
            i + 1 < f.commands.size() ? f.commands[i + 1].time - t0 : c.time - t0 + distance(prev, c.dest) / c.speed;
        tp.waypoints.push_back({arrival, c.dest});
        prev = c.dest;
    }
    tp.total_time = tp.waypoints.back().time;
    return tp;
}

inline Progress position_at(const TimedPath& tp, double t) {
    if (!(t >= 0.0)) throw InvalidArgument("time out of range");
    const auto& w = tp.waypoints;
    if (t >= tp.total_time) return {t, 1.0, w.back().point, true};
    auto it = std::upper_bound(w.begin(), w.end(), t, [](double v, const TimedWaypoint& p) { return v < p.time; });
    const auto& b = *it;
    const auto& a = *(it - 1);
    const Point2D pos = lerp(a.point, b.point, (t - a.time) / (b.time - a.time));
    return {t, std::min(t / tp.total_time, 1.0), pos, false};
}

/// Beacons at 0, interval, 2*interval, ... plus one at total_time when the
/// grid does not land on it.
inline std::vector<BeaconEvent> beacon_schedule(const TimedPath& tp, double interval) {
    if (!(interval > 0.0) || !std::isfinite(interval)) throw InvalidArgument("invalid beacon interval");
    std::vector<BeaconEvent> events;
    for (std::int64_t k = 0;; ++k) {
        const double t = static_cast<double>(k) * interval;
        if (t > tp.total_time) break;
        events.push_back({t, position_at(tp, t).position, k});
    }
    if (events.back().time != tp.total_time) {
        const auto seq = static_cast<std::int64_t>(events.size());
        events.push_back({tp.total_time, tp.waypoints.back().point, seq});
    }
    return events;
}

/// Pull-style sequence of snapshots at 0, tick, 2*tick, ... ending with the
/// first finished one.
class StepIterator {
public:
    StepIterator(const TimedPath& tp, double tick) : path_(&tp), tick_(tick) {
        if (!(tick > 0.0) || !std::isfinite(tick)) throw InvalidArgument("invalid tick");
    }

    std::optional<Progress> next() {
        if (done_) return std::nullopt;
        const auto p = position_at(*path_, static_cast<double>(index_++) * tick_);
        done_ = p.finished;
        return p;
    }

private:
    const TimedPath* path_;
    double tick_;
    std::int64_t index_ = 0;
    bool done_ = false;
};

inline StepIterator step_iterator(const TimedPath& tp, double tick) { return StepIterator(tp, tick); }

}  // namespace anchorpath
