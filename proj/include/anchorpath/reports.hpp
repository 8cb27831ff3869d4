#pragma once

// Text exporters: statistics block, chart/trace/coverage CSV, SVG plot.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anchorpath/geometry.hpp"
#include "anchorpath/mobility.hpp"
#include "anchorpath/number_format.hpp"
#include "anchorpath/path_models.hpp"
#include "anchorpath/wsn.hpp"

namespace anchorpath {

inline std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

/// Display rows in table order: area, model extras, length, time. Lengths and
/// areas are rounded to the meter; an exact length row follows when rounding
/// changed the value.
inline std::vector<StatEntry> stats_rows(const ModelStats& s) {
    auto meters = [](double v) { return format_shortest(std::round(v)); };
    std::vector<StatEntry> rows;
    rows.push_back({"Area Size (m2)", meters(s.area_width) + " x " + meters(s.area_height)});
    rows.insert(rows.end(), s.extras.begin(), s.extras.end());
    rows.push_back({"Total Trajectory Length (m)", meters(s.total_length)});
    if (std::round(s.total_length) != s.total_length)
        rows.push_back({"Total Trajectory Length, exact (m)", format_shortest(s.total_length)});
    rows.push_back({"Simulation Time (Sec)", std::to_string(s.sim_time)});
    return rows;
}

/// `Results,Value` header plus one label,value row per stat.
inline std::string export_stats_csv(const ModelStats& s) {
    std::string out = "Results,Value\n";
    for (const auto& r : stats_rows(s)) out += csv_field(r.label) + "," + csv_field(r.value) + "\n";
    return out;
}

inline std::string export_chart_csv(const Trajectory& t) {
    std::string out = "x,y\n";
    for (const auto& p : t.path.points()) out += format_decimal(p.x) + "," + format_decimal(p.y) + "\n";
    return out;
}

inline std::string trace_header() { return "t,x,y,fraction\n"; }

inline std::string trace_row(const Progress& p) {
    return format_shortest(p.elapsed) + "," + format_decimal(p.position.x) + "," + format_decimal(p.position.y) +
           "," + format_decimal(p.fraction) + "\n";
}

inline std::string export_coverage_csv(const CoverageReport& r) {
    std::string out = "sensor_id,x,y,is_base,beacons_heard,localizable\n";
    for (const auto& s : r.per_sensor) {
        out += std::to_string(s.sensor_id) + "," + format_decimal(s.position.x) + "," + format_decimal(s.position.y) +
               "," + (s.is_base_station ? "1" : "0") + "," + std::to_string(s.beacons_heard) + "," +
               (s.localizable ? "1" : "0") + "\n";
    }
    return out;
}

/// `localizable: k/n (p%)` with one decimal of percent.
inline std::string coverage_summary(const CoverageReport& r) {
    const double pct = std::round(r.localizable_fraction * 1000.0) / 10.0;
    return "localizable: " + std::to_string(r.localizable) + "/" + std::to_string(r.eligible) + " (" +
           format_decimal(pct) + "%)";
}

/// Standalone SVG of the path (and network, if given). World y points up, so
/// every y is negated before it is written.
inline std::string export_svg(const Trajectory& t, const Network* net = nullptr) {
    std::vector<Point2D> all(t.path.points().begin(), t.path.points().end());
    if (net) {
        for (const auto& s : net->sensors) all.push_back(s.position);
    }
    const Rect box = bounding_box(all);
    const double extent = std::max(box.width(), box.height());
    const double margin = std::max(0.05 * extent, 1.0);
    const double dot = std::max(extent / 100.0, 0.5);
    auto num = [](double v) { return format_shortest(v); };
    auto flip = [](double y) { return 0.0 - y; };

    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(box.min.x - margin) + " " +
           num(flip(box.max.y) - margin) + " " + num(box.width() + 2 * margin) + " " +
           num(box.height() + 2 * margin) + "\">\n";
    out += "  <title>" + t.model + " trajectory</title>\n";
    out += "  <polyline class=\"path\" fill=\"none\" stroke=\"black\" stroke-width=\"" + num(dot / 3.0) +
           "\" points=\"";
    for (std::size_t i = 0; i < t.path.size(); ++i) {
        if (i) out += ' ';
        out += num(t.path[i].x) + "," + num(flip(t.path[i].y));
    }
    out += "\"/>\n";
    if (net) {
        for (const auto& s : net->sensors) {
            out += "  <circle class=\"" + std::string(s.is_base_station ? "base-station" : "sensor") + "\" cx=\"" +
                   num(s.position.x) + "\" cy=\"" + num(flip(s.position.y)) + "\" r=\"" + num(dot) + "\" fill=\"" +
                   (s.is_base_station ? "steelblue" : "white") + "\" stroke=\"steelblue\"/>\n";
        }
    }
    const Point2D start = t.path.front();
    out += "  <circle class=\"anchor-start\" cx=\"" + num(start.x) + "\" cy=\"" + num(flip(start.y)) + "\" r=\"" +
           num(dot * 1.5) + "\" fill=\"orange\"/>\n";
    out += "</svg>\n";
    return out;
}

}  // namespace anchorpath
