#pragma once

// Static anchor path generators (SCAN, DOUBLE-SCAN, HILBERT, SPIRAL), their
// per-model statistics, and the name -> generator registry.

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "anchorpath/error.hpp"
#include "anchorpath/geometry.hpp"
#include "anchorpath/number_format.hpp"

namespace anchorpath {

struct ModelParams {
    int segments = 10;          ///< number of horizontal R segments (nR)
    double resolution = 50.0;   ///< length of one R segment, meters
    int curve_level = 4;        ///< HILBERT refinement level
    Point2D origin{1.0, 1.0};   ///< lower-left corner of the swept square
    double spiral_step = 0.25;  ///< SPIRAL arc-length sampling step, meters

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

struct Trajectory {
    std::string model;
    ModelParams params;
    Polyline path;

    friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

/// One labelled line of a statistics block; the value is already rendered.
struct StatEntry {
    std::string label;
    std::string value;

    friend bool operator==(const StatEntry&, const StatEntry&) = default;
};

struct ModelStats {
    double area_width = 0.0;
    double area_height = 0.0;
    double total_length = 0.0;
    std::int64_t sim_time = 0;  ///< floor(total_length / speed), seconds
    std::vector<StatEntry> extras;
};

namespace detail {

inline void require_segments(const ModelParams& p) {
    if (p.segments < 1) throw InvalidArgument("invalid segment count");
    if (!(p.resolution > 0.0) || !std::isfinite(p.resolution))
        throw InvalidArgument("invalid resolution");
    if (!is_finite(p.origin)) throw InvalidArgument("invalid origin");
}

/// Vertical boustrophedon over an nR x nR cell square: column 0 ascends.
inline std::vector<Point2D> scan_points(const ModelParams& p) {
    const double side = p.segments * p.resolution;
    std::vector<Point2D> pts;
    pts.reserve(2 * static_cast<std::size_t>(p.segments + 1));
    for (int i = 0; i <= p.segments; ++i) {
        const double x = p.origin.x + i * p.resolution;
        const double lo = p.origin.y, hi = p.origin.y + side;
        if (i % 2 == 0) {
            pts.push_back({x, lo});
            pts.push_back({x, hi});
        } else {
            pts.push_back({x, hi});
            pts.push_back({x, lo});
        }
    }
    return pts;
}

/// Horizontal boustrophedon over the same square, starting at `corner`.
inline std::vector<Point2D> transposed_scan_points(const ModelParams& p, Point2D corner) {
    const double side = p.segments * p.resolution;
    const double left = p.origin.x, right = p.origin.x + side;
    const bool from_top = corner.y != p.origin.y;
    const bool from_right = corner.x != p.origin.x;
    std::vector<Point2D> pts;
    pts.reserve(2 * static_cast<std::size_t>(p.segments + 1));
    for (int j = 0; j <= p.segments; ++j) {
        const double y = from_top ? p.origin.y + side - j * p.resolution : p.origin.y + j * p.resolution;
        const bool rightward = (j % 2 == 0) != from_right;
        if (rightward) {
            pts.push_back({left, y});
            pts.push_back({right, y});
        } else {
            pts.push_back({right, y});
            pts.push_back({left, y});
        }
    }
    return pts;
}

struct Cell {
    std::int64_t x;
    std::int64_t y;
};

/// Hilbert lattice walk from (0,0) to (2^L - 1, 0). Each level is built from
/// four copies of the previous one: transposed, shifted up, shifted up-right,
/// and anti-transposed into the lower-right quadrant.
inline std::vector<Cell> hilbert_cells(int level) {
    std::vector<Cell> cur{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    for (int l = 2; l <= level; ++l) {
        const std::int64_t h = std::int64_t{1} << (l - 1);
        std::vector<Cell> next;
        next.reserve(cur.size() * 4);
        for (const auto& c : cur) next.push_back({c.y, c.x});
        for (const auto& c : cur) next.push_back({c.x, c.y + h});
        for (const auto& c : cur) next.push_back({c.x + h, c.y + h});
        for (const auto& c : cur) next.push_back({h - 1 - c.y + h, h - 1 - c.x});
        cur = std::move(next);
    }
    return cur;
}

inline double spiral_growth(const ModelParams& p) { return p.resolution / (2.0 * std::numbers::pi); }
inline double spiral_max_radius(const ModelParams& p) { return (p.segments + 1) * p.resolution / 2.0; }
inline double spiral_final_angle(const ModelParams& p) { return spiral_max_radius(p) / spiral_growth(p); }
inline Point2D spiral_center(const ModelParams& p) {
    const double r = spiral_max_radius(p);
    return {p.origin.x + r, p.origin.y + r};
}

/// Arc length of r = b*theta from 0 to theta.
inline double spiral_arclength(double b, double theta) {
    return 0.5 * b * (theta * std::sqrt(1.0 + theta * theta) + std::asinh(theta));
}

/// Inverse of spiral_arclength by Newton iteration, seeded with `guess`.
inline double spiral_angle_at(double b, double s, double guess) {
    double theta = guess;
    for (int it = 0; it < 50; ++it) {
        const double f = spiral_arclength(b, theta) - s;
        const double step = f / (b * std::sqrt(1.0 + theta * theta));
        theta = std::max(0.0, theta - step);
        if (std::abs(step) <= 1e-14 * std::max(1.0, theta)) break;
    }
    return theta;
}

inline std::string fmt_int(double v) { return format_shortest(std::round(v)); }

}  // namespace detail

inline Trajectory generate_scan(const ModelParams& params) {
    detail::require_segments(params);
    return {"scan", params, Polyline(detail::scan_points(params))};
}

/// SCAN followed by its transpose. The horizontal pass starts at whichever
/// corner the vertical pass ended on, so no connecting segment is needed.
inline Trajectory generate_double_scan(const ModelParams& params) {
    detail::require_segments(params);
    auto pts = detail::scan_points(params);
    const Point2D end = pts.back();
    const auto second = detail::transposed_scan_points(params, end);
    auto it = second.begin();
    if (*it == end) ++it;
    pts.insert(pts.end(), it, second.end());
    return {"double-scan", params, Polyline(std::move(pts))};
}

inline constexpr int max_hilbert_level = 12;

/// Level-L Hilbert walk over a 2^L x 2^L lattice of spacing `resolution`.
/// The first move always points +y: odd levels end on the lower-right
/// corner, even levels on the upper-left.
inline Trajectory generate_hilbert(const ModelParams& params) {
    if (params.curve_level < 1) throw InvalidArgument("invalid curve level");
    if (params.curve_level > max_hilbert_level) throw InvalidArgument("curve level too large");
    if (!(params.resolution > 0.0) || !std::isfinite(params.resolution))
        throw InvalidArgument("invalid resolution");
    const bool transpose = params.curve_level % 2 == 0;
    const auto cells = detail::hilbert_cells(params.curve_level);
    std::vector<Point2D> pts;
    pts.reserve(cells.size());
    for (const auto& c : cells) {
        const auto gx = static_cast<double>(transpose ? c.y : c.x);
        const auto gy = static_cast<double>(transpose ? c.x : c.y);
        pts.push_back({params.origin.x + gx * params.resolution, params.origin.y + gy * params.resolution});
    }
    return {"hilbert", params, Polyline(std::move(pts))};
}

/// Archimedean spiral r = b*theta, b = resolution / 2pi, grown from the
/// centre of the (nR+1)*resolution square out to half its side, sampled at
/// equal arc-length steps. The final sample sits exactly on the end angle.
inline Trajectory generate_spiral(const ModelParams& params) {
    detail::require_segments(params);
    if (!(params.spiral_step > 0.0) || !std::isfinite(params.spiral_step))
        throw InvalidArgument("invalid spiral step");
    const double b = detail::spiral_growth(params);
    const double theta_end = detail::spiral_final_angle(params);
    const double total = detail::spiral_arclength(b, theta_end);
    const Point2D c = detail::spiral_center(params);
    auto at = [&](double theta) {
        const double r = b * theta;
        return Point2D{c.x + r * std::cos(theta), c.y + r * std::sin(theta)};
    };

    std::vector<Point2D> pts{c};
    double theta = 0.0;
    for (std::int64_t k = 1;; ++k) {
        const double s = static_cast<double>(k) * params.spiral_step;
        if (s >= total - 1e-6 * params.spiral_step) break;
        theta = detail::spiral_angle_at(b, s, theta);
        pts.push_back(at(theta));
    }
    pts.push_back(at(theta_end));
    return {"spiral", params, Polyline(std::move(pts))};
}

/// Closed-form arc length of the SPIRAL model for `params`.
inline double spiral_length(const ModelParams& params) {
    return detail::spiral_arclength(detail::spiral_growth(params), detail::spiral_final_angle(params));
}

struct ModelEntry {
    std::string name;
    std::function<Trajectory(const ModelParams&)> generate;
    /// Model-specific statistics lines; may be empty.
    std::function<std::vector<StatEntry>(const Trajectory&, double speed)> extras;
    Point2D default_origin{1.0, 1.0};
};

namespace detail {

inline std::vector<StatEntry> scan_extras(const Trajectory& t, double) {
    const auto& p = t.params;
    return {{"Length of Vertical Segment (m)", fmt_int(p.segments * p.resolution)},
            {"Number of Vertical Segments", std::to_string(p.segments + 1)}};
}

inline std::vector<StatEntry> double_scan_extras(const Trajectory& t, double) {
    const auto& p = t.params;
    return {{"Length of Vertical Segment (m)", fmt_int(p.segments * p.resolution)},
            {"Number of Vertical Segments", std::to_string(p.segments + 1)},
            {"Number of Horizontal Segments", std::to_string(p.segments + 1)}};
}

inline std::vector<StatEntry> hilbert_extras(const Trajectory& t, double speed) {
    const auto& p = t.params;
    const std::int64_t side = (std::int64_t{1} << p.curve_level) - 1;
    const double with_approach = static_cast<double>(t.path.size()) * p.resolution;
    return {{"Number of Horizontal Segment", std::to_string(side)},
            {"Number of Waypoints", std::to_string(t.path.size())},
            {"Length Convention", "(4^L - 1) x resolution"},
            {"Length Counting Approach Segment (m)", fmt_int(with_approach)},
            {"Simulation Time Counting Approach Segment (Sec)",
             format_shortest(std::floor(with_approach / speed))}};
}

inline std::vector<StatEntry> spiral_extras(const Trajectory& t, double) {
    const auto& p = t.params;
    const double b = spiral_growth(p);
    const double theta = spiral_final_angle(p);
    const Point2D c = spiral_center(p);
    return {{"Number of Spiral Turns", format_shortest(std::floor(theta / (2.0 * std::numbers::pi)))},
            {"Spiral Final Radius (m)", fmt_int(spiral_max_radius(p))},
            {"Spiral Growth Rate (m)", fmt_int(b)},
            {"Spiral Growth Rate, exact (m)", format_shortest(b)},
            {"Spiral Final Angle (rad)", fmt_int(theta)},
            {"Spiral Final Angle, exact (rad)", format_shortest(theta)},
            {"Anchor Initial Position (x, y)", "(" + format_shortest(c.x) + ", " + format_shortest(c.y) + ")"}};
}

}  // namespace detail

/// Name -> generator table. Immutable once shared; register extensions first.
class ModelRegistry {
public:
    void add(ModelEntry entry) {
        for (auto& e : entries_) {
            if (e.name == entry.name) {
                e = std::move(entry);
                return;
            }
        }
        entries_.push_back(std::move(entry));
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& e : entries_) out.push_back(e.name);
        return out;
    }

    const ModelEntry* find(const std::string& name) const {
        for (const auto& e : entries_)
            if (e.name == name) return &e;
        return nullptr;
    }

    const ModelEntry& get(const std::string& name) const {
        if (const auto* e = find(name)) return *e;
        std::string msg = "unknown model '" + name + "' (available:";
        for (std::size_t i = 0; i < entries_.size(); ++i) msg += (i ? ", " : " ") + entries_[i].name;
        throw InvalidArgument(msg + ")");
    }

    static const ModelRegistry& builtin() {
        static const ModelRegistry reg = [] {
            ModelRegistry r;
            r.add({"scan", generate_scan, detail::scan_extras, {1.0, 1.0}});
            r.add({"double-scan", generate_double_scan, detail::double_scan_extras, {1.0, 1.0}});
            r.add({"hilbert", generate_hilbert, detail::hilbert_extras, {1.0, 1.0}});
            r.add({"spiral", generate_spiral, detail::spiral_extras, {0.0, 0.0}});
            return r;
        }();
        return reg;
    }

private:
    std::vector<ModelEntry> entries_;
};

inline std::vector<std::string> registry_list() { return ModelRegistry::builtin().names(); }

inline const ModelEntry& registry_get(const std::string& name) { return ModelRegistry::builtin().get(name); }

inline ModelStats compute_stats(const Trajectory& t, double speed,
                                const ModelRegistry& registry = ModelRegistry::builtin()) {
    if (!(speed > 0.0) || !std::isfinite(speed)) throw InvalidArgument("invalid speed");
    const Rect box = bounding_box(t.path);
    ModelStats s;
    s.area_width = box.width();
    s.area_height = box.height();
    s.total_length = polyline_length(t.path);
    s.sim_time = static_cast<std::int64_t>(std::floor(s.total_length / speed));
    if (const auto* e = registry.find(t.model); e && e->extras) s.extras = e->extras(t, speed);
    return s;
}

}  // namespace anchorpath
