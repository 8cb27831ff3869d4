#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "anchorpath/error.hpp"

namespace anchorpath {

/// A planar position in meters.
struct Point2D {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(const Point2D&, const Point2D&) = default;
};

inline bool is_finite(const Point2D& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline double distance(const Point2D& a, const Point2D& b) { return std::hypot(b.x - a.x, b.y - a.y); }

/// Linear interpolation a + f (b - a).
inline Point2D lerp(const Point2D& a, const Point2D& b, double f) {
    return {a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
}

/// z-component of (b - a) x (c - a); twice the signed triangle area.
inline double cross(const Point2D& a, const Point2D& b, const Point2D& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

/// Axis-aligned rectangle with min <= max componentwise.
struct Rect {
    Point2D min;
    Point2D max;

    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }
    bool contains(const Point2D& p) const {
        return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
    }

    friend bool operator==(const Rect&, const Rect&) = default;
};

/// Ordered waypoints with at least one point and no zero-length segments.
class Polyline {
public:
    explicit Polyline(std::vector<Point2D> points) : points_(std::move(points)) { validate(); }
    Polyline(std::initializer_list<Point2D> points) : points_(points) { validate(); }

    std::span<const Point2D> points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    const Point2D& operator[](std::size_t i) const { return points_[i]; }
    const Point2D& front() const { return points_.front(); }
    const Point2D& back() const { return points_.back(); }

    friend bool operator==(const Polyline&, const Polyline&) = default;

private:
    void validate() const {
        if (points_.empty()) throw InvalidArgument("polyline needs at least one point");
        for (std::size_t i = 0; i < points_.size(); ++i) {
            if (!is_finite(points_[i])) throw InvalidArgument("polyline point is not finite");
            if (i > 0 && points_[i] == points_[i - 1])
                throw InvalidArgument("polyline has a zero-length segment");
        }
    }

    std::vector<Point2D> points_;
};

inline double polyline_length(const Polyline& p) {
    double total = 0.0;
    for (std::size_t i = 1; i < p.size(); ++i) total += distance(p[i - 1], p[i]);
    return total;
}

/// Point at distance `s` along the polyline; clamps to the last point past the end.
inline Point2D point_at_arclength(const Polyline& p, double s) {
    if (!(s >= 0.0)) throw InvalidArgument("arclength out of range");
    double walked = 0.0;
    for (std::size_t i = 1; i < p.size(); ++i) {
        const double seg = distance(p[i - 1], p[i]);
        if (s <= walked + seg) return lerp(p[i - 1], p[i], (s - walked) / seg);
        walked += seg;
    }
    return p.back();
}

/// True iff |cross(b - a, c - a)| <= eps, i.e. twice the triangle area is within eps.
inline bool collinear(const Point2D& a, const Point2D& b, const Point2D& c, double eps = 1e-6) {
    if (eps < 0.0) throw InvalidArgument("collinearity threshold must be non-negative");
    return std::abs(cross(a, b, c)) <= eps;
}

inline Rect bounding_box(std::span<const Point2D> pts) {
    if (pts.empty()) throw InvalidArgument("bounding box of an empty point set");
    Rect r{pts.front(), pts.front()};
    for (const auto& q : pts) {
        r.min.x = std::min(r.min.x, q.x);
        r.min.y = std::min(r.min.y, q.y);
        r.max.x = std::max(r.max.x, q.x);
        r.max.y = std::max(r.max.y, q.y);
    }
    return r;
}

inline Rect bounding_box(const Polyline& p) { return bounding_box(p.points()); }

/// Euclidean distance from `p` to the closed segment [a, b].
inline double distance_to_segment(const Point2D& p, const Point2D& a, const Point2D& b) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return distance(p, a);
    const double f = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
    return distance(p, lerp(a, b, f));
}

}  // namespace anchorpath
