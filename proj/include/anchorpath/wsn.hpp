#pragma once

// The sensor field: deployment of base stations and random sensors, unit-disk
// beacon reception and per-sensor localizability.

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "anchorpath/error.hpp"
#include "anchorpath/geometry.hpp"
#include "anchorpath/mobility.hpp"
#include "anchorpath/ns2_scenario.hpp"

namespace anchorpath {

struct NetworkConfig {
    double width = 550.0;
    double height = 550.0;
    int total_nodes = 10;  ///< sensors plus the one anchor
    double comm_range = 75.0;
    double beacon_interval = 5.0;
    double speed = 10.0;
    std::uint64_t seed = 0;
    double initial_energy = 100.0;
    double beacon_cost = 0.0;

    void validate() const {
        if (total_nodes < 2) throw InvalidArgument("invalid node count (need at least 2)");
        auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
        if (!positive(width) || !positive(height)) throw InvalidArgument("invalid area size");
        if (!positive(comm_range)) throw InvalidArgument("invalid communication range");
        if (!positive(beacon_interval)) throw InvalidArgument("invalid beacon interval");
        if (!positive(speed)) throw InvalidArgument("invalid speed");
        if (!(initial_energy >= 0.0) || !std::isfinite(initial_energy)) throw InvalidArgument("invalid initial energy");
        if (!(beacon_cost >= 0.0) || !std::isfinite(beacon_cost)) throw InvalidArgument("invalid beacon cost");
    }
};

struct Anchor {
    int id = 0;
    Point2D position;
    double radius = 0.0;
    double initial_energy = 0.0;
    double remaining_energy = 0.0;
};

struct Sensor {
    int id = 0;
    Point2D position;
    bool is_base_station = false;

    friend bool operator==(const Sensor&, const Sensor&) = default;
};

struct Network {
    NetworkConfig config;
    Anchor anchor;
    std::vector<Sensor> sensors;
};

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit Mersenne
/// Twister draw. Both steps are fully specified, so deployments reproduce
/// across standard libraries.
inline double unit_uniform(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

/// Sensors 0..n-2 (first five are base stations at the corners and centre,
/// the rest uniform-random), anchor n-1 at `anchor_start`.
inline Network deploy(const NetworkConfig& cfg, const Point2D& anchor_start = {1.0, 1.0}) {
    cfg.validate();
    const double w = cfg.width, h = cfg.height;
    const Point2D base_sites[] = {{0.0, 0.0}, {0.0, h}, {w, 0.0}, {w, h}, {w / 2.0, h / 2.0}};
    Network net;
    net.config = cfg;
    net.anchor = {cfg.total_nodes - 1, anchor_start, cfg.comm_range, cfg.initial_energy, cfg.initial_energy};
    std::mt19937_64 gen(cfg.seed);
    const int sensors = cfg.total_nodes - 1;
    net.sensors.reserve(static_cast<std::size_t>(sensors));
    for (int id = 0; id < sensors; ++id) {
        if (id < 5) {
            net.sensors.push_back({id, base_sites[id], true});
        } else {
            const double x = unit_uniform(gen) * w;
            const double y = unit_uniform(gen) * h;
            net.sensors.push_back({id, {x, y}, false});
        }
    }
    return net;
}

inline TopologyFile to_topology(const Network& net) {
    TopologyFile t;
    for (const auto& s : net.sensors)
        t.entries.push_back({s.id, s.position, s.is_base_station ? NodeRole::base_station : NodeRole::sensor});
    t.entries.push_back({net.anchor.id, net.anchor.position, NodeRole::anchor});
    return t;
}

inline std::vector<Sensor> sensors_from_topology(const TopologyFile& t) {
    std::vector<Sensor> out;
    for (const auto& e : t.entries)
        if (e.role != NodeRole::anchor) out.push_back({e.node_id, e.position, e.is_base_station()});
    return out;
}

/// Events within `range` of the sensor (boundary inclusive), in input order.
inline std::vector<BeaconEvent> beacons_heard(const Sensor& s, std::span<const BeaconEvent> events, double range) {
    std::vector<BeaconEvent> out;
    for (const auto& e : events)
        if (distance(e.position, s.position) <= range) out.push_back(e);
    return out;
}

/// True iff some triple of the points is non-collinear under `eps`.
inline bool has_non_collinear_triple(std::span<const Point2D> pts, double eps) {
    const std::size_t n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                if (!collinear(pts[i], pts[j], pts[k], eps)) return true;
    return false;
}

struct SensorCoverage {
    int sensor_id = 0;
    Point2D position;
    bool is_base_station = false;
    std::size_t beacons_heard = 0;
    bool localizable = false;
};

struct CoverageReport {
    std::vector<SensorCoverage> per_sensor;  ///< every sensor, base stations included
    std::size_t localizable = 0;             ///< non-base sensors that can localize
    std::size_t eligible = 0;                ///< non-base sensors
    double localizable_fraction = 0.0;
    std::size_t total_beacons = 0;
};

/// Base stations appear in `per_sensor` but are left out of the fraction.
inline CoverageReport coverage_report(std::span<const Sensor> sensors, std::span<const BeaconEvent> events,
                                      double range, double eps = 1e-6) {
    if (!(range > 0.0)) throw InvalidArgument("invalid communication range");
    CoverageReport r;
    r.total_beacons = events.size();
    for (const auto& s : sensors) {
        const auto heard = beacons_heard(s, events, range);
        std::vector<Point2D> pts;
        pts.reserve(heard.size());
        for (const auto& e : heard) pts.push_back(e.position);
        const bool ok = heard.size() >= 3 && has_non_collinear_triple(pts, eps);
        r.per_sensor.push_back({s.id, s.position, s.is_base_station, heard.size(), ok});
        if (!s.is_base_station) {
            ++r.eligible;
            if (ok) ++r.localizable;
        }
    }
    r.localizable_fraction = r.eligible == 0 ? 0.0 : static_cast<double>(r.localizable) / static_cast<double>(r.eligible);
    return r;
}

inline CoverageReport coverage_report(const Network& net, std::span<const BeaconEvent> events, double eps = 1e-6) {
    return coverage_report(net.sensors, events, net.config.comm_range, eps);
}

struct EnergyOutcome {
    Anchor anchor;
    /// Number of beacons sent when the battery reached zero, if that happened
    /// within the schedule.
    std::optional<std::int64_t> depleted_after;
};

/// Linear per-beacon energy drain, floored at zero.
inline EnergyOutcome apply_beacon_energy(Anchor a, std::int64_t beacons_sent, double cost_per_beacon) {
    if (!(cost_per_beacon >= 0.0)) throw InvalidArgument("invalid beacon cost");
    EnergyOutcome out{a, std::nullopt};
    if (cost_per_beacon == 0.0 || beacons_sent <= 0) {
        out.anchor.remaining_energy = a.initial_energy;
        return out;
    }
    auto n = static_cast<std::int64_t>(std::ceil(a.initial_energy / cost_per_beacon));
    while (n > 0 && static_cast<double>(n - 1) * cost_per_beacon >= a.initial_energy) --n;
    while (static_cast<double>(n) * cost_per_beacon < a.initial_energy) ++n;
    if (n <= beacons_sent) {
        out.anchor.remaining_energy = 0.0;
        out.depleted_after = n;
    } else {
        out.anchor.remaining_energy = a.initial_energy - static_cast<double>(beacons_sent) * cost_per_beacon;
    }
    return out;
}

}  // namespace anchorpath
