#include <gtest/gtest.h>

#include <random>

#include "anchorpath/wsn.hpp"
#include "oracles.hpp"

using namespace anchorpath;

TEST(Deploy, ReferenceComposition) {
    NetworkConfig cfg;
    cfg.total_nodes = 10;
    cfg.seed = 42;
    const auto net = deploy(cfg, {1, 1});
    ASSERT_EQ(net.sensors.size(), 9u);
    EXPECT_EQ(net.anchor.id, 9);
    EXPECT_EQ(net.anchor.position, (Point2D{1, 1}));
    const Point2D corners[] = {{0, 0}, {0, 550}, {550, 0}, {550, 550}, {275, 275}};
    for (int i = 0; i < 5; ++i) {
        EXPECT_TRUE(net.sensors[i].is_base_station);
        EXPECT_EQ(net.sensors[i].position, corners[i]);
    }
    for (int i = 5; i < 9; ++i) {
        EXPECT_FALSE(net.sensors[i].is_base_station);
        EXPECT_EQ(net.sensors[i].id, i);
        EXPECT_TRUE((Rect{{0, 0}, {550, 550}}.contains(net.sensors[i].position)));
    }
}

TEST(Deploy, GeneratorIsPinned) {
    // mt19937_64 seeded with 42; top 53 bits of each draw scaled to [0,1).
    std::mt19937_64 gen(42);
    const double x = static_cast<double>(gen() >> 11) / 9007199254740992.0 * 550.0;
    const double y = static_cast<double>(gen() >> 11) / 9007199254740992.0 * 550.0;
    NetworkConfig cfg;
    cfg.seed = 42;
    EXPECT_EQ(deploy(cfg).sensors[5].position, (Point2D{x, y}));
}

TEST(Deploy, OnlyBaseStationsAndDeterminism) {
    NetworkConfig cfg;
    cfg.total_nodes = 6;
    const auto net = deploy(cfg);
    EXPECT_EQ(net.sensors.size(), 5u);
    for (const auto& s : net.sensors) EXPECT_TRUE(s.is_base_station);

    cfg.total_nodes = 40;
    cfg.seed = 9;
    EXPECT_EQ(deploy(cfg).sensors, deploy(cfg).sensors);
    cfg.seed = 10;
    EXPECT_NE(deploy(cfg).sensors, deploy({.total_nodes = 40, .seed = 9}).sensors);

    cfg.total_nodes = 1;
    EXPECT_THROW(deploy(cfg), InvalidArgument);
}

TEST(BeaconsHeard, Examples) {
    const Sensor s{0, {0, 0}, false};
    const std::vector<BeaconEvent> events{{0, {0, 50}, 0}, {5, {0, 200}, 1}};
    const auto heard = beacons_heard(s, events, 100);
    ASSERT_EQ(heard.size(), 1u);
    EXPECT_EQ(heard[0].seq, 0);

    const std::vector<BeaconEvent> on_top{{0, {0, 0}, 0}};
    EXPECT_EQ(beacons_heard(s, on_top, 0.0001).size(), 1u);
    EXPECT_TRUE(beacons_heard(s, {}, 10).empty());
}

TEST(BeaconsHeard, MonotoneSublist) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0, 200);
    std::vector<BeaconEvent> events;
    for (int i = 0; i < 100; ++i) events.push_back({static_cast<double>(i), {u(rng), u(rng)}, i});
    const Sensor s{0, {100, 100}, false};
    std::size_t prev = 0;
    for (double r = 5; r <= 200; r += 5) {
        const auto heard = beacons_heard(s, events, r);
        EXPECT_GE(heard.size(), prev);
        prev = heard.size();
        for (std::size_t i = 1; i < heard.size(); ++i) EXPECT_LT(heard[i - 1].seq, heard[i].seq);
    }
}

TEST(Coverage, CollinearityDecidesLocalizability) {
    const std::vector<Sensor> sensors{{0, {5, 5}, false}};
    const std::vector<BeaconEvent> line{{0, {0, 0}, 0}, {1, {10, 0}, 1}, {2, {20, 0}, 2}};
    EXPECT_FALSE(coverage_report(sensors, line, 100).per_sensor[0].localizable);
    const std::vector<BeaconEvent> corner{{0, {0, 0}, 0}, {1, {10, 0}, 1}, {2, {10, 10}, 2}};
    const auto r = coverage_report(sensors, corner, 100);
    EXPECT_TRUE(r.per_sensor[0].localizable);
    EXPECT_EQ(r.localizable_fraction, 1.0);
}

TEST(Coverage, BaseStationsExcludedFromFraction) {
    const std::vector<Sensor> sensors{{0, {5, 5}, true}, {1, {5, 5}, false}, {2, {1000, 1000}, false}};
    const std::vector<BeaconEvent> corner{{0, {0, 0}, 0}, {1, {10, 0}, 1}, {2, {10, 10}, 2}};
    const auto r = coverage_report(sensors, corner, 100);
    EXPECT_EQ(r.per_sensor.size(), 3u);
    EXPECT_EQ(r.eligible, 2u);
    EXPECT_EQ(r.localizable, 1u);
    EXPECT_EQ(r.localizable_fraction, 0.5);
    EXPECT_EQ(r.total_beacons, 3u);
}

TEST(Coverage, ScanMatchesBruteForce) {
    const auto t = generate_scan({.segments = 10, .resolution = 50});
    const auto events = beacon_schedule(build_timed_path(t, 10.0), 5.0);
    NetworkConfig cfg;
    cfg.seed = 42;
    cfg.comm_range = 75;
    const auto net = deploy(cfg, t.path.front());
    const auto report = coverage_report(net, events);

    std::vector<oracle::XY> beacons;
    for (const auto& e : events) beacons.push_back({e.position.x, e.position.y});
    ASSERT_EQ(report.per_sensor.size(), net.sensors.size());
    for (std::size_t i = 0; i < net.sensors.size(); ++i) {
        const auto truth = oracle::brute_force_sensor({net.sensors[i].position.x, net.sensors[i].position.y},
                                                      beacons, 75, 1e-6);
        EXPECT_EQ(report.per_sensor[i].beacons_heard, truth.heard);
        EXPECT_EQ(report.per_sensor[i].localizable, truth.localizable);
    }
}

TEST(Coverage, FractionMonotoneInRangeAndInterval) {
    const auto t = generate_scan({.segments = 6, .resolution = 60});
    const auto tp = build_timed_path(t, 10.0);
    NetworkConfig cfg;
    cfg.total_nodes = 30;
    cfg.seed = 3;
    cfg.width = cfg.height = 400;
    const auto net = deploy(cfg, t.path.front());
    // Nested beacon schedules: each interval divides the next one.
    double prev_frac = 2.0;
    for (double interval : {2.5, 5.0, 10.0, 20.0, 40.0}) {
        const auto events = beacon_schedule(tp, interval);
        double prev_range_frac = -1.0;
        for (double range : {20.0, 40.0, 60.0, 90.0}) {
            const auto r = coverage_report(net.sensors, events, range);
            EXPECT_GE(r.localizable_fraction, prev_range_frac);
            prev_range_frac = r.localizable_fraction;
        }
        const auto r60 = coverage_report(net.sensors, events, 60.0);
        EXPECT_LE(r60.localizable_fraction, prev_frac);
        prev_frac = r60.localizable_fraction;
    }
}

TEST(Energy, LinearDrain) {
    Anchor a{9, {1, 1}, 75, 100, 100};
    EXPECT_DOUBLE_EQ(apply_beacon_energy(a, 121, 0.5).anchor.remaining_energy, 39.5);
    EXPECT_FALSE(apply_beacon_energy(a, 121, 0.5).depleted_after);
    EXPECT_EQ(apply_beacon_energy(a, 121, 0.0).anchor.remaining_energy, 100.0);

    Anchor tiny{9, {1, 1}, 75, 1, 1};
    const auto out = apply_beacon_energy(tiny, 121, 0.5);
    EXPECT_EQ(out.anchor.remaining_energy, 0.0);
    ASSERT_TRUE(out.depleted_after);
    EXPECT_EQ(*out.depleted_after, 2);

    for (std::int64_t n = 0; n < 300; ++n) {
        const auto o = apply_beacon_energy(a, n, 0.37);
        EXPECT_GE(o.anchor.remaining_energy, 0.0);
        if (!o.depleted_after) {
            EXPECT_DOUBLE_EQ(o.anchor.remaining_energy, 100.0 - 0.37 * static_cast<double>(n));
        }
    }
}
