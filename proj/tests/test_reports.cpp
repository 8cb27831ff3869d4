#include <gtest/gtest.h>

#include <regex>
#include <string>
#include <vector>

#include "anchorpath/reports.hpp"

using namespace anchorpath;

namespace {

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

// Minimal well-formedness check: balanced, properly nested elements and
// quoted attributes. Not a full XML parser.
bool balanced_xml(const std::string& doc) {
    std::vector<std::string> stack;
    std::size_t pos = 0;
    while ((pos = doc.find('<', pos)) != std::string::npos) {
        const auto end = doc.find('>', pos);
        if (end == std::string::npos) return false;
        const std::string tag = doc.substr(pos + 1, end - pos - 1);
        pos = end + 1;
        if (tag.empty()) return false;
        if (tag.front() == '?') continue;
        if (count(tag, "\"") % 2) return false;
        if (tag.front() == '/') {
            if (stack.empty() || stack.back() != tag.substr(1)) return false;
            stack.pop_back();
        } else if (tag.back() != '/') {
            stack.push_back(tag.substr(0, tag.find(' ')));
        }
    }
    return stack.empty();
}

}  // namespace

TEST(StatsCsv, ScanRows) {
    const auto s = compute_stats(generate_scan({.segments = 10, .resolution = 50}), 10.0);
    EXPECT_EQ(export_stats_csv(s),
              "Results,Value\n"
              "Area Size (m2),500 x 500\n"
              "Length of Vertical Segment (m),500\n"
              "Number of Vertical Segments,11\n"
              "Total Trajectory Length (m),6000\n"
              "Simulation Time (Sec),600\n");
}

TEST(StatsCsv, QuotesFieldsWithCommas) {
    const auto s = compute_stats(generate_spiral({.segments = 10, .resolution = 50, .origin = {0, 0}}), 8.0);
    const auto csv = export_stats_csv(s);
    EXPECT_NE(csv.find("\"Anchor Initial Position (x, y)\",\"(275, 275)\"\n"), std::string::npos);
    EXPECT_NE(csv.find("Total Trajectory Length, exact (m)"), std::string::npos);
}

TEST(ChartCsv, Rows) {
    const auto hil = export_chart_csv(generate_hilbert({.resolution = 35, .curve_level = 1}));
    EXPECT_EQ(hil, "x,y\n1.0,1.0\n1.0,36.0\n36.0,36.0\n36.0,1.0\n");
    const Trajectory two{"custom", {}, Polyline{{0, 0}, {3, 4}}};
    EXPECT_EQ(count(export_chart_csv(two), "\n"), 3u);
    EXPECT_EQ(count(export_chart_csv(generate_scan({.segments = 10, .resolution = 50})), "\n"), 23u);
}

TEST(TraceRow, Format) {
    EXPECT_EQ(trace_row({600, 1.0, {501, 501}, true}), "600,501.0,501.0,1.0\n");
    EXPECT_EQ(trace_row({2.5, 0.25, {1, 26}, false}), "2.5,1.0,26.0,0.25\n");
}

TEST(CoverageCsv, HeaderAndSummary) {
    CoverageReport r;
    r.per_sensor.push_back({0, {0, 0}, true, 4, true});
    r.per_sensor.push_back({5, {10.5, 2}, false, 2, false});
    r.eligible = 1;
    EXPECT_EQ(export_coverage_csv(r),
              "sensor_id,x,y,is_base,beacons_heard,localizable\n0,0.0,0.0,1,4,1\n5,10.5,2.0,0,2,0\n");
    EXPECT_EQ(coverage_summary(r), "localizable: 0/1 (0.0%)");
    EXPECT_EQ(coverage_summary(CoverageReport{}), "localizable: 0/0 (0.0%)");
}

TEST(Svg, TwoPointTrajectory) {
    const Trajectory two{"custom", {}, Polyline{{0, 0}, {10, 5}}};
    const auto svg = export_svg(two);
    EXPECT_EQ(count(svg, "<polyline"), 1u);
    const std::regex points(R"re(points="([^"]*)")re");
    std::smatch m;
    ASSERT_TRUE(std::regex_search(svg, m, points));
    EXPECT_EQ(m[1].str(), "0,0 10,-5");
    EXPECT_TRUE(balanced_xml(svg));
}

TEST(Svg, ScanWithNetwork) {
    const auto t = generate_scan({.segments = 10, .resolution = 50});
    NetworkConfig cfg;
    cfg.seed = 42;
    const auto net = deploy(cfg, t.path.front());
    const auto svg = export_svg(t, &net);
    EXPECT_EQ(count(svg, "class=\"base-station\""), 5u);
    EXPECT_EQ(count(svg, "class=\"sensor\""), 4u);
    EXPECT_EQ(count(svg, "class=\"anchor-start\""), 1u);
    // Union of path and sensors is [0,550]^2; 5% margin is 27.5.
    EXPECT_NE(svg.find("viewBox=\"-27.5 -577.5 605 605\""), std::string::npos);
    EXPECT_TRUE(balanced_xml(svg));
}
