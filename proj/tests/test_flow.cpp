#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "flatsurf/cylinders.hpp"
#include "flatsurf/flow.hpp"
#include "flatsurf/rng.hpp"
#include "support/unfold_oracle.hpp"

using namespace flatsurf;

namespace {

Surface square_torus() {
    Polygon sq;
    sq.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    sq.dir_index = {-1, -1, -1, -1};
    sq.edge_labels = {-1, -1, -1, -1};
    return make_surface({sq}, {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}});
}

}  // namespace

TEST_CASE("horizontal flow on the torus crosses only the vertical label") {
    Surface s = square_torus();
    int vertical = s.polygons[0].edge_labels[1];  // right edge
    FlowResult r = flow(s, {{0, {0.5, 0.37}}, 0.0}, 25);
    REQUIRE(r.ok());
    REQUIRE(r.seq.window_len() == 25);
    for (int l : r.seq.labels) CHECK(l == vertical);
}

TEST_CASE("aiming at a vertex stops the flow") {
    Surface s = build_regular_surface(8, false);
    const Polygon& p = s.polygons[0];
    Vec2 start{p.axis_x(), 0.3};
    Vec2 target = p.vertices[2];
    double theta = angle_of(target - start);
    FlowResult r = flow(s, {{0, start}, theta}, 10);
    CHECK(r.vertex_hit);
}

TEST_CASE("transport consistency: entry points land on the partner edge") {
    Surface s = build_bouw_moller(4, 3);
    Rng rng(3);
    double ts = theta_s(s);
    for (int trial = 0; trial < 40; ++trial) {
        Trajectory t{rng.surface_point(s), rng.uniform(1e-3, ts - 1e-3)};
        FlowResult r = flow(s, t, 30);
        if (!r.ok()) continue;
        for (const auto& c : r.seq.crossings) {
            // exit point on its edge
            const Polygon& pe = s.polygons[c.exit_edge.poly];
            CHECK(point_segment_distance(c.point, pe.edge_start(c.exit_edge.edge),
                                         pe.edge_end(c.exit_edge.edge)) < 1e-9);
            // transported point on the partner edge
            EdgeRef in = s.partner(c.exit_edge);
            const Polygon& pi = s.polygons[in.poly];
            Vec2 q = c.point + s.gluing_translation(c.exit_edge);
            CHECK(point_segment_distance(q, pi.edge_start(in.edge), pi.edge_end(in.edge)) <
                  1e-9);
        }
    }
}

TEST_CASE("admissible trajectories enter left and exit right") {
    Surface s = build_bouw_moller(3, 4);
    Rng rng(9);
    double ts = theta_s(s);
    for (int trial = 0; trial < 40; ++trial) {
        Trajectory t{rng.surface_point(s), rng.uniform(1e-3, ts - 1e-3)};
        FlowResult r = flow(s, t, 40);
        if (!r.ok()) continue;
        for (const auto& c : r.seq.crossings) {
            EdgeSide out = s.bands[c.exit_edge.poly].edge_side[c.exit_edge.edge];
            CHECK((out == EdgeSide::Right || out == EdgeSide::Top));
            EdgeRef in = s.partner(c.exit_edge);
            EdgeSide in_side = s.bands[in.poly].edge_side[in.edge];
            CHECK((in_side == EdgeSide::Left || in_side == EdgeSide::Bottom));
        }
    }
}

TEST_CASE("reversal retraces the labels backwards") {
    Surface s = build_regular_surface(5, true);
    Rng rng(21);
    double ts = theta_s(s);
    for (int trial = 0; trial < 20; ++trial) {
        Trajectory t{rng.surface_point(s), rng.uniform(1e-3, ts - 1e-3)};
        int n = 30;
        FlowResult fwd = flow(s, t, n);
        if (!fwd.ok()) continue;
        // start just past the last crossing, in the polygon the flow entered
        SurfacePoint entry = flow_entry_point(s, fwd.seq.crossings.back());
        Vec2 dir = unit_dir(t.theta);
        double step = 1e-6;
        SurfacePoint mid{entry.poly, entry.pos + dir * step};
        FlowResult back = flow(s, {mid, t.theta + kPi}, n);
        REQUIRE(back.ok());
        std::vector<int> expect(fwd.seq.labels.rbegin(), fwd.seq.labels.rend());
        CHECK(back.seq.labels == expect);
    }
}

TEST_CASE("flow progresses without spinning in place") {
    Surface s = build_bouw_moller(6, 5);
    Rng rng(2);
    double ts = theta_s(s);
    Trajectory t{rng.surface_point(s), ts / 2.0};
    FlowResult r = flow(s, t, 60);
    REQUIRE(r.ok());
    for (size_t i = 1; i < r.seq.crossings.size(); ++i)
        CHECK(r.seq.crossings[i].param > r.seq.crossings[i - 1].param);
}

TEST_CASE("flow agrees with the planar unfolding oracle") {
    Surface s = build_regular_surface(5, true);
    SUBCASE("the pinned example: theta = pi/20, 50 crossings") {
        Rng rng(40);
        for (int trial = 0; trial < 10; ++trial) {
            SurfacePoint start = rng.surface_point(s);
            FlowResult r = flow(s, {start, kPi / 20}, 50);
            testing::UnfoldResult u = testing::unfold_trace(s, start, kPi / 20, 50);
            if (!r.ok() || u.vertex_hit) continue;
            CHECK(r.seq.labels == u.labels);
        }
    }
    SUBCASE("random angles across families") {
        for (Surface surf : {build_regular_surface(8, false), build_bouw_moller(3, 4)}) {
            Rng rng(41);
            double ts = theta_s(surf);
            for (int trial = 0; trial < 15; ++trial) {
                SurfacePoint start = rng.surface_point(surf);
                double theta = rng.uniform(1e-3, ts - 1e-3);
                FlowResult r = flow(surf, {start, theta}, 40);
                testing::UnfoldResult u = testing::unfold_trace(surf, start, theta, 40);
                if (!r.ok() || u.vertex_hit) continue;
                CHECK(r.seq.labels == u.labels);
            }
        }
    }
}
