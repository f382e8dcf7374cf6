#include "flatsurf/flow.hpp"

#include <cmath>
#include <limits>

namespace flatsurf {

namespace {

struct Exit {
    int edge = -1;
    double t = 0.0;
    Vec2 point;
    bool near_vertex = false;
};

// First edge of the (convex) polygon crossed by the ray pos + t*dir, t > 0.
Exit find_exit(const Polygon& p, Vec2 pos, Vec2 dir, int skip_edge) {
    Exit best;
    best.t = std::numeric_limits<double>::infinity();
    for (int e = 0; e < p.edge_count(); ++e) {
        if (e == skip_edge) continue;
        Vec2 a = p.edge_start(e);
        Vec2 ab = p.edge_vector(e);
        double denom = cross(dir, ab);
        if (std::abs(denom) < 1e-15) continue;  // parallel to the edge
        double t = cross(a - pos, ab) / denom;
        double u = cross(a - pos, dir) / denom;
        if (t <= 1e-12) continue;
        if (u < -1e-12 || u > 1.0 + 1e-12) continue;
        if (t < best.t) {
            best.t = t;
            best.edge = e;
            best.point = pos + dir * t;
            double len = norm(ab);
            best.near_vertex = std::min(u, 1.0 - u) * len < kVertexEps;
        }
    }
    return best;
}

}  // namespace

FlowResult flow(const Surface& s, const Trajectory& traj, int n) {
    if (n < 1) throw InvalidParams("flow: need at least one crossing");
    FlowResult result;
    Vec2 dir = unit_dir(traj.theta);
    int poly = traj.start.poly;
    Vec2 pos = traj.start.pos;
    int entry_edge = -1;
    double total = 0.0;

    for (int k = 0; k < n; ++k) {
        Exit exit = find_exit(s.polygons[poly], pos, dir, entry_edge);
        if (exit.edge < 0 || exit.near_vertex) {
            result.vertex_hit = true;
            result.hit_step = k;
            return result;
        }
        total += exit.t;
        EdgeRef out{poly, exit.edge};
        result.seq.labels.push_back(s.label(out));
        result.seq.crossings.push_back({s.label(out), out, exit.point, total});

        EdgeRef in = s.partner(out);
        pos = exit.point + s.gluing_translation(out);
        poly = in.poly;
        entry_edge = in.edge;
    }
    return result;
}

SurfacePoint flow_entry_point(const Surface& s, const Crossing& c) {
    EdgeRef in = s.partner(c.exit_edge);
    return {in.poly, c.point + s.gluing_translation(c.exit_edge)};
}

}  // namespace flatsurf
