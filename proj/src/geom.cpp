#include "flatsurf/geom.hpp"

#include <algorithm>

namespace flatsurf {

namespace {

double initial_epsilon() {
    if (const char* env = std::getenv("FLATSURF_EPS")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0.0) return v;
    }
    return 1e-9;
}

double g_epsilon = initial_epsilon();

}  // namespace

double geom_epsilon() { return g_epsilon; }

void set_geom_epsilon(double eps) {
    if (!(eps > 0.0)) throw InvalidParams("epsilon must be positive");
    g_epsilon = eps;
}

bool segments_intersect(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1) {
    auto orient = [](Vec2 p, Vec2 q, Vec2 r) { return cross(q - p, r - p); };
    double d1 = orient(b0, b1, a0);
    double d2 = orient(b0, b1, a1);
    double d3 = orient(a0, a1, b0);
    double d4 = orient(a0, a1, b1);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
        return true;
    double eps = geom_epsilon();
    auto on_segment = [eps](Vec2 p, Vec2 a, Vec2 b) {
        return point_segment_distance(p, a, b) <= eps;
    };
    if (std::abs(d1) <= eps && on_segment(a0, b0, b1)) return true;
    if (std::abs(d2) <= eps && on_segment(a1, b0, b1)) return true;
    if (std::abs(d3) <= eps && on_segment(b0, a0, a1)) return true;
    if (std::abs(d4) <= eps && on_segment(b1, a0, a1)) return true;
    return false;
}

}  // namespace flatsurf
