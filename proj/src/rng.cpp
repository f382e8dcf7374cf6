#include "flatsurf/rng.hpp"

namespace flatsurf {

SurfacePoint Rng::surface_point(const Surface& s, double min_boundary_dist) {
    double total = s.total_area();
    for (int attempt = 0; attempt < 100000; ++attempt) {
        double pick = uniform(0.0, total);
        int poly = 0;
        for (; poly + 1 < static_cast<int>(s.polygons.size()); ++poly) {
            pick -= s.polygons[poly].area();
            if (pick <= 0.0) break;
        }
        const Polygon& p = s.polygons[poly];
        Vec2 q{uniform(p.min_x(), p.max_x()), uniform(p.min_y(), p.max_y())};
        if (!p.contains(q, 0.0)) continue;
        if (p.boundary_distance(q) <= min_boundary_dist) continue;
        return {poly, q};
    }
    throw Error("surface_point: rejection sampling failed");
}

}  // namespace flatsurf
