#include "flatsurf/cylinders.hpp"

#include <algorithm>
#include <map>

namespace flatsurf {

namespace {

Trapezoid band_trapezoid(const Surface& s, int poly, int band) {
    const Polygon& p = s.polygons[poly];
    const PolygonBands& b = s.bands[poly];
    Trapezoid t;
    t.poly = poly;
    t.band = band;
    t.left_edge = b.band_left_edge[band];
    t.right_edge = b.band_right_edge[band];
    // Left edges descend in the counterclockwise traversal, right edges climb.
    t.tl = p.edge_start(t.left_edge);
    t.bl = p.edge_end(t.left_edge);
    t.br = p.edge_start(t.right_edge);
    t.tr = p.edge_end(t.right_edge);
    return t;
}

}  // namespace

std::vector<Cylinder> decompose(const Surface& s) {
    double eps = geom_epsilon();
    std::vector<Cylinder> cylinders;
    std::map<std::pair<int, int>, bool> used;

    for (int poly = 0; poly < static_cast<int>(s.polygons.size()); ++poly) {
        for (int band = 0; band < s.bands[poly].band_count(); ++band) {
            if (used[{poly, band}]) continue;

            Cylinder cyl;
            int cp = poly, cb = band;
            // Chain bands rightward through the gluings of their right edges
            // until the walk closes up.
            while (true) {
                used[{cp, cb}] = true;
                Trapezoid t = band_trapezoid(s, cp, cb);
                cyl.trapezoids.push_back(t);
                EdgeRef exit{cp, t.right_edge};
                EdgeRef enter = s.partner(exit);
                const PolygonBands& nb = s.bands[enter.poly];
                if (nb.edge_band[enter.edge] < 0 ||
                    nb.edge_side[enter.edge] != EdgeSide::Left)
                    throw NotLevel("cylinder chain crossed into a non-left edge");
                cp = enter.poly;
                cb = nb.edge_band[enter.edge];
                if (cp == poly && cb == band) break;
            }

            cyl.height = cyl.trapezoids.front().height();
            for (const auto& t : cyl.trapezoids) {
                if (!almost_equal(t.height(), cyl.height, eps))
                    throw NotLevel("band heights disagree within a cylinder");
                cyl.width += t.bottom_width();
            }
            double top = 0.0;
            for (const auto& t : cyl.trapezoids) top += t.top_width();
            if (!almost_equal(top, cyl.width, eps))
                throw NotLevel("cylinder circumference differs between top and bottom");
            cyl.modulus = cyl.width / cyl.height;
            cyl.kind = cyl.trapezoids.size() == 1 ? CylinderKind::Exceptional
                                                  : CylinderKind::Typical;
            for (const auto& t : cyl.trapezoids) {
                int label = s.polygons[t.poly].edge_labels[t.right_edge];
                if (std::find(cyl.gluing_labels.begin(), cyl.gluing_labels.end(), label) ==
                    cyl.gluing_labels.end())
                    cyl.gluing_labels.push_back(label);
            }
            std::sort(cyl.gluing_labels.begin(), cyl.gluing_labels.end());
            cylinders.push_back(std::move(cyl));
        }
    }
    return cylinders;
}

PerfectnessReport perfectness(const Surface& s) { return perfectness(s, decompose(s)); }

PerfectnessReport perfectness(const Surface& s, const std::vector<Cylinder>& cyls) {
    (void)s;
    double eps = geom_epsilon();
    PerfectnessReport r;
    for (const auto& c : cyls) r.cylinders.push_back({c.modulus, c.kind});
    if (cyls.empty()) return r;

    double m = 0.0;
    for (const auto& c : cyls) {
        double candidate = c.kind == CylinderKind::Typical ? c.modulus : 2.0 * c.modulus;
        if (m == 0.0) m = candidate;
    }
    r.common_modulus = m;
    r.is_perfect = true;
    for (const auto& c : cyls) {
        double expected = c.kind == CylinderKind::Typical ? m : m / 2.0;
        if (!almost_equal(c.modulus, expected, eps)) r.is_perfect = false;
        if (c.kind == CylinderKind::Typical && c.trapezoids.size() != 2) r.is_perfect = false;
    }
    return r;
}

double theta_s(const Surface& s) { return theta_s(s, decompose(s)); }

double theta_s(const Surface& s, const std::vector<Cylinder>& cyls) {
    (void)s;
    double best = kPi / 2.0;
    for (const auto& c : cyls)
        for (const auto& t : c.trapezoids) best = std::min(best, t.slant_angle());
    return best;
}

}  // namespace flatsurf
