#include "flatsurf/polygon.hpp"

#include <algorithm>
#include <limits>

namespace flatsurf {

double Polygon::area() const {
    double s = 0.0;
    for (int e = 0; e < edge_count(); ++e) s += cross(edge_start(e), edge_end(e));
    return 0.5 * s;
}

double Polygon::min_x() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& v : vertices) m = std::min(m, v.x);
    return m;
}

double Polygon::max_x() const {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& v : vertices) m = std::max(m, v.x);
    return m;
}

double Polygon::min_y() const {
    double m = std::numeric_limits<double>::infinity();
    for (const auto& v : vertices) m = std::min(m, v.y);
    return m;
}

double Polygon::max_y() const {
    double m = -std::numeric_limits<double>::infinity();
    for (const auto& v : vertices) m = std::max(m, v.y);
    return m;
}

int Polygon::reflected_edge(int e) const {
    double eps = geom_epsilon();
    Vec2 a = reflect(edge_start(e));
    Vec2 b = reflect(edge_end(e));
    for (int f = 0; f < edge_count(); ++f) {
        Vec2 c = edge_start(f);
        Vec2 d = edge_end(f);
        if ((almost_equal(a, c, eps) && almost_equal(b, d, eps)) ||
            (almost_equal(a, d, eps) && almost_equal(b, c, eps)))
            return f;
    }
    return -1;
}

void Polygon::translate(Vec2 t) {
    for (auto& v : vertices) v += t;
}

bool Polygon::contains(Vec2 p, double slack) const {
    for (int e = 0; e < edge_count(); ++e) {
        if (cross(edge_vector(e), p - edge_start(e)) < -slack) return false;
    }
    return true;
}

double Polygon::boundary_distance(Vec2 p) const {
    double d = std::numeric_limits<double>::infinity();
    for (int e = 0; e < edge_count(); ++e)
        d = std::min(d, point_segment_distance(p, edge_start(e), edge_end(e)));
    return d;
}

int PolygonBands::level_index(double y) const {
    double eps = geom_epsilon();
    for (int i = 0; i < static_cast<int>(levels.size()); ++i)
        if (std::abs(levels[i] - y) <= eps) return i;
    return -1;
}

int PolygonBands::edge_level_key(int e) const {
    if (e == bottom_edge) return 0;
    if (e == top_edge) return 2 * band_count();
    return 2 * edge_band[e] + 1;
}

int PolygonBands::edge_entry_level(int e) const {
    if (e == bottom_edge) return -1;
    return edge_band[e];
}

int PolygonBands::edge_exit_level(int e) const {
    if (e == top_edge) return band_count();
    return edge_band[e];
}

PolygonBands analyze_bands(const Polygon& poly) {
    double eps = geom_epsilon();
    PolygonBands b;
    for (const auto& v : poly.vertices) b.levels.push_back(v.y);
    std::sort(b.levels.begin(), b.levels.end());
    b.levels.erase(std::unique(b.levels.begin(), b.levels.end(),
                               [eps](double x, double y) { return std::abs(x - y) <= eps; }),
                   b.levels.end());

    int n = poly.edge_count();
    b.edge_band.assign(n, -1);
    b.edge_side.assign(n, EdgeSide::Left);
    b.band_left_edge.assign(b.band_count(), -1);
    b.band_right_edge.assign(b.band_count(), -1);

    for (int e = 0; e < n; ++e) {
        Vec2 v = poly.edge_vector(e);
        if (std::abs(v.y) <= eps) {
            int lvl = b.level_index(poly.edge_start(e).y);
            if (lvl == 0) {
                b.edge_side[e] = EdgeSide::Bottom;
                b.bottom_edge = e;
            } else if (lvl == static_cast<int>(b.levels.size()) - 1) {
                b.edge_side[e] = EdgeSide::Top;
                b.top_edge = e;
            } else {
                throw NotLevel("horizontal edge at an interior level");
            }
            continue;
        }
        double ylo = std::min(poly.edge_start(e).y, poly.edge_end(e).y);
        double yhi = std::max(poly.edge_start(e).y, poly.edge_end(e).y);
        int lo = b.level_index(ylo);
        int hi = b.level_index(yhi);
        if (lo < 0 || hi != lo + 1)
            throw NotLevel("edge spans more than one level band");
        b.edge_band[e] = lo;
        if (v.y > 0) {
            b.edge_side[e] = EdgeSide::Right;
            b.band_right_edge[lo] = e;
        } else {
            b.edge_side[e] = EdgeSide::Left;
            b.band_left_edge[lo] = e;
        }
    }
    for (int band = 0; band < b.band_count(); ++band) {
        if (b.band_left_edge[band] < 0 || b.band_right_edge[band] < 0)
            throw NotLevel("band without a left or right edge");
    }
    return b;
}

Polygon semi_regular_polygon(int n, double a, double b) {
    if (n < 3) throw InvalidParams("semi_regular_polygon: n must be >= 3");
    if (a < 0.0 || b < 0.0) throw InvalidParams("semi_regular_polygon: negative edge length");
    if (a == 0.0 && b == 0.0)
        throw InvalidParams("semi_regular_polygon: at least one of a, b must be nonzero");

    Polygon poly;
    Vec2 pos{0.0, 0.0};
    for (int i = 0; i < 2 * n; ++i) {
        double len = (i % 2 == 0) ? a : b;
        if (len == 0.0) continue;
        poly.vertices.push_back(pos);
        poly.dir_index.push_back(i);
        double ang = static_cast<double>(i) * kPi / n;
        pos += len * Vec2{std::cos(ang), std::sin(ang)};
    }
    poly.edge_labels.assign(poly.vertices.size(), -1);
    anchor_at_origin(poly);
    return poly;
}

void anchor_at_origin(Polygon& poly) {
    double eps = geom_epsilon();
    double ymin = poly.min_y();
    Vec2 anchor{std::numeric_limits<double>::infinity(), ymin};
    bool horizontal = false;
    for (int e = 0; e < poly.edge_count(); ++e) {
        Vec2 v = poly.edge_vector(e);
        if (std::abs(v.y) <= eps && std::abs(poly.edge_start(e).y - ymin) <= eps) {
            anchor = (v.x > 0) ? poly.edge_start(e) : poly.edge_end(e);
            horizontal = true;
            break;
        }
    }
    if (!horizontal) {
        for (const auto& v : poly.vertices)
            if (std::abs(v.y - ymin) <= eps && v.x < anchor.x) anchor = v;
    }
    poly.translate(-anchor);
}

Polygon regular_ngon(int n) {
    if (n < 3) throw InvalidParams("regular_ngon: n must be >= 3");
    Polygon poly;
    Vec2 pos{0.0, 0.0};
    for (int j = 0; j < n; ++j) {
        poly.vertices.push_back(pos);
        poly.dir_index.push_back(2 * j);
        double ang = 2.0 * kPi * j / n;
        pos += Vec2{std::cos(ang), std::sin(ang)};
    }
    poly.edge_labels.assign(n, -1);
    return poly;
}

Polygon regular_ngon_rotated(int n) {
    if (n < 3) throw InvalidParams("regular_ngon_rotated: n must be >= 3");
    Polygon poly;
    Vec2 pos{0.0, 0.0};
    for (int i = n % 2; i < 2 * n; i += 2) {
        poly.vertices.push_back(pos);
        poly.dir_index.push_back(i);
        double ang = static_cast<double>(i) * kPi / n;
        pos += Vec2{std::cos(ang), std::sin(ang)};
    }
    poly.edge_labels.assign(n, -1);
    anchor_at_origin(poly);
    return poly;
}

}  // namespace flatsurf
