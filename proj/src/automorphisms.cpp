#include "flatsurf/automorphisms.hpp"

#include <algorithm>
#include <cmath>

namespace flatsurf {

double CylinderChart::left_x(int piece, double v) const {
    const Piece& p = pieces[piece];
    double t = v / height;
    return p.left_bottom.x + t * (p.left_top.x - p.left_bottom.x);
}

int CylinderChart::locate(double& u, double v) const {
    double base = left_x(0, v);
    u = base + positive_mod(u - base, width);
    for (int i = 0; i + 1 < static_cast<int>(pieces.size()); ++i) {
        if (u < left_x(i + 1, v)) return i;
    }
    return static_cast<int>(pieces.size()) - 1;
}

AffineMaps::AffineMaps(const Surface& s) : s_(&s), cyls_(decompose(s)) {
    PerfectnessReport perf = perfectness(s, cyls_);
    if (!perf.is_perfect)
        throw NotPerfect("surface has no common modulus; shear undefined");
    modulus_ = perf.common_modulus;

    band_to_chart_.resize(s.polygons.size());
    for (size_t p = 0; p < s.polygons.size(); ++p)
        band_to_chart_[p].assign(s.bands[p].band_count(), {-1, -1});

    double eps = geom_epsilon();
    for (int ci = 0; ci < static_cast<int>(cyls_.size()); ++ci) {
        const Cylinder& cyl = cyls_[ci];
        CylinderChart chart;
        chart.width = cyl.width;
        chart.height = cyl.height;

        Vec2 offset = cyl.trapezoids.front().bl;
        for (int i = 0; i < static_cast<int>(cyl.trapezoids.size()); ++i) {
            const Trapezoid& t = cyl.trapezoids[i];
            CylinderChart::Piece piece;
            piece.poly = t.poly;
            piece.band = t.band;
            piece.offset = offset;
            piece.left_bottom = t.bl - offset;
            piece.left_top = t.tl - offset;
            piece.left_label = s.polygons[t.poly].edge_labels[t.left_edge];
            chart.pieces.push_back(piece);
            band_to_chart_[t.poly][t.band] = {ci, i};

            offset += s.gluing_translation(EdgeRef{t.poly, t.right_edge});
        }
        // Walking once around the cylinder must come back one period to the
        // left: the accumulated gluing translations sum to (-W, 0).
        Vec2 around = offset - cyl.trapezoids.front().bl;
        if (!almost_equal(around, Vec2{-chart.width, 0.0}, eps * 10))
            throw NotLevel("cylinder chart does not close up");
        charts_.push_back(std::move(chart));
    }
}

int AffineMaps::cylinder_of_band(int poly, int band) const {
    return band_to_chart_[poly][band].first;
}

SurfacePoint AffineMaps::canonicalize(SurfacePoint p) const {
    double eps = geom_epsilon();
    const PolygonBands& b = s_->bands[p.poly];
    double top = b.levels.back();
    if (p.pos.y >= top - eps) {
        // On the polygon's top boundary: the point belongs to the cylinder
        // above, i.e. to the bottom edge of the glued polygon.
        if (b.top_edge < 0)
            throw InvalidPoint("point at a cone point of the decomposition");
        EdgeRef e{p.poly, b.top_edge};
        Vec2 q = p.pos + s_->gluing_translation(e);
        return {s_->partner(e).poly, q};
    }
    return p;
}

AffineMaps::ChartPoint AffineMaps::to_chart(SurfacePoint sp) const {
    sp = canonicalize(sp);
    double eps = geom_epsilon();
    const PolygonBands& b = s_->bands[sp.poly];
    int band = -1;
    for (int i = b.band_count() - 1; i >= 0; --i) {
        if (sp.pos.y >= b.levels[i] - eps) {
            band = i;
            break;
        }
    }
    if (band < 0) throw InvalidPoint("point below its polygon");
    auto [cyl, piece] = band_to_chart_[sp.poly][band];
    const CylinderChart& chart = charts_[cyl];
    Vec2 c = sp.pos - chart.pieces[piece].offset;
    return {cyl, piece, c.x, c.y};
}

SurfacePoint AffineMaps::from_chart(int cylinder, double u, double v) const {
    const CylinderChart& chart = charts_[cylinder];
    int piece = chart.locate(u, v);
    return {chart.pieces[piece].poly, chart.pieces[piece].offset + Vec2{u, v}};
}

SurfacePoint AffineMaps::flip(SurfacePoint p) const {
    return {p.poly, s_->polygons[p.poly].reflect(p.pos)};
}

SurfacePoint AffineMaps::shear(SurfacePoint p) const {
    ChartPoint c = to_chart(p);
    double u = c.u + modulus_ * c.v;
    return from_chart(c.cylinder, u, c.v);
}

AffineMaps::ShearedEdge AffineMaps::sheared_edge(int label) const {
    // Find the arc's occurrence as a piece boundary, reflect it (R maps each
    // cylinder to itself), then shear in the chart.
    const auto& occ = s_->label_edges[label - 1];
    EdgeRef e = occ[0];
    if (s_->bands[e.poly].edge_side[e.edge] != EdgeSide::Left) e = occ[1];
    if (s_->bands[e.poly].edge_side[e.edge] != EdgeSide::Left)
        throw InvalidParams("sheared_edge: label is not a gluing edge");

    int refl = s_->polygons[e.poly].reflected_edge(e.edge);
    int rlabel = s_->polygons[e.poly].edge_labels[refl];

    int band = s_->bands[e.poly].edge_band[e.edge];
    int cyl = band_to_chart_[e.poly][band].first;
    const CylinderChart& chart = charts_[cyl];
    for (int i = 0; i < static_cast<int>(chart.pieces.size()); ++i) {
        if (chart.pieces[i].left_label == rlabel) {
            ShearedEdge out;
            out.cylinder = cyl;
            out.chart_start = chart.pieces[i].left_bottom;
            out.chart_end = chart.pieces[i].left_top + Vec2{modulus_ * chart.height, 0.0};
            return out;
        }
    }
    throw InvalidParams("sheared_edge: reflected edge not on the same cylinder");
}

std::vector<std::vector<Vec2>> AffineMaps::sheared_edge_polyline(int label) const {
    ShearedEdge seg = sheared_edge(label);
    const int samples = 256;
    std::vector<std::vector<Vec2>> runs;
    std::vector<Vec2> run;
    int prev_poly = -1;
    Vec2 prev;
    for (int i = 0; i <= samples; ++i) {
        double t = static_cast<double>(i) / samples;
        Vec2 c = seg.chart_start + t * (seg.chart_end - seg.chart_start);
        SurfacePoint sp = from_chart(seg.cylinder, c.x, c.y);
        bool jump = prev_poly >= 0 &&
                    (sp.poly != prev_poly || dist(sp.pos, prev) > 0.25);
        if (jump && !run.empty()) {
            runs.push_back(run);
            run.clear();
        }
        run.push_back(sp.pos);
        prev_poly = sp.poly;
        prev = sp.pos;
    }
    if (!run.empty()) runs.push_back(run);
    return runs;
}

bool AffineMaps::sheared_edge_crosses_original(int label) const {
    ShearedEdge seg = sheared_edge(label);
    const CylinderChart& chart = charts_[seg.cylinder];

    const auto& occ = s_->label_edges[label - 1];
    EdgeRef e = occ[0];
    if (s_->bands[e.poly].edge_side[e.edge] != EdgeSide::Left) e = occ[1];
    int band = s_->bands[e.poly].edge_band[e.edge];
    int piece = band_to_chart_[e.poly][band].second;
    Vec2 a0 = chart.pieces[piece].left_bottom;
    Vec2 a1 = chart.pieces[piece].left_top;

    for (int k = -1; k <= 3; ++k) {
        Vec2 shift{k * chart.width, 0.0};
        if (segments_intersect(seg.chart_start, seg.chart_end, a0 + shift, a1 + shift))
            return true;
    }
    return false;
}

SurfacePoint flip_point(const Surface& s, SurfacePoint p) {
    return {p.poly, s.polygons[p.poly].reflect(p.pos)};
}

SurfacePoint shear_point(const Surface& s, SurfacePoint p) {
    return AffineMaps(s).shear(p);
}

SurfacePoint flip_shear_point(const Surface& s, SurfacePoint p) {
    return AffineMaps(s).flip_shear(p);
}

double flip_shear_direction(double theta, double modulus) {
    Vec2 d{std::cos(theta), std::sin(theta)};
    Vec2 image{-d.x + modulus * d.y, d.y};
    return angle_of(image);
}

}  // namespace flatsurf
