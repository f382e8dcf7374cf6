#pragma once

#include <vector>

#include "flatsurf/cylinders.hpp"
#include "flatsurf/surface.hpp"

namespace flatsurf {

// An unrolled horizontal cylinder. Trapezoids are laid side by side in chain
// order; piece i maps polygon coordinates to strip coordinates by
// p -> p - offset[i]. The strip repeats with horizontal period W.
struct CylinderChart {
    double width = 0.0;
    double height = 0.0;
    struct Piece {
        int poly = -1;
        int band = -1;
        Vec2 offset;       // polygon coords -> chart coords is p - offset
        Vec2 left_bottom;  // chart coords of the piece's left edge endpoints
        Vec2 left_top;
        int left_label = -1;
    };
    std::vector<Piece> pieces;

    double left_x(int piece, double v) const;
    // Piece index containing chart point (u, v); u is wrapped mod width.
    int locate(double& u, double v) const;
};

// The flip R, shear S_M and flip-shear V_M = S_M o R as point maps, with the
// per-cylinder charts precomputed once and shared read-only.
class AffineMaps {
  public:
    explicit AffineMaps(const Surface& s);

    const Surface& surface() const { return *s_; }
    const std::vector<Cylinder>& cylinders() const { return cyls_; }
    double common_modulus() const { return modulus_; }

    // Reflection of p through the vertical symmetry axis of its polygon.
    SurfacePoint flip(SurfacePoint p) const;

    // In chart coordinates (u, v) with v measured from the cylinder bottom:
    // (u, v) -> ((u + M v) mod W, v). Tops and bottoms stay fixed pointwise.
    SurfacePoint shear(SurfacePoint p) const;

    SurfacePoint flip_shear(SurfacePoint p) const { return shear(flip(p)); }

    // Chart location of a surface point: cylinder index plus (u, v). Points
    // on a shared horizontal boundary belong to the cylinder above it
    // (bottom-inclusive, top-exclusive).
    struct ChartPoint {
        int cylinder = -1;
        int piece = -1;
        double u = 0.0;
        double v = 0.0;
    };
    ChartPoint to_chart(SurfacePoint p) const;
    SurfacePoint from_chart(int cylinder, double u, double v) const;

    // Image V_M(arc) for the gluing edge with the given label, as a chart
    // segment of the arc's cylinder (start at v=0, end at v=H; the end may
    // stick out beyond one period). Used by the crossing checks and renderer.
    struct ShearedEdge {
        int cylinder = -1;
        Vec2 chart_start;
        Vec2 chart_end;
    };
    ShearedEdge sheared_edge(int label) const;

    // The same image as a planar polyline (split where it changes polygon).
    std::vector<std::vector<Vec2>> sheared_edge_polyline(int label) const;

    // True if V_M(arc) crosses the arc itself inside its cylinder.
    bool sheared_edge_crosses_original(int label) const;

    const CylinderChart& chart(int cylinder) const { return charts_[cylinder]; }
    int cylinder_of_band(int poly, int band) const;

  private:
    const Surface* s_;
    std::vector<Cylinder> cyls_;
    std::vector<CylinderChart> charts_;
    std::vector<std::vector<std::pair<int, int>>> band_to_chart_;  // (cyl, piece)
    double modulus_ = 0.0;

    SurfacePoint canonicalize(SurfacePoint p) const;
};

// Spec-named convenience wrappers (each builds the chart context afresh;
// use AffineMaps directly in loops).
SurfacePoint flip_point(const Surface& s, SurfacePoint p);
SurfacePoint shear_point(const Surface& s, SurfacePoint p);
SurfacePoint flip_shear_point(const Surface& s, SurfacePoint p);

// The flip-shear on directions: the derivative of S_M o R applied to
// (cos theta, sin theta), i.e. (x, y) -> (-x + M y, y), with the resulting
// angle normalized to [0, 2 pi). An exact matrix involution.
double flip_shear_direction(double theta, double modulus);

}  // namespace flatsurf
