#pragma once

#include <vector>

#include "flatsurf/surface.hpp"

namespace flatsurf {

enum class CylinderKind { Typical, Exceptional };

// One level band of one polygon: an isosceles trapezoid (possibly degenerate
// to a triangle, or a rectangle).
struct Trapezoid {
    int poly = -1;
    int band = -1;
    Vec2 bl, br, tl, tr;  // corners, bottom-left/bottom-right/top-left/top-right
    int left_edge = -1;
    int right_edge = -1;

    double height() const { return tl.y - bl.y; }
    double bottom_width() const { return br.x - bl.x; }
    double top_width() const { return tr.x - tl.x; }
    double area() const { return 0.5 * (bottom_width() + top_width()) * height(); }

    // The positive diagonal, joining the left vertex at the lower level to
    // the right vertex one level above.
    Vec2 slant_start() const { return bl; }
    Vec2 slant_end() const { return tr; }
    double slant_angle() const { return angle_of(tr - bl); }
};

struct Cylinder {
    std::vector<Trapezoid> trapezoids;  // in chain order, left to right
    double width = 0.0;                 // circumference W
    double height = 0.0;                // H
    double modulus = 0.0;               // W / H
    CylinderKind kind = CylinderKind::Typical;
    std::vector<int> gluing_labels;     // labels of the non-horizontal sides
};

// The canonical horizontal cylinder decomposition: horizontal segments
// through all vertices cut each polygon into level bands, and bands chain
// across the gluings of their non-horizontal edges into closed cylinders.
std::vector<Cylinder> decompose(const Surface& s);

struct PerfectnessReport {
    bool is_perfect = false;
    double common_modulus = 0.0;  // M
    std::vector<std::pair<double, CylinderKind>> cylinders;
};

// Classifies cylinders and checks that every typical cylinder has modulus M
// and every exceptional one M/2 for a single M.
PerfectnessReport perfectness(const Surface& s);
PerfectnessReport perfectness(const Surface& s, const std::vector<Cylinder>& cyls);

// Smallest angle between any slanted edge and the positive horizontal.
double theta_s(const Surface& s);
double theta_s(const Surface& s, const std::vector<Cylinder>& cyls);

}  // namespace flatsurf
