#pragma once

#include <vector>

#include "flatsurf/geom.hpp"

namespace flatsurf {

enum class EdgeSide { Left, Right, Bottom, Top };

// A convex planar polygon given as a counterclockwise vertex loop.
//
// The analysis used everywhere downstream (levels, bands, sides) assumes the
// polygon is special: convex, level (no horizontal line through a vertex
// crosses an edge interior) and vertically symmetric. Builders guarantee this;
// hand-built polygons are checked by validate_special.
struct Polygon {
    std::vector<Vec2> vertices;

    // Direction index of each edge in the semi-regular construction: edge i
    // of P_n(a,b) has direction dir_index * pi / n. -1 for hand-built
    // polygons. Used to resolve gluings by opposite direction.
    std::vector<int> dir_index;

    // Label id per edge, assigned by the surface builder. -1 when unset.
    std::vector<int> edge_labels;

    int edge_count() const { return static_cast<int>(vertices.size()); }
    Vec2 edge_start(int e) const { return vertices[e]; }
    Vec2 edge_end(int e) const { return vertices[(e + 1) % vertices.size()]; }
    Vec2 edge_vector(int e) const { return edge_end(e) - edge_start(e); }
    Vec2 edge_midpoint(int e) const { return (edge_start(e) + edge_end(e)) * 0.5; }

    double area() const;
    double min_x() const;
    double max_x() const;
    double min_y() const;
    double max_y() const;

    // x-coordinate of the vertical symmetry axis.
    double axis_x() const { return 0.5 * (min_x() + max_x()); }

    // Reflection through the vertical axis, as a map on points.
    Vec2 reflect(Vec2 p) const { return {2.0 * axis_x() - p.x, p.y}; }

    // Index of the edge whose endpoint set is the reflection of edge e's
    // endpoint set, or -1 if none matches (non-symmetric polygon).
    int reflected_edge(int e) const;

    void translate(Vec2 t);
    bool contains(Vec2 p, double slack = 0.0) const;
    double boundary_distance(Vec2 p) const;
};

// Per-polygon level/band structure. Levels are the sorted distinct vertex
// heights; band b is the horizontal slab between levels b and b+1. In a
// special polygon every non-horizontal edge spans exactly one band.
struct PolygonBands {
    std::vector<double> levels;
    std::vector<int> edge_band;        // band per edge; -1 for horizontal edges
    std::vector<EdgeSide> edge_side;
    std::vector<int> band_left_edge;   // per band
    std::vector<int> band_right_edge;  // per band
    int bottom_edge = -1;              // horizontal edge at the lowest level
    int top_edge = -1;

    int band_count() const { return static_cast<int>(levels.size()) - 1; }
    int level_index(double y) const;

    // Level key used for canonical label ordering: horizontal chords sit
    // between bands, so bands get odd keys and chord levels even keys.
    int edge_level_key(int e) const;

    // Entry/exit level used for transition typing. Crossing up through a
    // horizontal edge counts as a level change, so the bottom edge sits one
    // level below band 0 and the top edge one level above the top band.
    int edge_entry_level(int e) const;
    int edge_exit_level(int e) const;
};

PolygonBands analyze_bands(const Polygon& poly);

// The (a,b) semi-regular 2n-gon P_n(a,b): edge vectors a*[cos(i*pi/n),
// sin(i*pi/n)] for even i and b*[...] for odd i, i = 0..2n-1. Zero-length
// edges are dropped, so P_n(a,0) and P_n(0,b) are regular n-gons. The result
// is placed with its lowest horizontal edge starting at the origin (lowest
// vertex at the origin when there is no horizontal edge).
Polygon semi_regular_polygon(int n, double a, double b);

// Regular n-gon with unit edges, horizontal bottom edge starting at the
// origin. dir_index is set as for P_{n}(1,0) scaled: edge j gets index 2j.
Polygon regular_ngon(int n);

// Regular n-gon with unit edges whose directions are i*pi/n for the indices
// i = n mod 2, +2, ... (the rotation of regular_ngon(n) by pi), edges listed
// in increasing direction-index order as semi_regular_polygon does.
Polygon regular_ngon_rotated(int n);

// Translate so the lowest horizontal edge starts at the origin (lowest
// vertex at the origin when there is none).
void anchor_at_origin(Polygon& poly);

}  // namespace flatsurf
