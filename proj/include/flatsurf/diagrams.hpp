#pragma once

#include <map>
#include <string>
#include <vector>

#include "flatsurf/cylinders.hpp"
#include "flatsurf/surface.hpp"

namespace flatsurf {

// Directed graph on edge labels: an arrow connects two labels when some
// trajectory with direction in [0, theta_s) can cross the first edge and
// then the second. Each arrow happens inside a unique polygon and carries
// the transition type: 0 when the exit edge is on the entry edge's level,
// 1 when it is one level above.
struct TransitionDiagram {
    int node_count = 0;  // labels are 1..node_count
    struct Arrow {
        int from = 0;
        int to = 0;
        int poly = -1;
        int type = 0;
        int in_edge = -1;   // edge indices within poly
        int out_edge = -1;
    };
    std::vector<Arrow> arrows;
    std::vector<int> node_row;  // 1-based row per label (interface index)

    const Arrow* find(int from, int to) const;
    bool has(int from, int to) const { return find(from, to) != nullptr; }
    std::vector<int> successors(int from) const;
};

// Builds the diagram geometrically: for every polygon, an entry edge (left
// side or bottom) connects to an exit edge (right side or top) exactly when
// the open interval of chord directions between them meets [0, theta_s).
TransitionDiagram transition_diagram(const Surface& s);

// Expected (m,n) diagram generated purely combinatorially from the band
// structure of the semi-regular polygons (no coordinates). Row k holds the
// n labels introduced between P(k-1) and P(k); rows snake in the drawings.
TransitionDiagram grid_template(int m, int n);

struct ShapeReport {
    bool pass = false;
    int rows = 0;
    int cols = 0;
    // witness[label] = template label it maps to (identity when the surface
    // uses the canonical numbering).
    std::map<int, int> witness;
    std::map<int, std::pair<int, int>> grid_position;  // label -> (row, col)
    std::string failure;
};

// Checks that a diagram coming from the (m,n) Bouw-Moller surface is
// isomorphic, up to relabeling, to the snaking grid pattern.
ShapeReport check_grid_shape(const TransitionDiagram& d, int m, int n);

std::string diagram_to_dot(const TransitionDiagram& d);
std::string diagram_to_json(const TransitionDiagram& d);

}  // namespace flatsurf
