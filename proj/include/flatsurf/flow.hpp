#pragma once

#include <optional>
#include <vector>

#include "flatsurf/surface.hpp"

namespace flatsurf {

struct Trajectory {
    SurfacePoint start;
    double theta = 0.0;  // radians
};

struct Crossing {
    int label = -1;
    EdgeRef exit_edge;   // the edge occurrence crossed, in its exit polygon
    Vec2 point;          // crossing point in the exit polygon's coordinates
    double param = 0.0;  // arc length from the start
};

struct CuttingSequence {
    std::vector<int> labels;
    std::vector<Crossing> crossings;
    int window_len() const { return static_cast<int>(labels.size()); }
};

// Absolute distance below which a crossing counts as hitting a vertex; the
// trajectory stops there (VertexHit) rather than silently choosing a side.
inline constexpr double kVertexEps = 1e-9;

struct FlowResult {
    CuttingSequence seq;
    bool vertex_hit = false;
    int hit_step = -1;  // crossing index at which the vertex was met

    bool ok() const { return !vertex_hit; }
};

// Traces the straight-line flow from t.start in direction t.theta through the
// first n edge crossings. At each crossing the point is transported by the
// gluing translation to the paired edge and the flow continues with the same
// direction. On a vertex hit the partial sequence is returned with the flag.
FlowResult flow(const Surface& s, const Trajectory& t, int n);

// Position of the flow just after the k-th recorded crossing (entry point in
// the polygon the trajectory continues into).
SurfacePoint flow_entry_point(const Surface& s, const Crossing& c);

}  // namespace flatsurf
