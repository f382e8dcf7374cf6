#pragma once

#include <string>
#include <vector>

#include "flatsurf/flow.hpp"
#include "flatsurf/surface.hpp"

namespace flatsurf {

struct RenderOptions {
    bool shade_cylinders = false;
    bool sheared_edges = false;
    bool edge_labels = true;
    const CuttingSequence* trajectory = nullptr;  // optional overlay
    SurfacePoint trajectory_start;
    double trajectory_theta = 0.0;
    double scale = 120.0;
};

// Deterministic SVG: fixed palette, coordinates rounded to 6 decimals.
std::string render_surface_svg(const Surface& s, const RenderOptions& opt);

}  // namespace flatsurf
