#pragma once

#include <array>
#include <string>
#include <vector>

#include "flatsurf/polygon.hpp"

namespace flatsurf {

enum class FamilyTag { RegularSingle, RegularDouble, BouwMoller, Custom };

std::string family_name(FamilyTag tag);

// A point on a surface, in the plane coordinates of one placed polygon.
struct SurfacePoint {
    int poly = -1;
    Vec2 pos;
};

struct EdgeRef {
    int poly = -1;
    int edge = -1;
    bool operator==(const EdgeRef&) const = default;
};

// A translation surface presented as placed polygons with a translation
// pairing on their directed edges. The pairing is an involution without
// fixed edges; paired edges are parallel, equal length and oppositely
// oriented, and carry the same label.
struct Surface {
    std::vector<Polygon> polygons;
    std::vector<PolygonBands> bands;  // analysis cache, one per polygon

    FamilyTag family = FamilyTag::Custom;
    int param_n = 0;
    int param_m = 0;
    bool doubled = false;

    int label_count = 0;
    // Two occurrences per label, in deterministic order.
    std::vector<std::array<EdgeRef, 2>> label_edges;

    int edge_id(EdgeRef e) const;
    EdgeRef partner(EdgeRef e) const;
    int label(EdgeRef e) const { return polygons[e.poly].edge_labels[e.edge]; }

    // Translation carrying edge e onto its partner (point transport map).
    Vec2 gluing_translation(EdgeRef e) const;

    bool edge_is_horizontal(EdgeRef e) const;

    double total_area() const;

    // Called by builders and by hand-construction once polygons and the
    // pairing are set: analyzes bands, assigns canonical labels.
    void finalize(const std::vector<std::vector<EdgeRef>>& partner_map);

  private:
    std::vector<std::vector<EdgeRef>> partner_;
    friend Surface make_surface(std::vector<Polygon> polys,
                                std::vector<std::pair<EdgeRef, EdgeRef>> pairs,
                                FamilyTag family);
};

// Assemble a surface from polygons and explicit edge pairs (used by tests and
// hand-built examples). Pairs are validated structurally, not geometrically;
// run validate_special for the geometry checks.
Surface make_surface(std::vector<Polygon> polys,
                     std::vector<std::pair<EdgeRef, EdgeRef>> pairs,
                     FamilyTag family = FamilyTag::Custom);

// A regular n-gon surface: one regular n-gon with opposite parallel edges
// identified (n even), or two regular n-gons, one the reflection of the
// other, with opposite parallel edges identified across the copies.
Surface build_regular_surface(int n, bool doubled);

// The (m,n) Bouw-Moller surface: m semi-regular 2n-gons, the first and last
// degenerating to regular n-gons, glued by the opposite-edge parity rules.
Surface build_bouw_moller(int m, int n);

struct PolygonChecks {
    bool closed = true;
    bool convex = true;
    bool level = true;
    bool vertically_symmetric = true;
    bool ok() const { return closed && convex && level && vertically_symmetric; }
};

struct ValidationReport {
    std::vector<PolygonChecks> polygon;
    bool gluing_matching = true;      // every edge in exactly one pair
    bool gluing_translations = true;  // paired edges anti-parallel, equal length
    bool gluing_symmetric = true;     // compatible with the vertical reflections
    bool labels_consistent = true;
    bool ok() const;
    std::string summary() const;
};

ValidationReport validate_special(const Surface& s);

// JSON dump in the versioned "flatsurf-v1" schema.
std::string surface_to_json(const Surface& s);

}  // namespace flatsurf
