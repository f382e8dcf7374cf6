#include "flatsurf/svg.hpp"

#include <array>
#include <cstdio>
#include <sstream>

#include "flatsurf/automorphisms.hpp"
#include "flatsurf/cylinders.hpp"

namespace flatsurf {

namespace {

constexpr std::array<const char*, 8> kPalette = {
    "#9ecae1", "#a1d99b", "#fdae6b", "#bcbddc",
    "#fc9272", "#c7e9c0", "#fdd0a2", "#d9d9d9",
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

struct Mapper {
    double scale = 120.0;
    double min_x = 0.0, max_y = 0.0;
    double margin = 20.0;

    std::string pt(Vec2 v) const {
        return fmt(margin + (v.x - min_x) * scale) + "," + fmt(margin + (max_y - v.y) * scale);
    }
    std::string x(double v) const { return fmt(margin + (v - min_x) * scale); }
    std::string y(double v) const { return fmt(margin + (max_y - v) * scale); }
};

}  // namespace

std::string render_surface_svg(const Surface& s, const RenderOptions& opt) {
    Mapper m;
    m.scale = opt.scale;
    double min_x = 1e300, max_x = -1e300, min_y = 1e300, max_y = -1e300;
    for (const auto& p : s.polygons) {
        min_x = std::min(min_x, p.min_x());
        max_x = std::max(max_x, p.max_x());
        min_y = std::min(min_y, p.min_y());
        max_y = std::max(max_y, p.max_y());
    }
    m.min_x = min_x;
    m.max_y = max_y;
    double w = (max_x - min_x) * m.scale + 2 * m.margin;
    double h = (max_y - min_y) * m.scale + 2 * m.margin;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\""
        << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n";

    if (opt.shade_cylinders) {
        std::vector<Cylinder> cyls = decompose(s);
        for (size_t ci = 0; ci < cyls.size(); ++ci) {
            const char* color = kPalette[ci % kPalette.size()];
            for (const auto& t : cyls[ci].trapezoids) {
                out << "  <polygon points=\"" << m.pt(t.bl) << " " << m.pt(t.br) << " "
                    << m.pt(t.tr) << " " << m.pt(t.tl) << "\" fill=\"" << color
                    << "\" fill-opacity=\"0.8\" stroke=\"none\"/>\n";
            }
        }
    }

    for (const auto& p : s.polygons) {
        out << "  <polygon points=\"";
        for (int v = 0; v < p.edge_count(); ++v) {
            if (v) out << " ";
            out << m.pt(p.vertices[v]);
        }
        out << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }

    if (opt.edge_labels) {
        for (const auto& p : s.polygons) {
            Vec2 center{p.axis_x(), 0.5 * (p.min_y() + p.max_y())};
            for (int e = 0; e < p.edge_count(); ++e) {
                Vec2 mid = p.edge_midpoint(e);
                Vec2 inward = mid + (center - mid) * 0.12;
                out << "  <text x=\"" << m.x(inward.x) << "\" y=\"" << m.y(inward.y)
                    << "\" font-size=\"12\" text-anchor=\"middle\">" << p.edge_labels[e]
                    << "</text>\n";
            }
        }
    }

    if (opt.sheared_edges) {
        AffineMaps maps(s);
        for (int l = 1; l <= s.label_count; ++l) {
            if (s.edge_is_horizontal(s.label_edges[l - 1][0])) continue;
            for (const auto& run : maps.sheared_edge_polyline(l)) {
                out << "  <polyline points=\"";
                for (size_t i = 0; i < run.size(); ++i) {
                    if (i) out << " ";
                    out << m.pt(run[i]);
                }
                out << "\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1\""
                    << " stroke-dasharray=\"4 3\"/>\n";
            }
        }
    }

    if (opt.trajectory) {
        Vec2 from = opt.trajectory_start.pos;
        for (const auto& cr : opt.trajectory->crossings) {
            out << "  <line x1=\"" << m.x(from.x) << "\" y1=\"" << m.y(from.y) << "\" x2=\""
                << m.x(cr.point.x) << "\" y2=\"" << m.y(cr.point.y)
                << "\" stroke=\"#d62728\" stroke-width=\"1\"/>\n";
            from = cr.point + s.gluing_translation(cr.exit_edge);
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace flatsurf
