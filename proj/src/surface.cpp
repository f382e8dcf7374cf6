#include "flatsurf/surface.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace flatsurf {

std::string family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::RegularSingle: return "regular-single";
        case FamilyTag::RegularDouble: return "regular-double";
        case FamilyTag::BouwMoller: return "bouw-moller";
        case FamilyTag::Custom: return "custom";
    }
    return "custom";
}

int Surface::edge_id(EdgeRef e) const {
    int id = 0;
    for (int p = 0; p < e.poly; ++p) id += polygons[p].edge_count();
    return id + e.edge;
}

EdgeRef Surface::partner(EdgeRef e) const { return partner_[e.poly][e.edge]; }

Vec2 Surface::gluing_translation(EdgeRef e) const {
    EdgeRef f = partner(e);
    // Anti-parallel pair: the translation sends end(e) to start(f).
    return polygons[f.poly].edge_start(f.edge) - polygons[e.poly].edge_end(e.edge);
}

bool Surface::edge_is_horizontal(EdgeRef e) const {
    return std::abs(polygons[e.poly].edge_vector(e.edge).y) <= geom_epsilon();
}

double Surface::total_area() const {
    double a = 0.0;
    for (const auto& p : polygons) a += p.area();
    return a;
}

void Surface::finalize(const std::vector<std::vector<EdgeRef>>& partner_map) {
    partner_ = partner_map;
    bands.clear();
    for (const auto& p : polygons) bands.push_back(analyze_bands(p));

    // Canonical label numbering: pairs sorted by their first occurrence,
    // ordered by (polygon, level, right-before-left). Horizontal chords get
    // even level keys, bands odd ones, so a bottom edge sorts before the
    // band-0 side edges and a top edge after the top band.
    auto occurrence_key = [&](EdgeRef e) {
        const PolygonBands& b = bands[e.poly];
        int side = (b.edge_side[e.edge] == EdgeSide::Left) ? 1 : 0;
        return std::tuple<int, int, int>(e.poly, b.edge_level_key(e.edge), side);
    };

    std::vector<std::array<EdgeRef, 2>> pairs;
    for (int p = 0; p < static_cast<int>(polygons.size()); ++p) {
        for (int e = 0; e < polygons[p].edge_count(); ++e) {
            EdgeRef a{p, e};
            EdgeRef b = partner(a);
            if (b.poly < 0) throw InvalidParams("surface: unpaired edge");
            if (std::tuple(a.poly, a.edge) < std::tuple(b.poly, b.edge)) {
                if (occurrence_key(b) < occurrence_key(a)) std::swap(a, b);
                pairs.push_back({a, b});
            }
        }
    }
    std::sort(pairs.begin(), pairs.end(), [&](const auto& x, const auto& y) {
        return occurrence_key(x[0]) < occurrence_key(y[0]);
    });

    label_count = static_cast<int>(pairs.size());
    label_edges = pairs;
    for (auto& poly : polygons) poly.edge_labels.assign(poly.edge_count(), -1);
    for (int i = 0; i < label_count; ++i) {
        for (const EdgeRef& e : pairs[i]) polygons[e.poly].edge_labels[e.edge] = i + 1;
    }
}

Surface make_surface(std::vector<Polygon> polys,
                     std::vector<std::pair<EdgeRef, EdgeRef>> pairs,
                     FamilyTag family) {
    Surface s;
    s.polygons = std::move(polys);
    s.family = family;

    std::vector<std::vector<EdgeRef>> partner(s.polygons.size());
    for (size_t p = 0; p < s.polygons.size(); ++p)
        partner[p].assign(s.polygons[p].edge_count(), EdgeRef{});
    for (const auto& [a, b] : pairs) {
        if (partner[a.poly][a.edge].poly >= 0 || partner[b.poly][b.edge].poly >= 0)
            throw InvalidParams("make_surface: edge glued twice");
        partner[a.poly][a.edge] = b;
        partner[b.poly][b.edge] = a;
    }
    s.finalize(partner);
    return s;
}

Surface build_regular_surface(int n, bool doubled) {
    if (n < 3) throw InvalidParams("build_regular_surface: n must be >= 3");
    if (!doubled && n % 2 != 0)
        throw OddSingle("single regular n-gon surface requires even n");

    std::vector<Polygon> polys;
    std::vector<std::pair<EdgeRef, EdgeRef>> pairs;

    Polygon p0 = regular_ngon(n);
    if (!doubled) {
        polys.push_back(p0);
        for (int j = 0; j < n / 2; ++j)
            pairs.push_back({EdgeRef{0, j}, EdgeRef{0, j + n / 2}});
    } else {
        // The second copy is the first rotated by pi (the reflected copy of
        // the picture, traversed counterclockwise), so each edge of the
        // first pairs with the opposite-direction edge of the second.
        Polygon p1 = regular_ngon_rotated(n);
        auto find_dir = [&](int dir) {
            for (int e = 0; e < p1.edge_count(); ++e)
                if (p1.dir_index[e] == dir) return e;
            throw InvalidParams("double surface: missing opposite direction");
        };
        for (int j = 0; j < n; ++j)
            pairs.push_back({EdgeRef{0, j}, EdgeRef{1, find_dir((2 * j + n) % (2 * n))}});

        PolygonBands b0 = analyze_bands(p0);
        int share = b0.band_right_edge[0];
        EdgeRef partner{};
        for (const auto& [a, b] : pairs)
            if (a == EdgeRef{0, share}) partner = b;
        Vec2 t = p0.edge_end(share) - p1.edge_start(partner.edge);
        p1.translate(t);

        polys.push_back(p0);
        polys.push_back(p1);
    }

    Surface s = make_surface(std::move(polys), std::move(pairs),
                             doubled ? FamilyTag::RegularDouble : FamilyTag::RegularSingle);
    s.param_n = n;
    s.doubled = doubled;
    return s;
}

Surface build_bouw_moller(int m, int n) {
    if (m < 2) throw InvalidParams("build_bouw_moller: m must be >= 2");
    if (n < 3) throw InvalidParams("build_bouw_moller: n must be >= 3");

    auto sin_clamped = [m](int j) {
        double v = std::sin(static_cast<double>(j) * kPi / m);
        return std::abs(v) < 1e-12 ? 0.0 : v;
    };

    // Edge lengths of P(k). The even/odd-edge assignment alternates with k
    // when n is even and is uniform when n is odd; this is the unique
    // assignment under which the opposite-edge gluing below pairs parallel
    // edges of equal length for all m, n.
    std::vector<Polygon> polys;
    for (int k = 0; k < m; ++k) {
        double lo = sin_clamped(k);
        double hi = sin_clamped(k + 1);
        double a, b;
        if (n % 2 == 1) {
            a = hi;
            b = lo;
        } else if (k % 2 == 0) {
            a = lo;
            b = hi;
        } else {
            a = hi;
            b = lo;
        }
        polys.push_back(semi_regular_polygon(n, a, b));
    }

    auto find_dir = [&](int poly, int dir) {
        const Polygon& p = polys[poly];
        for (int e = 0; e < p.edge_count(); ++e)
            if (p.dir_index[e] == dir) return e;
        return -1;
    };

    // For k odd, even edges of P(k) are identified with the opposite edge of
    // P(k+1) and odd edges with the opposite edge of P(k-1).
    std::vector<std::pair<EdgeRef, EdgeRef>> pairs;
    for (int k = 1; k < m; k += 2) {
        const Polygon& p = polys[k];
        for (int e = 0; e < p.edge_count(); ++e) {
            int i = p.dir_index[e];
            int neighbor = (i % 2 == 0) ? k + 1 : k - 1;
            if (neighbor >= m)
                throw InvalidParams("build_bouw_moller: dangling even edge in last polygon");
            int f = find_dir(neighbor, (i + n) % (2 * n));
            if (f < 0) throw InvalidParams("build_bouw_moller: missing opposite edge");
            pairs.push_back({EdgeRef{k, e}, EdgeRef{neighbor, f}});
        }
    }

    // Lay the polygons out left to right, each sharing one glued edge with
    // its predecessor (the lowest-band right edge), as in the figures.
    for (int k = 0; k + 1 < m; ++k) {
        PolygonBands bk = analyze_bands(polys[k]);
        int best = -1;
        for (int band = 0; band < bk.band_count() && best < 0; ++band) {
            int e = bk.band_right_edge[band];
            for (const auto& [x, y] : pairs) {
                if ((x == EdgeRef{k, e} && y.poly == k + 1) ||
                    (y == EdgeRef{k, e} && x.poly == k + 1)) {
                    best = e;
                    break;
                }
            }
        }
        if (best < 0) throw InvalidParams("build_bouw_moller: no shared right edge");
        EdgeRef f{};
        for (const auto& [x, y] : pairs) {
            if (x == EdgeRef{k, best}) f = y;
            if (y == EdgeRef{k, best}) f = x;
        }
        Vec2 t = polys[k].edge_end(best) - polys[k + 1].edge_start(f.edge);
        polys[k + 1].translate(t);
    }

    Surface s = make_surface(std::move(polys), std::move(pairs), FamilyTag::BouwMoller);
    s.param_m = m;
    s.param_n = n;
    return s;
}

namespace {

PolygonChecks check_polygon(const Polygon& p) {
    double eps = geom_epsilon();
    PolygonChecks c;

    Vec2 sum{0, 0};
    for (int e = 0; e < p.edge_count(); ++e) sum += p.edge_vector(e);
    c.closed = norm(sum) <= eps;

    for (int e = 0; e < p.edge_count(); ++e) {
        double cr = cross(p.edge_vector(e), p.edge_vector((e + 1) % p.edge_count()));
        if (cr < -eps) c.convex = false;
    }

    for (const Vec2& v : p.vertices) {
        for (int e = 0; e < p.edge_count(); ++e) {
            double y0 = p.edge_start(e).y;
            double y1 = p.edge_end(e).y;
            if (std::min(y0, y1) + eps < v.y && v.y < std::max(y0, y1) - eps)
                c.level = false;
        }
    }

    for (const Vec2& v : p.vertices) {
        Vec2 r = p.reflect(v);
        bool found = false;
        for (const Vec2& w : p.vertices)
            if (almost_equal(r, w, eps)) found = true;
        if (!found) c.vertically_symmetric = false;
    }
    return c;
}

}  // namespace

bool ValidationReport::ok() const {
    if (!(gluing_matching && gluing_translations && gluing_symmetric && labels_consistent))
        return false;
    for (const auto& c : polygon)
        if (!c.ok()) return false;
    return true;
}

std::string ValidationReport::summary() const {
    std::ostringstream out;
    for (size_t i = 0; i < polygon.size(); ++i) {
        const auto& c = polygon[i];
        out << "polygon " << i << ": closed=" << c.closed << " convex=" << c.convex
            << " level=" << c.level << " vsym=" << c.vertically_symmetric << "\n";
    }
    out << "gluing: matching=" << gluing_matching << " translations=" << gluing_translations
        << " symmetry-compatible=" << gluing_symmetric << " labels=" << labels_consistent
        << "\n";
    out << (ok() ? "PASS" : "FAIL") << "\n";
    return out.str();
}

ValidationReport validate_special(const Surface& s) {
    double eps = geom_epsilon();
    ValidationReport r;
    for (const auto& p : s.polygons) r.polygon.push_back(check_polygon(p));

    for (int p = 0; p < static_cast<int>(s.polygons.size()); ++p) {
        for (int e = 0; e < s.polygons[p].edge_count(); ++e) {
            EdgeRef a{p, e};
            EdgeRef b = s.partner(a);
            if (b.poly < 0 || !(s.partner(b) == a) || b == a) {
                r.gluing_matching = false;
                continue;
            }
            Vec2 va = s.polygons[a.poly].edge_vector(a.edge);
            Vec2 vb = s.polygons[b.poly].edge_vector(b.edge);
            if (!almost_equal(va, -vb, eps)) r.gluing_translations = false;
            if (s.label(a) != s.label(b) || s.label(a) < 0) r.labels_consistent = false;

            int ra = s.polygons[a.poly].reflected_edge(a.edge);
            int rb = s.polygons[b.poly].reflected_edge(b.edge);
            if (ra < 0 || rb < 0 ||
                !(s.partner(EdgeRef{a.poly, ra}) == EdgeRef{b.poly, rb}))
                r.gluing_symmetric = false;
        }
    }
    return r;
}

std::string surface_to_json(const Surface& s) {
    nlohmann::ordered_json j;
    j["format"] = "flatsurf-v1";
    j["family"] = family_name(s.family);
    if (s.family == FamilyTag::BouwMoller) {
        j["m"] = s.param_m;
        j["n"] = s.param_n;
    } else if (s.family != FamilyTag::Custom) {
        j["n"] = s.param_n;
        j["doubled"] = s.doubled;
    }
    j["polygons"] = nlohmann::ordered_json::array();
    for (const auto& p : s.polygons) {
        nlohmann::ordered_json poly;
        poly["vertices"] = nlohmann::ordered_json::array();
        for (const auto& v : p.vertices) poly["vertices"].push_back({v.x, v.y});
        j["polygons"].push_back(poly);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (int p = 0; p < static_cast<int>(s.polygons.size()); ++p)
        for (int e = 0; e < s.polygons[p].edge_count(); ++e)
            j["edges"].push_back({{"polygon", p}, {"edge", e}, {"label", s.polygons[p].edge_labels[e]}});
    j["gluing"] = nlohmann::ordered_json::array();
    for (const auto& pair : s.label_edges)
        j["gluing"].push_back({{pair[0].poly, pair[0].edge}, {pair[1].poly, pair[1].edge}});
    return j.dump(2);
}

}  // namespace flatsurf
