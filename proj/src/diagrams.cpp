#include "flatsurf/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace flatsurf {

const TransitionDiagram::Arrow* TransitionDiagram::find(int from, int to) const {
    for (const auto& a : arrows)
        if (a.from == from && a.to == to) return &a;
    return nullptr;
}

std::vector<int> TransitionDiagram::successors(int from) const {
    std::vector<int> out;
    for (const auto& a : arrows)
        if (a.from == from) out.push_back(a.to);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Open interval of chord directions from the interior of edge `in` to the
// interior of edge `out`. Extremes are attained at endpoint pairs; shared
// endpoints contribute their adjacent edge directions through the remaining
// corner vectors. All relevant directions lie in (-pi/2, pi), safely away
// from the atan2 branch cut.
struct AngleInterval {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
};

AngleInterval chord_directions(const Polygon& p, int in, int out) {
    AngleInterval iv;
    Vec2 ps[2] = {p.edge_start(in), p.edge_end(in)};
    Vec2 qs[2] = {p.edge_start(out), p.edge_end(out)};
    for (Vec2 a : ps) {
        for (Vec2 b : qs) {
            Vec2 v = b - a;
            if (norm(v) <= geom_epsilon()) continue;  // shared vertex
            double ang = std::atan2(v.y, v.x);
            iv.lo = std::min(iv.lo, ang);
            iv.hi = std::max(iv.hi, ang);
        }
    }
    return iv;
}

}  // namespace

TransitionDiagram transition_diagram(const Surface& s) {
    std::vector<Cylinder> cyls = decompose(s);
    double ts = theta_s(s, cyls);

    TransitionDiagram d;
    d.node_count = s.label_count;
    d.node_row.assign(s.label_count + 1, 0);
    for (int l = 1; l <= s.label_count; ++l)
        d.node_row[l] = s.label_edges[l - 1][0].poly + 1;

    for (int poly = 0; poly < static_cast<int>(s.polygons.size()); ++poly) {
        const Polygon& p = s.polygons[poly];
        const PolygonBands& b = s.bands[poly];
        for (int in = 0; in < p.edge_count(); ++in) {
            EdgeSide si = b.edge_side[in];
            if (si != EdgeSide::Left && si != EdgeSide::Bottom) continue;
            for (int out = 0; out < p.edge_count(); ++out) {
                if (out == in) continue;
                EdgeSide so = b.edge_side[out];
                if (so != EdgeSide::Right && so != EdgeSide::Top) continue;
                AngleInterval iv = chord_directions(p, in, out);
                if (!(iv.hi > 0.0 && iv.lo < ts)) continue;
                TransitionDiagram::Arrow a;
                a.from = p.edge_labels[in];
                a.to = p.edge_labels[out];
                a.poly = poly;
                a.in_edge = in;
                a.out_edge = out;
                a.type = b.edge_exit_level(out) - b.edge_entry_level(in);
                if (a.type != 0 && a.type != 1)
                    throw Inadmissible("transition crosses more than one level");
                if (d.find(a.from, a.to))
                    throw Inadmissible("duplicate arrow between one label pair");
                d.arrows.push_back(a);
            }
        }
    }
    std::sort(d.arrows.begin(), d.arrows.end(), [](const auto& x, const auto& y) {
        return std::pair(x.from, x.to) < std::pair(y.from, y.to);
    });
    return d;
}

namespace {

// Discrete model of one semi-regular polygon in the (m,n) surface:
// band count plus the direction index of each slot, from which facing,
// interfaces and level keys all follow.
struct PolyModel {
    int bands = 0;
    bool has_bottom = false;
    bool has_top = false;
    std::vector<int> right_idx;  // per band
    std::vector<int> left_idx;
};

PolyModel poly_model(int m, int n, int j) {
    PolyModel pm;
    bool first = (j == 0);
    bool last = (j == m - 1);
    if (!first && !last) {
        pm.bands = n - 1;
        pm.has_bottom = pm.has_top = true;
        for (int b = 0; b < pm.bands; ++b) {
            pm.right_idx.push_back(b + 1);
            pm.left_idx.push_back(2 * n - 1 - b);
        }
        return pm;
    }
    if (n % 2 == 0) {
        bool tilted = first || (m % 2 == 0);
        if (tilted) {
            pm.bands = n / 2;
            for (int b = 0; b < pm.bands; ++b) {
                pm.right_idx.push_back(2 * b + 1);
                pm.left_idx.push_back(2 * n - 1 - 2 * b);
            }
        } else {
            pm.bands = n / 2 - 1;
            pm.has_bottom = pm.has_top = true;
            for (int b = 0; b < pm.bands; ++b) {
                pm.right_idx.push_back(2 * b + 2);
                pm.left_idx.push_back(2 * n - 2 - 2 * b);
            }
        }
    } else {
        pm.bands = (n - 1) / 2;
        if (first) {
            pm.has_bottom = true;
            for (int b = 0; b < pm.bands; ++b) {
                pm.right_idx.push_back(2 * b + 2);
                pm.left_idx.push_back(2 * n - 2 - 2 * b);
            }
        } else {
            pm.has_top = true;
            for (int b = 0; b < pm.bands; ++b) {
                pm.right_idx.push_back(2 * b + 1);
                pm.left_idx.push_back(2 * n - 1 - 2 * b);
            }
        }
    }
    return pm;
}

bool faces_right(int n, int j, int dir_idx) {
    if (n % 2 == 1) return dir_idx % 2 == 0;
    return (dir_idx + j) % 2 == 1;
}

}  // namespace

TransitionDiagram grid_template(int m, int n) {
    if (m < 2 || n < 3) throw InvalidParams("grid_template: need m >= 2, n >= 3");

    std::vector<PolyModel> polys;
    for (int j = 0; j < m; ++j) polys.push_back(poly_model(m, n, j));

    // Slot = (poly, dir index). Arcs join a right-facing slot of P(j) with
    // the opposite-direction slot of P(j+1).
    struct Slot {
        int level_key = 0;
        int side = 0;  // 0 = right/bottom/top, 1 = left
    };
    auto slot_of = [&](int j, int dir) -> Slot {
        const PolyModel& pm = polys[j];
        if (pm.has_bottom && dir == 0) return {0, 0};
        if (pm.has_top && dir == n) return {2 * pm.bands, 0};
        for (int b = 0; b < pm.bands; ++b) {
            if (pm.right_idx[b] == dir) return {2 * b + 1, 0};
            if (pm.left_idx[b] == dir) return {2 * b + 1, 1};
        }
        throw InvalidParams("grid_template: direction not present in polygon");
    };
    auto all_dirs = [&](int j) {
        std::vector<int> dirs;
        const PolyModel& pm = polys[j];
        if (pm.has_bottom) dirs.push_back(0);
        if (pm.has_top) dirs.push_back(n);
        for (int b = 0; b < pm.bands; ++b) {
            dirs.push_back(pm.right_idx[b]);
            dirs.push_back(pm.left_idx[b]);
        }
        return dirs;
    };

    // Assign canonical labels: arcs sorted by (interface, level key of the
    // introducing occurrence, right-before-left).
    struct ArcKey {
        int row, level_key, side, poly, dir;
    };
    std::vector<ArcKey> arcs;
    for (int j = 0; j + 1 < m; ++j) {
        for (int dir : all_dirs(j)) {
            if (!faces_right(n, j, dir)) continue;
            Slot sl = slot_of(j, dir);
            arcs.push_back({j + 1, sl.level_key, sl.side, j, dir});
        }
    }
    std::sort(arcs.begin(), arcs.end(), [](const ArcKey& a, const ArcKey& b) {
        return std::tuple(a.row, a.level_key, a.side) < std::tuple(b.row, b.level_key, b.side);
    });

    std::map<std::pair<int, int>, int> arc_label;  // (poly, dir) -> label
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
        arc_label[{arcs[i].poly, arcs[i].dir}] = i + 1;
        arc_label[{arcs[i].poly + 1, (arcs[i].dir + n) % (2 * n)}] = i + 1;
    }

    TransitionDiagram d;
    d.node_count = static_cast<int>(arcs.size());
    d.node_row.assign(d.node_count + 1, 0);
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) d.node_row[i + 1] = arcs[i].row;

    auto label_at = [&](int j, int dir) { return arc_label.at({j, dir}); };
    auto add = [&](int from, int to, int poly, int type) {
        d.arrows.push_back({from, to, poly, type, -1, -1});
    };

    for (int j = 0; j < m; ++j) {
        const PolyModel& pm = polys[j];
        if (pm.has_bottom) add(label_at(j, 0), label_at(j, pm.right_idx[0]), j, 1);
        for (int b = 0; b < pm.bands; ++b)
            add(label_at(j, pm.left_idx[b]), label_at(j, pm.right_idx[b]), j, 0);
        for (int b = 0; b + 1 < pm.bands; ++b)
            add(label_at(j, pm.left_idx[b]), label_at(j, pm.right_idx[b + 1]), j, 1);
        if (pm.has_top)
            add(label_at(j, pm.left_idx[pm.bands - 1]), label_at(j, n), j, 1);
    }
    std::sort(d.arrows.begin(), d.arrows.end(), [](const auto& x, const auto& y) {
        return std::pair(x.from, x.to) < std::pair(y.from, y.to);
    });
    return d;
}

namespace {

bool same_arrow_sets(const TransitionDiagram& a, const TransitionDiagram& b,
                     const std::map<int, int>& witness) {
    if (a.arrows.size() != b.arrows.size()) return false;
    for (const auto& ar : a.arrows) {
        const auto* m = b.find(witness.at(ar.from), witness.at(ar.to));
        if (!m || m->type != ar.type) return false;
    }
    return true;
}

// Backtracking isomorphism search, used only when the diagram is not already
// canonically labeled. Graphs here have at most (m-1)*n <= 56 nodes.
bool find_isomorphism(const TransitionDiagram& a, const TransitionDiagram& b,
                      std::map<int, int>& witness) {
    int n = a.node_count;
    std::vector<int> map_ab(n + 1, 0), used(n + 1, 0);

    auto signature = [](const TransitionDiagram& d, int v) {
        int out0 = 0, out1 = 0, in0 = 0, in1 = 0;
        for (const auto& ar : d.arrows) {
            if (ar.from == v) (ar.type == 0 ? out0 : out1)++;
            if (ar.to == v) (ar.type == 0 ? in0 : in1)++;
        }
        return std::tuple(out0, out1, in0, in1);
    };
    std::vector<std::tuple<int, int, int, int>> sig_a(n + 1), sig_b(n + 1);
    for (int v = 1; v <= n; ++v) {
        sig_a[v] = signature(a, v);
        sig_b[v] = signature(b, v);
    }

    std::function<bool(int)> place = [&](int v) -> bool {
        if (v > n) return true;
        for (int w = 1; w <= n; ++w) {
            if (used[w] || sig_a[v] != sig_b[w]) continue;
            bool ok = true;
            for (const auto& ar : a.arrows) {
                if (ar.from == v && map_ab[ar.to]) {
                    const auto* f = b.find(w, map_ab[ar.to]);
                    if (!f || f->type != ar.type) { ok = false; break; }
                }
                if (ar.to == v && map_ab[ar.from]) {
                    const auto* f = b.find(map_ab[ar.from], w);
                    if (!f || f->type != ar.type) { ok = false; break; }
                }
            }
            if (!ok) continue;
            map_ab[v] = w;
            used[w] = 1;
            if (place(v + 1)) return true;
            map_ab[v] = 0;
            used[w] = 0;
        }
        return false;
    };
    if (!place(1)) return false;
    for (int v = 1; v <= n; ++v) witness[v] = map_ab[v];
    return true;
}

}  // namespace

ShapeReport check_grid_shape(const TransitionDiagram& d, int m, int n) {
    ShapeReport r;
    r.rows = m - 1;
    r.cols = n;
    TransitionDiagram tmpl = grid_template(m, n);

    if (d.node_count != tmpl.node_count) {
        r.failure = "node count mismatch";
        return r;
    }

    std::map<int, int> witness;
    for (int v = 1; v <= d.node_count; ++v) witness[v] = v;
    if (!same_arrow_sets(d, tmpl, witness)) {
        witness.clear();
        if (!find_isomorphism(d, tmpl, witness)) {
            r.failure = "no isomorphism with the snaking grid template";
            return r;
        }
    }
    r.pass = true;
    r.witness = witness;

    // Grid coordinates: labels snake through the rows, left to right on odd
    // rows and right to left on even rows.
    for (int v = 1; v <= d.node_count; ++v) {
        int t = witness[v];
        int row = (t - 1) / n + 1;
        int col = (t - 1) % n + 1;
        int visual = (row % 2 == 1) ? col : n + 1 - col;
        r.grid_position[v] = {row, visual};
    }
    return r;
}

std::string diagram_to_dot(const TransitionDiagram& d) {
    std::ostringstream out;
    out << "digraph transitions {\n  rankdir=TB;\n  node [shape=circle];\n";
    int max_row = 0;
    for (int l = 1; l <= d.node_count; ++l) max_row = std::max(max_row, d.node_row[l]);
    for (int row = 1; row <= max_row; ++row) {
        out << "  { rank=same;";
        for (int l = 1; l <= d.node_count; ++l)
            if (d.node_row[l] == row) out << " n" << l << ";";
        out << " }\n";
    }
    for (int l = 1; l <= d.node_count; ++l)
        out << "  n" << l << " [label=\"" << l << "\"];\n";
    for (const auto& a : d.arrows)
        out << "  n" << a.from << " -> n" << a.to << ";\n";
    out << "}\n";
    return out.str();
}

std::string diagram_to_json(const TransitionDiagram& d) {
    nlohmann::ordered_json j;
    j["nodes"] = d.node_count;
    j["arrows"] = nlohmann::ordered_json::array();
    for (const auto& a : d.arrows)
        j["arrows"].push_back({{"from", a.from}, {"to", a.to}, {"polygon", a.poly}, {"type", a.type}});
    return j.dump(2);
}

}  // namespace flatsurf
