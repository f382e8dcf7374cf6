// Command-line front end: builds surfaces, runs the cylinder/diagram/word
// analyses, flows trajectories, applies the derivation rules and renders SVG.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "flatsurf/automorphisms.hpp"
#include "flatsurf/cylinders.hpp"
#include "flatsurf/derivation.hpp"
#include "flatsurf/diagrams.hpp"
#include "flatsurf/flow.hpp"
#include "flatsurf/svg.hpp"
#include "flatsurf/verify.hpp"

using namespace flatsurf;

namespace {

struct SurfaceSpec {
    std::string family = "regular";
    int n = 8;
    int m = 3;
    bool doubled = false;

    Surface build() const {
        if (family == "regular") return build_regular_surface(n, doubled);
        if (family == "bm") return build_bouw_moller(m, n);
        throw CLI::ValidationError("--family must be regular or bm");
    }
};

void add_surface_options(CLI::App* cmd, SurfaceSpec& spec) {
    cmd->add_option("--family", spec.family, "surface family: regular|bm")
        ->check(CLI::IsMember({"regular", "bm"}));
    cmd->add_option("--n", spec.n, "polygon parameter n");
    cmd->add_option("--m", spec.m, "Bouw-Moller parameter m");
    cmd->add_flag("--double", spec.doubled, "double regular polygon surface");
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

bool parse_start(const std::string& text, SurfacePoint& p) {
    // x,y@poly
    double x, y;
    int poly;
    if (std::sscanf(text.c_str(), "%lf,%lf@%d", &x, &y, &poly) != 3) return false;
    p = {poly, {x, y}};
    return true;
}

std::string labels_line(const std::vector<int>& labels) {
    std::ostringstream out;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) out << ' ';
        out << labels[i];
    }
    out << '\n';
    return out.str();
}

std::string words_table(const Surface& s, const std::vector<Word3>& words) {
    std::ostringstream out;
    auto wstr = [](const Word3& w) {
        std::ostringstream o;
        o << w.labels[0] << w.labels[1] << w.labels[2];
        return o.str();
    };
    out << "kept (00)   | kept (11)   | removed (01),(10)\n";
    out << "------------+-------------+------------------\n";
    int max_mid = s.label_count;
    for (int mid = 1; mid <= max_mid; ++mid) {
        std::string c00, c11, crm;
        for (const auto& w : words) {
            if (w.labels[1] != mid) continue;
            std::string cell = wstr(w) + " " + w.case_name();
            if (!w.kept) {
                crm += (crm.empty() ? "" : ", ") + wstr(w);
            } else if (w.types[0] == 0 && w.types[1] == 0 && !w.middle_horizontal) {
                c00 += (c00.empty() ? "" : ", ") + wstr(w);
            } else {
                c11 += (c11.empty() ? "" : ", ") + wstr(w);
            }
        }
        if (c00.empty() && c11.empty() && crm.empty()) continue;
        out << c00;
        for (size_t i = c00.size(); i < 12; ++i) out << ' ';
        out << "| " << c11;
        for (size_t i = c11.size(); i < 12; ++i) out << ' ';
        out << "| " << crm << "\n";
    }
    return out.str();
}

std::string words_json(const std::vector<Word3>& words) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& w : words) {
        j.push_back({{"word", {w.labels[0], w.labels[1], w.labels[2]}},
                     {"case", w.case_name()},
                     {"kept", w.kept},
                     {"middle_horizontal", w.middle_horizontal},
                     {"sandwiched", w.sandwiched()}});
    }
    return j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"perfect translation surfaces: cutting sequences and the flip-shear"};
    app.require_subcommand(1);

    double eps_override = 0.0;
    app.add_option("--eps", eps_override, "override geometric tolerance (testing only)");

    // surface build|dump
    auto* surface_cmd = app.add_subcommand("surface", "build or dump a surface");
    SurfaceSpec surf_spec;
    std::string surf_action = "build";
    std::string surf_out;
    surface_cmd->add_option("action", surf_action, "build|dump")
        ->check(CLI::IsMember({"build", "dump"}));
    add_surface_options(surface_cmd, surf_spec);
    surface_cmd->add_option("--out", surf_out, "output path (default stdout)");

    // render
    auto* render_cmd = app.add_subcommand("render", "render the surface as SVG");
    SurfaceSpec render_spec;
    std::string render_out;
    bool render_cyl = false, render_sheared = false;
    add_surface_options(render_cmd, render_spec);
    render_cmd->add_flag("--cylinders", render_cyl, "shade the cylinder decomposition");
    render_cmd->add_flag("--sheared", render_sheared, "overlay flip-shear images of gluing edges");
    render_cmd->add_option("--out", render_out, "output path (default stdout)");

    // cylinders
    auto* cyl_cmd = app.add_subcommand("cylinders", "cylinder decomposition report");
    SurfaceSpec cyl_spec;
    std::string cyl_out, cyl_svg;
    add_surface_options(cyl_cmd, cyl_spec);
    cyl_cmd->add_option("--out", cyl_out, "JSON report path (default stdout)");
    cyl_cmd->add_option("--svg", cyl_svg, "also write a shaded SVG here");

    // flow
    auto* flow_cmd = app.add_subcommand("flow", "trace a geodesic and print its cutting sequence");
    SurfaceSpec flow_spec;
    double flow_theta = 0.1;
    std::string flow_start, flow_out, flow_svg;
    int flow_n = 20;
    add_surface_options(flow_cmd, flow_spec);
    flow_cmd->add_option("--theta", flow_theta, "direction angle in radians")->required();
    flow_cmd->add_option("--start", flow_start, "start point as x,y@poly")->required();
    flow_cmd->add_option("-n,--window", flow_n, "number of crossings");
    flow_cmd->add_option("--out", flow_out, "output path (default stdout)");
    flow_cmd->add_option("--svg", flow_svg, "write an SVG overlay here");

    // derive
    auto* derive_cmd = app.add_subcommand("derive", "derive a cutting sequence");
    SurfaceSpec derive_spec;
    std::string derive_mode = "combinatorial";
    double derive_theta = 0.1;
    std::string derive_start, derive_out;
    int derive_n = 40;
    add_surface_options(derive_cmd, derive_spec);
    derive_cmd->add_option("--mode", derive_mode, "combinatorial|sandwich|geometric")
        ->check(CLI::IsMember({"combinatorial", "sandwich", "geometric"}));
    derive_cmd->add_option("--theta", derive_theta, "direction angle in radians")->required();
    derive_cmd->add_option("--start", derive_start, "start point as x,y@poly")->required();
    derive_cmd->add_option("--window", derive_n, "window length in crossings");
    derive_cmd->add_option("--out", derive_out, "output path (default stdout)");

    // words
    auto* words_cmd = app.add_subcommand("words", "three-letter transition table");
    SurfaceSpec words_spec;
    std::string words_out;
    bool words_as_json = false;
    add_surface_options(words_cmd, words_spec);
    words_cmd->add_flag("--json", words_as_json, "emit JSON instead of the text table");
    words_cmd->add_option("--out", words_out, "output path (default stdout)");

    // diagram
    auto* diag_cmd = app.add_subcommand("diagram", "transition diagram");
    SurfaceSpec diag_spec;
    std::string diag_out;
    bool diag_dot = false, diag_json = false;
    add_surface_options(diag_cmd, diag_spec);
    diag_cmd->add_flag("--dot", diag_dot, "emit DOT with row rank hints");
    diag_cmd->add_flag("--json", diag_json, "emit the JSON arrow list");
    diag_cmd->add_option("--out", diag_out, "output path (default stdout)");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the verification suite for a surface");
    SurfaceSpec verify_spec;
    int verify_trials = 200, verify_window = 100;
    std::uint64_t verify_seed = 1;
    add_surface_options(verify_cmd, verify_spec);
    verify_cmd->add_option("--trials", verify_trials, "random trajectories per check");
    verify_cmd->add_option("--window", verify_window, "crossings per trajectory");
    verify_cmd->add_option("--seed", verify_seed, "RNG seed");

    CLI11_PARSE(app, argc, argv);
    if (eps_override > 0.0) set_geom_epsilon(eps_override);

    try {
        if (surface_cmd->parsed()) {
            Surface s = surf_spec.build();
            ValidationReport report = validate_special(s);
            if (!report.ok()) {
                std::cerr << report.summary();
                return 1;
            }
            if (surf_action == "dump") {
                write_output(surf_out, surface_to_json(s) + "\n");
            } else {
                std::ostringstream out;
                out << family_name(s.family) << " surface: " << s.polygons.size()
                    << " polygons, " << s.label_count << " labels\n"
                    << report.summary();
                write_output(surf_out, out.str());
            }
        } else if (render_cmd->parsed()) {
            Surface s = render_spec.build();
            if (!validate_special(s).ok()) throw Error("surface failed validation");
            RenderOptions opt;
            opt.shade_cylinders = render_cyl;
            opt.sheared_edges = render_sheared;
            write_output(render_out, render_surface_svg(s, opt));
        } else if (cyl_cmd->parsed()) {
            Surface s = cyl_spec.build();
            if (!validate_special(s).ok()) throw Error("surface failed validation");
            std::vector<Cylinder> cyls = decompose(s);
            PerfectnessReport perf = perfectness(s, cyls);
            nlohmann::ordered_json j;
            j["theta_s"] = theta_s(s, cyls);
            j["is_perfect"] = perf.is_perfect;
            j["common_modulus"] = perf.common_modulus;
            j["cylinders"] = nlohmann::ordered_json::array();
            for (const auto& c : cyls) {
                j["cylinders"].push_back(
                    {{"width", c.width},
                     {"height", c.height},
                     {"modulus", c.modulus},
                     {"kind", c.kind == CylinderKind::Typical ? "typical" : "exceptional"},
                     {"gluing_labels", c.gluing_labels}});
            }
            write_output(cyl_out, j.dump(2) + "\n");
            if (!cyl_svg.empty()) {
                RenderOptions opt;
                opt.shade_cylinders = true;
                write_output(cyl_svg, render_surface_svg(s, opt));
            }
        } else if (flow_cmd->parsed()) {
            Surface s = flow_spec.build();
            if (!validate_special(s).ok()) throw Error("surface failed validation");
            Trajectory t;
            if (!parse_start(flow_start, t.start))
                throw Error("--start must be x,y@poly");
            t.theta = flow_theta;
            FlowResult r = flow(s, t, flow_n);
            std::ostringstream out;
            out << labels_line(r.seq.labels);
            if (r.vertex_hit) out << "vertex hit after " << r.seq.window_len() << " crossings\n";
            write_output(flow_out, out.str());
            if (!flow_svg.empty()) {
                RenderOptions opt;
                opt.trajectory = &r.seq;
                opt.trajectory_start = t.start;
                opt.trajectory_theta = t.theta;
                write_output(flow_svg, render_surface_svg(s, opt));
            }
            if (r.vertex_hit) return 2;
        } else if (derive_cmd->parsed()) {
            Surface s = derive_spec.build();
            if (!validate_special(s).ok()) throw Error("surface failed validation");
            Trajectory t;
            if (!parse_start(derive_start, t.start))
                throw Error("--start must be x,y@poly");
            t.theta = derive_theta;
            FlowResult r = flow(s, t, derive_n);
            if (r.vertex_hit) throw Error("trajectory hit a vertex");
            std::ostringstream out;
            out << "original: " << labels_line(r.seq.labels);
            if (derive_mode == "combinatorial") {
                out << "derived:  " << labels_line(derive_combinatorial(s, r.seq).labels);
            } else if (derive_mode == "sandwich") {
                out << "derived:  " << labels_line(sandwich_derive(s, r.seq).labels);
            } else {
                AffineMaps maps(s);
                Trajectory img;
                img.start = maps.flip_shear(t.start);
                img.theta = flip_shear_direction(t.theta, maps.common_modulus());
                FlowResult g = flow(s, img, derive_n);
                out << "derived:  " << labels_line(g.seq.labels);
            }
            write_output(derive_out, out.str());
        } else if (words_cmd->parsed()) {
            Surface s = words_spec.build();
            if (!validate_special(s).ok()) throw Error("surface failed validation");
            std::vector<Word3> words = enumerate_words(s);
            write_output(words_out, words_as_json ? words_json(words) + "\n"
                                                  : words_table(s, words));
        } else if (diag_cmd->parsed()) {
            Surface s = diag_spec.build();
            if (!validate_special(s).ok()) throw Error("surface failed validation");
            TransitionDiagram d = transition_diagram(s);
            if (diag_dot) {
                write_output(diag_out, diagram_to_dot(d));
            } else if (diag_json) {
                write_output(diag_out, diagram_to_json(d) + "\n");
            } else {
                std::ostringstream out;
                for (int l = 1; l <= d.node_count; ++l) {
                    out << l << " ->";
                    for (int to : d.successors(l)) out << " " << to;
                    out << "\n";
                }
                write_output(diag_out, out.str());
            }
        } else if (verify_cmd->parsed()) {
            Surface s = verify_spec.build();
            VerifyOptions opt;
            opt.trials = verify_trials;
            opt.window = verify_window;
            opt.seed = verify_seed;
            std::vector<CheckResult> results = run_verify(s, opt);
            bool all = true;
            for (const auto& c : results) {
                std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
                if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
                char buf[32];
                std::snprintf(buf, sizeof(buf), "  %.3fs", c.seconds);
                std::cout << buf << "\n";
                all = all && c.pass;
            }
            return all ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
