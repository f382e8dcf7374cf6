#include "flatsurf/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

namespace flatsurf {

namespace {

std::string label_string(const std::vector<int>& labels) {
    std::ostringstream out;
    for (size_t i = 0; i < labels.size(); ++i) {
        if (i) out << ' ';
        out << labels[i];
    }
    return out.str();
}

}  // namespace

Trajectory sample_trajectory(const Surface& s, double ts, Rng& rng) {
    const double delta = 1e-4;
    Trajectory t;
    t.start = rng.surface_point(s);
    t.theta = rng.uniform(delta, ts - delta);
    return t;
}

OracleTrialResult oracle_trial(const Surface& s, const AffineMaps& maps,
                               const DerivationContext& ctx, const Trajectory& t,
                               int window) {
    OracleTrialResult r;

    FlowResult fw = flow(s, t, window);
    if (!fw.ok()) {
        r.vertex_hit = true;
        return r;
    }
    CuttingSequence derived = ctx.derive_combinatorial(fw.seq);
    r.derived_len = derived.window_len();

    Trajectory image;
    image.start = maps.flip_shear(t.start);
    image.theta = flip_shear_direction(t.theta, maps.common_modulus());
    FlowResult gw = flow(s, image, derived.window_len() + 3);
    if (!gw.ok()) {
        r.vertex_hit = true;
        return r;
    }

    for (int offset = 0; offset <= 2; ++offset) {
        bool match = true;
        for (int i = 0; i < derived.window_len(); ++i) {
            if (gw.seq.labels[offset + i] != derived.labels[i]) {
                match = false;
                break;
            }
        }
        if (match) {
            r.ok = true;
            r.offset = offset;
            return r;
        }
    }
    std::ostringstream out;
    out << "derived:   " << label_string(derived.labels) << "\n"
        << "geometric: " << label_string(gw.seq.labels) << "\n"
        << "theta=" << t.theta << " start=(" << t.start.pos.x << "," << t.start.pos.y
        << ")@" << t.start.poly;
    r.detail = out.str();
    return r;
}

OracleRunResult run_oracle_trials(const Surface& s, int trials, int window,
                                  std::uint64_t seed, bool also_check_sandwich) {
    OracleRunResult out;
    AffineMaps maps(s);
    DerivationContext ctx(s);
    double ts = theta_s(s, maps.cylinders());
    Rng rng(seed);

    for (int trial = 0; trial < trials; ++trial) {
        OracleTrialResult r;
        int attempts = 0;
        do {
            Trajectory t = sample_trajectory(s, ts, rng);
            r = oracle_trial(s, maps, ctx, t, window);
            if (r.vertex_hit) {
                ++out.resamples;
                ++attempts;
                continue;
            }
            if (!r.ok) {
                out.ok = false;
                out.detail = "trial " + std::to_string(trial) + ":\n" + r.detail;
                return out;
            }
            if (also_check_sandwich) {
                FlowResult fw = flow(s, t, window);
                CuttingSequence a = ctx.derive_combinatorial(fw.seq);
                CuttingSequence b = sandwich_derive(s, fw.seq);
                if (a.labels != b.labels) {
                    out.ok = false;
                    out.detail = "sandwich mismatch at trial " + std::to_string(trial);
                    return out;
                }
            }
            break;
        } while (attempts < 100);
        if (attempts >= 100) {
            out.ok = false;
            out.detail = "trial " + std::to_string(trial) + ": persistent vertex hits";
            return out;
        }
        ++out.trials_run;
    }
    return out;
}

std::vector<CheckResult> run_verify(const Surface& s, const VerifyOptions& opt) {
    std::vector<CheckResult> results;
    auto timed = [&](const std::string& name, auto&& body) {
        CheckResult c;
        c.name = name;
        auto start = std::chrono::steady_clock::now();
        try {
            c.pass = body(c.detail);
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        results.push_back(c);
    };

    timed("validate-special", [&](std::string& detail) {
        ValidationReport r = validate_special(s);
        if (!r.ok()) detail = r.summary();
        return r.ok();
    });

    timed("perfectness", [&](std::string& detail) {
        PerfectnessReport r = perfectness(s);
        std::ostringstream out;
        out << "M=" << r.common_modulus;
        if (s.family == FamilyTag::RegularSingle || s.family == FamilyTag::RegularDouble) {
            double expected = 2.0 / std::tan(kPi / s.param_n);
            out << " expected=" << expected;
            detail = out.str();
            return r.is_perfect && std::abs(r.common_modulus - expected) < 1e-9;
        }
        if (s.family == FamilyTag::BouwMoller) {
            double expected = 2.0 / std::tan(kPi / s.param_n) +
                              2.0 * std::cos(kPi / s.param_m) / std::sin(kPi / s.param_n);
            out << " expected=" << expected;
            detail = out.str();
            return r.is_perfect && std::abs(r.common_modulus - expected) < 1e-9;
        }
        detail = out.str();
        return r.is_perfect;
    });

    timed("theta-s", [&](std::string& detail) {
        double ts = theta_s(s);
        std::ostringstream out;
        out << "theta_s=" << ts;
        detail = out.str();
        if (s.family == FamilyTag::RegularSingle || s.family == FamilyTag::RegularDouble)
            return std::abs(ts - kPi / s.param_n) < 1e-9;
        return ts > 0.0 && ts < kPi / 2.0;
    });

    timed("involution", [&](std::string& detail) {
        AffineMaps maps(s);
        Rng rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
        for (int i = 0; i < opt.involution_points; ++i) {
            SurfacePoint p = rng.surface_point(s);
            SurfacePoint q = maps.flip_shear(maps.flip_shear(p));
            if (q.poly != p.poly || dist(q.pos, p.pos) > 1e-9) {
                detail = "point " + std::to_string(i) + " not fixed by V*V";
                return false;
            }
        }
        return true;
    });

    timed("oracle-equivalence", [&](std::string& detail) {
        bool sandwich = s.family == FamilyTag::RegularSingle ||
                        s.family == FamilyTag::RegularDouble;
        OracleRunResult r = run_oracle_trials(s, opt.trials, opt.window, opt.seed, sandwich);
        detail = std::to_string(r.trials_run) + " trials, " +
                 std::to_string(r.resamples) + " resamples";
        if (!r.ok) detail += "\n" + r.detail;
        return r.ok;
    });

    timed("sheared-edges-cross", [&](std::string& detail) {
        AffineMaps maps(s);
        for (int l = 1; l <= s.label_count; ++l) {
            if (label_is_horizontal(s, l)) continue;
            if (!maps.sheared_edge_crosses_original(l)) {
                detail = "label " + std::to_string(l);
                return false;
            }
        }
        return true;
    });

    timed("diagram-weight", [&](std::string& detail) {
        DerivationContext ctx(s);
        size_t paths = 0;
        for (const auto& a : ctx.diagram().arrows)
            for (const auto& b : ctx.diagram().arrows)
                if (a.to == b.from) ++paths;
        bool ok = ctx.enumerate_words().size() == paths;
        if (s.family == FamilyTag::BouwMoller) {
            ShapeReport shape = check_grid_shape(ctx.diagram(), s.param_m, s.param_n);
            ok = ok && shape.pass;
            if (!shape.pass) detail = shape.failure;
        }
        return ok;
    });

    return results;
}

}  // namespace flatsurf
