#pragma once

#include <string>
#include <vector>

#include "flatsurf/automorphisms.hpp"
#include "flatsurf/derivation.hpp"
#include "flatsurf/flow.hpp"
#include "flatsurf/rng.hpp"

namespace flatsurf {

// One trial of the main-theorem check: flow a window, apply the combinatorial
// derivation rule, and compare against the cutting sequence of the trajectory
// mapped through the flip-shear. The derived window is a contiguous block of
// the image flow; the image may start with up to two letters whose preimage
// marks fall outside the window, so a small alignment offset is allowed.
struct OracleTrialResult {
    bool ok = false;
    bool vertex_hit = false;  // either flow met a vertex; trial is a no-contest
    int offset = -1;
    int derived_len = 0;
    std::string detail;
};

OracleTrialResult oracle_trial(const Surface& s, const AffineMaps& maps,
                               const DerivationContext& ctx, const Trajectory& t,
                               int window);

// Runs `trials` seeded random trajectories (resampling deterministically on
// vertex hits) and fails on the first mismatch.
struct OracleRunResult {
    bool ok = true;
    int trials_run = 0;
    int resamples = 0;
    std::string detail;
};

OracleRunResult run_oracle_trials(const Surface& s, int trials, int window,
                                  std::uint64_t seed,
                                  bool also_check_sandwich = false);

// Samples a trajectory in the admissible sector, away from its boundary.
Trajectory sample_trajectory(const Surface& s, double ts, Rng& rng);

// Full per-surface verification suite used by the verify subcommand.
struct CheckResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

struct VerifyOptions {
    int trials = 200;
    int window = 100;
    std::uint64_t seed = 1;
    int involution_points = 1000;
};

std::vector<CheckResult> run_verify(const Surface& s, const VerifyOptions& opt);

}  // namespace flatsurf
