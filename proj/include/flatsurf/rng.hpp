#pragma once

#include <cstdint>
#include <random>

#include "flatsurf/surface.hpp"

namespace flatsurf {

// Seeded sampling for reproducible trials. mt19937_64 is fully specified by
// the standard and doubles are drawn from the top 53 bits, so identical
// seeds give identical samples on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    int uniform_int(int n) { return static_cast<int>(gen_() % static_cast<std::uint64_t>(n)); }

    // Uniform point over the polygon interiors (area-weighted across
    // polygons, rejection sampled, kept clear of the boundary).
    SurfacePoint surface_point(const Surface& s, double min_boundary_dist = 1e-6);

  private:
    std::mt19937_64 gen_;
};

}  // namespace flatsurf
