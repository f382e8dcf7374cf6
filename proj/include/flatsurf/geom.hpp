#pragma once

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace flatsurf {

inline constexpr double kPi = std::numbers::pi;

// Default tolerance for geometric predicates (parallelism, symmetry,
// levelness). Surfaces are built from closed-form trig, so anything
// beyond accumulated rounding indicates a real defect.
double geom_epsilon();
void set_geom_epsilon(double eps);

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline bool almost_equal(Vec2 a, Vec2 b, double eps) { return dist(a, b) <= eps; }
inline bool almost_equal(double a, double b, double eps) { return std::abs(a - b) <= eps; }

// Angle of a vector in [0, 2*pi).
inline double angle_of(Vec2 v) {
    double a = std::atan2(v.y, v.x);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}

inline Vec2 unit_dir(double theta) { return {std::cos(theta), std::sin(theta)}; }

// x mod m mapped to [0, m).
inline double positive_mod(double x, double m) {
    double r = std::fmod(x, m);
    if (r < 0.0) r += m;
    if (r >= m) r -= m;  // fmod can land exactly on m after the correction
    return r;
}

inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double len2 = dot(ab, ab);
    if (len2 == 0.0) return dist(p, a);
    double t = dot(p - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(p, a + ab * t);
}

// Proper intersection test for open segments, used by the sheared-edge checks.
bool segments_intersect(Vec2 a0, Vec2 a1, Vec2 b0, Vec2 b1);

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidParams : Error { using Error::Error; };
struct OddSingle : Error { using Error::Error; };
struct NotLevel : Error { using Error::Error; };
struct NotPerfect : Error { using Error::Error; };
struct InadmissiblePair : Error { using Error::Error; };
struct Inadmissible : Error { using Error::Error; };
struct WrongFamily : Error { using Error::Error; };
struct InvalidPoint : Error { using Error::Error; };

}  // namespace flatsurf
