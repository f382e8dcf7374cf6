#include <cmath>

#include "doctest.h"
#include "flatsurf/surface.hpp"

using namespace flatsurf;

namespace {

Surface square_torus() {
    Polygon sq;
    sq.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    sq.dir_index = {-1, -1, -1, -1};
    sq.edge_labels = {-1, -1, -1, -1};
    return make_surface({sq}, {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}});
}

}  // namespace

TEST_CASE("semi-regular polygon edge vectors") {
    // P_3(2,1): v0 = (2,0), v1 = (cos 60, sin 60)
    Polygon p = semi_regular_polygon(3, 2.0, 1.0);
    CHECK(p.edge_count() == 6);
    CHECK(p.edge_vector(0).x == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(p.edge_vector(0).y == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(p.edge_vector(1).x == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p.edge_vector(1).y == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));

    // closes up
    Vec2 sum{0, 0};
    for (int e = 0; e < p.edge_count(); ++e) sum += p.edge_vector(e);
    CHECK(norm(sum) < 1e-12);
}

TEST_CASE("semi-regular polygon edge counts and degeneration") {
    CHECK(semi_regular_polygon(4, 1.0, 1.0).edge_count() == 8);  // regular octagon
    CHECK(semi_regular_polygon(4, 1.0, 0.0).edge_count() == 4);  // regular square
    CHECK(semi_regular_polygon(7, 0.0, 0.5).edge_count() == 7);
    CHECK_THROWS_AS(semi_regular_polygon(2, 1.0, 1.0), InvalidParams);
    CHECK_THROWS_AS(semi_regular_polygon(4, 0.0, 0.0), InvalidParams);

    // a = b gives a regular 2n-gon: all edges the same length
    Polygon oct = semi_regular_polygon(4, 1.0, 1.0);
    for (int e = 0; e < oct.edge_count(); ++e)
        CHECK(norm(oct.edge_vector(e)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("semi-regular placement starts at the origin") {
    Polygon p = semi_regular_polygon(5, 1.0, 0.7);
    CHECK(p.vertices[0].x == doctest::Approx(0.0));
    CHECK(p.vertices[0].y == doctest::Approx(0.0));
    CHECK(std::abs(p.edge_vector(0).y) < 1e-12);  // horizontal bottom edge
    CHECK(p.min_y() == doctest::Approx(0.0));
}

TEST_CASE("regular surface: octagon has 4 labels") {
    Surface s = build_regular_surface(8, false);
    CHECK(s.polygons.size() == 1);
    CHECK(s.label_count == 4);
    CHECK(validate_special(s).ok());
}

TEST_CASE("regular surface: double pentagon has 5 labels, 10 glued edges") {
    Surface s = build_regular_surface(5, true);
    CHECK(s.polygons.size() == 2);
    CHECK(s.label_count == 5);
    int edges = 0;
    for (const auto& p : s.polygons) edges += p.edge_count();
    CHECK(edges == 10);
    CHECK(validate_special(s).ok());
}

TEST_CASE("regular surface: odd single is rejected") {
    CHECK_THROWS_AS(build_regular_surface(3, false), OddSingle);
    CHECK_THROWS_AS(build_regular_surface(7, false), OddSingle);
}

TEST_CASE("bouw-moller (3,4): square, regular octagon, square") {
    Surface s = build_bouw_moller(3, 4);
    REQUIRE(s.polygons.size() == 3);
    CHECK(s.polygons[0].edge_count() == 4);
    CHECK(s.polygons[1].edge_count() == 8);
    CHECK(s.polygons[2].edge_count() == 4);

    double r = std::sin(kPi / 3.0);
    for (int e = 0; e < 4; ++e)
        CHECK(norm(s.polygons[0].edge_vector(e)) == doctest::Approx(r).epsilon(1e-12));
    for (int e = 0; e < 8; ++e)
        CHECK(norm(s.polygons[1].edge_vector(e)) == doctest::Approx(r).epsilon(1e-12));

    CHECK(s.label_count == 8);
    CHECK(validate_special(s).ok());
}

TEST_CASE("bouw-moller (6,4): square against semi-regular octagon") {
    Surface s = build_bouw_moller(6, 4);
    REQUIRE(s.polygons.size() == 6);
    CHECK(s.polygons[0].edge_count() == 4);
    CHECK(s.polygons[1].edge_count() == 8);
    CHECK(validate_special(s).ok());

    // every square edge is glued to an opposite parallel edge of the octagon
    for (int e = 0; e < 4; ++e) {
        EdgeRef partner = s.partner({0, e});
        CHECK(partner.poly == 1);
        Vec2 a = s.polygons[0].edge_vector(e);
        Vec2 b = s.polygons[1].edge_vector(partner.edge);
        CHECK(norm(a + b) < 1e-9);
    }
}

TEST_CASE("bouw-moller (2,5) equals the double pentagon") {
    Surface bm = build_bouw_moller(2, 5);
    Surface dp = build_regular_surface(5, true);
    REQUIRE(bm.polygons.size() == 2);
    REQUIRE(dp.polygons.size() == 2);
    CHECK(bm.label_count == dp.label_count);
    for (int p = 0; p < 2; ++p) {
        REQUIRE(bm.polygons[p].edge_count() == dp.polygons[p].edge_count());
        for (int e = 0; e < bm.polygons[p].edge_count(); ++e) {
            CHECK(norm(bm.polygons[p].edge_vector(e) - dp.polygons[p].edge_vector(e)) < 1e-9);
            CHECK(bm.polygons[p].edge_labels[e] == dp.polygons[p].edge_labels[e]);
            CHECK(bm.partner({p, e}) == dp.partner({p, e}));
        }
    }
}

TEST_CASE("bouw-moller parameter validation") {
    CHECK_THROWS_AS(build_bouw_moller(1, 4), InvalidParams);
    CHECK_THROWS_AS(build_bouw_moller(3, 2), InvalidParams);
}

TEST_CASE("bouw-moller edge budget and label reuse") {
    for (int m = 2; m <= 6; ++m) {
        for (int n = 3; n <= 6; ++n) {
            Surface s = build_bouw_moller(m, n);
            CHECK(s.label_count == (m - 1) * n);
            int edges = 0;
            for (const auto& p : s.polygons) edges += p.edge_count();
            CHECK(edges == 2 * s.label_count);
            for (const auto& pair : s.label_edges)
                CHECK(s.label(pair[0]) == s.label(pair[1]));
        }
    }
}

TEST_CASE("gluing is an involution by pure translations") {
    for (Surface s : {build_regular_surface(8, false), build_regular_surface(7, true),
                      build_bouw_moller(4, 3), build_bouw_moller(5, 4)}) {
        for (int p = 0; p < static_cast<int>(s.polygons.size()); ++p) {
            for (int e = 0; e < s.polygons[p].edge_count(); ++e) {
                EdgeRef a{p, e};
                EdgeRef b = s.partner(a);
                CHECK(!(b == a));
                CHECK(s.partner(b) == a);
                // matched endpoints differ by one translation vector
                Vec2 t = s.gluing_translation(a);
                Vec2 ea = s.polygons[a.poly].edge_start(a.edge);
                Vec2 eb = s.polygons[a.poly].edge_end(a.edge);
                Vec2 fa = s.polygons[b.poly].edge_start(b.edge);
                Vec2 fb = s.polygons[b.poly].edge_end(b.edge);
                CHECK(norm(eb + t - fa) < 1e-9);
                CHECK(norm(ea + t - fb) < 1e-9);
            }
        }
    }
}

TEST_CASE("reflecting the polygons maps the gluing to itself") {
    for (Surface s : {build_regular_surface(10, false), build_regular_surface(6, true),
                      build_bouw_moller(3, 4), build_bouw_moller(6, 5)}) {
        for (int p = 0; p < static_cast<int>(s.polygons.size()); ++p) {
            for (int e = 0; e < s.polygons[p].edge_count(); ++e) {
                EdgeRef a{p, e};
                EdgeRef b = s.partner(a);
                int ra = s.polygons[p].reflected_edge(e);
                int rb = s.polygons[b.poly].reflected_edge(b.edge);
                REQUIRE(ra >= 0);
                REQUIRE(rb >= 0);
                CHECK(s.partner(EdgeRef{p, ra}) == EdgeRef{b.poly, rb});
            }
        }
    }
}

TEST_CASE("hand-built square torus passes validation") {
    Surface s = square_torus();
    CHECK(validate_special(s).ok());
}

TEST_CASE("perturbed polygon fails vertical symmetry") {
    Polygon sq;
    sq.vertices = {{0, 0}, {1, 0}, {1.1, 1}, {0, 1}};
    sq.dir_index = {-1, -1, -1, -1};
    sq.edge_labels = {-1, -1, -1, -1};
    Surface s = make_surface({sq}, {{{0, 0}, {0, 2}}, {{0, 1}, {0, 3}}});
    ValidationReport r = validate_special(s);
    CHECK(!r.polygon[0].vertically_symmetric);
    CHECK(!r.ok());
}

TEST_CASE("built-in families validate as special") {
    CHECK(validate_special(build_bouw_moller(5, 4)).ok());
    CHECK(validate_special(build_bouw_moller(8, 8)).ok());
    CHECK(validate_special(build_bouw_moller(2, 8)).ok());
    CHECK(validate_special(build_regular_surface(12, true)).ok());
    CHECK(validate_special(build_regular_surface(12, false)).ok());
    CHECK(validate_special(build_regular_surface(3, true)).ok());
}
