#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "tetsym/heron.hpp"
#include "tetsym/rng.hpp"
#include "tetsym/tetra.hpp"

using namespace tetsym;

namespace {

Tetrahedron unit_corner() {
    return Tetrahedron({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1});
}

// Regular tetrahedron with edge sqrt(2), inscribed in the unit cube.
Tetrahedron cube_regular() {
    return Tetrahedron({0, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1});
}

bool same_point(Vec3 a, Vec3 b, double tol = 0.0) { return norm(a - b) <= tol; }

} // namespace

TEST_CASE("constructor repairs orientation by swapping v2 and v3") {
    // (0,0,0),(1,1,0),(1,0,1),(0,1,1) has vertex determinant -2.
    Tetrahedron t = cube_regular();
    CHECK(volume_from_vertices(t) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(same_point(t.v(1), {1, 1, 0}));
    CHECK(same_point(t.v(2), {0, 1, 1})); // swapped in
    CHECK(same_point(t.v(3), {1, 0, 1}));
}

TEST_CASE("constructor rejects flat input; allow_degenerate admits it") {
    CHECK_THROWS_AS(Tetrahedron({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}),
                    DegenerateTetrahedron);
    Tetrahedron flat = Tetrahedron::allow_degenerate({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0});
    CHECK(std::abs(volume_from_vertices(flat)) <= 1e-14);
    CHECK(is_degenerate(flat));
}

TEST_CASE("facets follow the opposite-vertex convention") {
    Tetrahedron t = unit_corner();
    auto f = facets(t);
    CHECK(f[0].index == 0);
    CHECK(same_point(f[0].p[0], {1, 0, 0}));
    CHECK(same_point(f[0].p[1], {0, 1, 0}));
    CHECK(same_point(f[0].p[2], {0, 0, 1}));

    // every vertex appears in exactly three facets
    for (int i = 0; i < 4; ++i) {
        int count = 0;
        for (const auto& fc : f)
            for (const auto& p : fc.p)
                if (same_point(p, t.v(i))) ++count;
        CHECK(count == 3);
    }
}

TEST_CASE("facet_data pins on the unit right-corner tetrahedron") {
    FacetData d = facet_data(unit_corner());
    CHECK(same_point(d[3].normal, {0, 0, -1}, 1e-15));
    CHECK(d[3].area == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d[1].area == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d[2].area == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d[0].area == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));

    Vec3 s{};
    for (int i = 0; i < 4; ++i) s = s + d[i].area * d[i].normal;
    CHECK(norm(s) <= 1e-14);
}

TEST_CASE("facet_data areas match the Heron oracle on the cube regular tetrahedron") {
    FacetData d = facet_data(cube_regular());
    double r2 = std::sqrt(2.0);
    double oracle = heron_triangle_area(r2, r2, r2); // edge sqrt(2) equilateral
    CHECK(oracle == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
    for (int i = 0; i < 4; ++i)
        CHECK(d[i].area == doctest::Approx(oracle).epsilon(1e-13));
}

TEST_CASE("facet normals point outward") {
    SampleRng rng(42);
    for (int k = 0; k < 200; ++k) {
        Tetrahedron t(rng.in_box(10.0), rng.in_box(10.0), rng.in_box(10.0), rng.in_box(10.0));
        FacetData d = facet_data(t);
        auto fs = facets(t);
        for (int i = 0; i < 4; ++i) {
            Vec3 centroid = (fs[i].p[0] + fs[i].p[1] + fs[i].p[2]) / 3.0;
            CHECK(dot(d[i].normal, t.v(i) - centroid) < 0.0);
        }
    }
}

TEST_CASE("closure residual is tiny for all generated tetrahedra") {
    SampleRng rng(43);
    for (int k = 0; k < 1000; ++k) {
        Tetrahedron t(rng.in_box(10.0), rng.in_box(10.0), rng.in_box(10.0), rng.in_box(10.0));
        FacetData d = facet_data(t);
        Vec3 s{};
        double total = 0.0;
        for (int i = 0; i < 4; ++i) {
            s = s + d[i].area * d[i].normal;
            total += d[i].area;
        }
        CHECK(norm(s) <= 1e-12 * total);
    }
}

TEST_CASE("volume pins") {
    CHECK(volume_from_vertices(unit_corner()) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

    double s = 1.0 / std::sqrt(2.0); // scale cube regular (edge sqrt 2) to unit edge
    Tetrahedron unit_regular({0, 0, 0}, {s, s, 0}, {s, 0, s}, {0, s, s});
    CHECK(volume_from_vertices(unit_regular) ==
          doctest::Approx(std::sqrt(2.0) / 12.0).epsilon(1e-14));
}

TEST_CASE("edge length pins and scaling") {
    EdgeLengths l = edge_lengths(unit_corner());
    CHECK(l.e01 == 1.0);
    CHECK(l.e02 == 1.0);
    CHECK(l.e03 == 1.0);
    CHECK(l.e12 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(l.e13 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(l.e23 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    SampleRng rng(44);
    for (int k = 0; k < 100; ++k) {
        Tetrahedron t(rng.in_box(5.0), rng.in_box(5.0), rng.in_box(5.0), rng.in_box(5.0));
        double lam = rng.uniform(0.1, 3.0);
        Tetrahedron ts(lam * t.v(0), lam * t.v(1), lam * t.v(2), lam * t.v(3));
        EdgeLengths a = edge_lengths(t);
        EdgeLengths b = edge_lengths(ts);
        for (int e = 0; e < 6; ++e)
            CHECK(b[e] == doctest::Approx(lam * a[e]).epsilon(1e-12));
        CHECK(volume_from_vertices(ts) ==
              doctest::Approx(lam * lam * lam * volume_from_vertices(t)).epsilon(1e-12));
    }
}

TEST_CASE("Cayley-Menger pins") {
    EdgeLengths regular(1, 1, 1, 1, 1, 1);
    CHECK(cayley_menger_volume_sq(regular) == doctest::Approx(1.0 / 72.0).epsilon(1e-13));

    double r2 = std::sqrt(2.0);
    EdgeLengths corner(1, 1, 1, r2, r2, r2);
    CHECK(cayley_menger_volume_sq(corner) == doctest::Approx(1.0 / 36.0).epsilon(1e-13));

    EdgeLengths doubled(2, 2, 2, 2, 2, 2);
    CHECK(cayley_menger_volume_sq(doubled) == doctest::Approx(8.0 / 9.0).epsilon(1e-13));
}

TEST_CASE("vertex determinant volume agrees with Cayley-Menger") {
    SampleRng rng(45);
    for (int k = 0; k < 2000; ++k) {
        Tetrahedron t(rng.in_box(10.0), rng.in_box(10.0), rng.in_box(10.0), rng.in_box(10.0));
        double v = volume_from_vertices(t);
        double cm = cayley_menger_volume_sq(edge_lengths(t));
        CHECK(rel_residual_vol_sq(v * v, cm, longest_edge(t)) <= 1e-9);
    }
}

TEST_CASE("triangles_congruent") {
    CHECK(triangles_congruent({3, 4, 5}, {5, 3, 4}, 1e-9));
    CHECK(!triangles_congruent({3, 4, 5}, {3, 4, 5.001}, 1e-9));
    CHECK(triangles_congruent({1, 1, 1}, {1, 1, 1}, 0.0));
}

TEST_CASE("classification verdicts") {
    Tetrahedron reg = cube_regular();
    CHECK(classify(reg).verdict == Verdict::Regular);
    CHECK(classify(reg).passing.size() == 3); // every pairing passes

    Classification rev = classify(build_reversible(ReversibleParams(3, 4, 4, 3)));
    CHECK(rev.verdict == Verdict::Reversible);
    REQUIRE(rev.passing.size() == 1);
    CHECK(rev.passing[0] == 0); // pairing {(f0,f1),(f2,f3)}

    CHECK(classify(unit_corner()).verdict == Verdict::Generic);

    // (0,0,0),(1,0,0),(0,1,0),(0,0,2): facets f1 and f2 are congruent but no
    // full pairing matches.
    Tetrahedron g({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 2});
    Classification gc = classify(g);
    CHECK(gc.verdict == Verdict::Generic);
    CHECK(gc.passing.empty());

    Classification iso = classify(build_reversible(ReversibleParams(3, 3.5, 4, 4)));
    CHECK(iso.verdict == Verdict::Isosceles);
    CHECK(iso.passing.size() == 3);

    CHECK_THROWS_AS(
        classify(Tetrahedron::allow_degenerate({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0})),
        DegenerateTetrahedron);
}

TEST_CASE("classification is translation and rotation invariant") {
    SampleRng rng(46);
    for (int k = 0; k < 50; ++k) {
        Tetrahedron t = build_reversible(ReversibleParams(3, 4, 4, 3));
        Vec3 shift = rng.in_box(100.0);
        CHECK(classify(t.translated(shift)).verdict == classify(t).verdict);

        Mat3 r = rng.rotation();
        Tetrahedron tr(r * t.v(0), r * t.v(1), r * t.v(2), r * t.v(3));
        CHECK(classify(tr).verdict == classify(t).verdict);
        CHECK(volume_from_vertices(tr) ==
              doctest::Approx(volume_from_vertices(t)).epsilon(1e-9));
    }
}

TEST_CASE("classify_edges agrees with classify on coordinates") {
    SampleRng rng(47);
    for (int k = 0; k < 200; ++k) {
        Tetrahedron t(rng.in_box(10.0), rng.in_box(10.0), rng.in_box(10.0), rng.in_box(10.0));
        CHECK(classify_edges(edge_lengths(t)).verdict == classify(t).verdict);
    }
    CHECK(classify_edges(EdgeLengths(1, 1, 1, 1, 1, 1)).verdict == Verdict::Regular);
}

TEST_CASE("facet perimeter pins") {
    auto reg = facet_perimeters(EdgeLengths(1, 1, 1, 1, 1, 1));
    for (double p : reg) CHECK(p == 3.0);

    auto corner = facet_perimeters(unit_corner());
    CHECK(corner[3] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-15));

    // reversible: two facets with perimeter a+b+c, two with a+b+d
    auto rev = facet_perimeters(build_reversible(ReversibleParams(3, 4, 4, 3)));
    std::sort(rev.begin(), rev.end());
    CHECK(rev[0] == doctest::Approx(3 + 4 + 3).epsilon(1e-14));
    CHECK(rev[1] == doctest::Approx(3 + 4 + 3).epsilon(1e-14));
    CHECK(rev[2] == doctest::Approx(3 + 4 + 4).epsilon(1e-14));
    CHECK(rev[3] == doctest::Approx(3 + 4 + 4).epsilon(1e-14));
}

TEST_CASE("EdgeLengths validates input") {
    CHECK_THROWS_AS(EdgeLengths(1, 1, 1, 1, 1, -1), NonPositiveEdge);
    CHECK_THROWS_AS(EdgeLengths(1, 1, 1, 1, 1, 10), InvalidTriangle);
    EdgeLengths degenerate(1, 1, 1, 1, 1, 2); // weak inequality admits equality
    CHECK(degenerate.e23 == 2.0);
}
