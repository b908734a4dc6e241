#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace nsurf;
using testsupport::load_fixture;

TEST_CASE("zero vector gives the empty complex") {
    Triangulation tri = load_fixture("t1_a.tri");
    SurfaceComplex sc = build_surface(tri, NormalVector(1));
    CHECK(sc.discs.empty());
    CHECK(sc.component_count == 0);
    SurfaceInvariants inv = surface_invariants(tri, sc);
    CHECK(inv.component_count == 0);
    CHECK(inv.euler_total == 0);
}

TEST_CASE("vertex links are spheres, one per vertex orbit") {
    for (const auto& name : testsupport::all_fixtures()) {
        CAPTURE(name);
        Triangulation tri = load_fixture(name);
        Skeleton sk = compute_skeleton(tri);
        NormalVector ones = all_triangles_one(tri.tets());
        SurfaceComplex sc = build_surface(tri, ones);
        CHECK(static_cast<long long>(sc.discs.size()) == 4 * tri.tets());
        CHECK(sc.component_count == sk.vertex_count);

        SurfaceInvariants inv = surface_invariants(tri, sc);
        NormalVector total(tri.tets());
        for (const auto& comp : inv.components) {
            CHECK(comp.euler == 2);
            CHECK(comp.orientable);
            CHECK(comp.genus == 0);
            for (size_t j = 0; j < total.coords.size(); ++j)
                total.coords[j] += comp.coords.coords[j];
        }
        CHECK(total == ones);
    }
}

TEST_CASE("disc count equals the coordinate sum") {
    Triangulation tri = load_fixture("t2_a.tri");
    for (const auto& entry : enumerate_fundamentals(tri).entries) {
        SurfaceComplex sc = build_surface(tri, entry.vec);
        Int sum = 0;
        for (const Int& x : entry.vec.coords) sum += x;
        CHECK(Int(sc.discs.size()) == sum);
    }
}

TEST_CASE("doubled quads close into spheres") {
    Triangulation tri = load_fixture("t2_double.tri");
    for (int q = 0; q < 3; ++q) {
        NormalVector v(2);
        v.quad(0, q) = 1;
        v.quad(1, q) = 1;
        SurfaceInvariants inv = surface_invariants(tri, build_surface(tri, v));
        REQUIRE(inv.component_count == 1);
        CHECK(inv.components[0].euler == 2);
        CHECK(inv.components[0].orientable);
        CHECK(inv.components[0].weight == 4);
    }
}

TEST_CASE("orientability matches exhaustive search") {
    for (const auto& name : {"t2_a.tri", "t3_a.tri"}) {
        CAPTURE(name);
        Triangulation tri = load_fixture(name);
        for (const auto& entry : enumerate_fundamentals(tri).entries) {
            SurfaceComplex sc = build_surface(tri, entry.vec);
            std::vector<bool> reference = oracle::component_orientable(sc);
            REQUIRE(reference.size() == 1);
            CHECK(entry.orientable == reference[0]);
        }
    }
}

TEST_CASE("genus from euler characteristic") {
    // t2_a carries an orientable fundamental with chi = -2: genus 2.
    Triangulation tri = load_fixture("t2_a.tri");
    bool seen = false;
    for (const auto& entry : enumerate_fundamentals(tri).entries) {
        if (entry.euler == -2 && entry.orientable) {
            CHECK(entry.genus == 2);
            seen = true;
        }
        if (entry.euler == 0 && entry.orientable) CHECK(entry.genus == 1);
        if (entry.euler == 2) CHECK(entry.genus == 0);
    }
    CHECK(seen);
    // t3_a carries a one-sided fundamental with chi = -2: 4 crosscaps.
    for (const auto& entry : enumerate_fundamentals(load_fixture("t3_a.tri")).entries)
        if (entry.euler == -2 && !entry.orientable) CHECK(entry.genus == 4);
}

TEST_CASE("split components") {
    Triangulation tri = load_fixture("t2_double.tri");
    Skeleton sk = compute_skeleton(tri);

    NormalVector ones = all_triangles_one(2);
    std::vector<NormalVector> comps = split_components(tri, ones);
    CHECK(static_cast<int>(comps.size()) == sk.vertex_count);
    NormalVector total(2);
    for (const auto& c : comps) {
        CHECK(is_admissible(c));
        CHECK(satisfies_matching(matching_system(tri), c));
        for (size_t j = 0; j < total.coords.size(); ++j) total.coords[j] += c.coords[j];
    }
    CHECK(total == ones);

    // A connected vector splits into itself.
    NormalVector quad_sphere(2);
    quad_sphere.quad(0, 0) = 1;
    quad_sphere.quad(1, 0) = 1;
    std::vector<NormalVector> single = split_components(tri, quad_sphere);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == quad_sphere);
}

TEST_CASE("component decomposition is a haken decomposition") {
    Triangulation tri = load_fixture("t2_a.tri");
    NormalVector ones = all_triangles_one(2);
    std::vector<NormalVector> comps = split_components(tri, ones);
    for (size_t a = 0; a < comps.size(); ++a)
        for (size_t b = a + 1; b < comps.size(); ++b) CHECK(compatible(comps[a], comps[b]));
}

TEST_CASE("builder rejects bad input") {
    Triangulation tri = load_fixture("t2_double.tri");
    NormalVector two_quads(2);
    two_quads.quad(0, 0) = 1;
    two_quads.quad(0, 1) = 1;
    CHECK_THROWS_AS(build_surface(tri, two_quads), ValidationError);

    NormalVector non_solution(2);
    non_solution.quad(0, 0) = 1;
    CHECK_THROWS_AS(build_surface(tri, non_solution), ValidationError);

    NormalVector negative(2);
    negative.coords[0] = -1;
    CHECK_THROWS_AS(build_surface(tri, negative), ValidationError);

    CHECK_THROWS_AS(build_surface(tri, NormalVector(1)), ValidationError);
}
