#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace nsurf;
using testsupport::load_fixture;

TEST_CASE("permutations") {
    Perm4 p(1, 0, 2, 3);
    CHECK(p.sign() == -1);
    CHECK(p.of(p).is_identity());
    CHECK(p.inverse() == p);
    Perm4 cyc(1, 2, 3, 0);
    CHECK(cyc.sign() == -1);
    CHECK(cyc.of(cyc).sign() == 1);
    CHECK(cyc.inverse().of(cyc).is_identity());
    CHECK(cyc.str() == "1230");
    Perm4 q;
    CHECK(Perm4::from_string("3012", q));
    CHECK(q == cyc.inverse());
    CHECK_FALSE(Perm4::from_string("3312", q));
    CHECK_FALSE(Perm4::from_string("012", q));
    CHECK_FALSE(Perm4::from_string("0124", q));
}

TEST_CASE("parse and round-trip") {
    for (const auto& name : testsupport::all_fixtures()) {
        CAPTURE(name);
        Triangulation tri = load_fixture(name);
        Triangulation again = Triangulation::parse(tri.to_text());
        CHECK(tri == again);
        CHECK(tri.digest() == again.digest());
    }
}

TEST_CASE("single-tetrahedron file with valid pairings parses") {
    Triangulation tri = load_fixture("t1_a.tri");
    CHECK(tri.tets() == 1);
    // Face 0 glued to face 1 of the same tetrahedron by (01): check the
    // involution by hand on the stored table.
    const Gluing& g = tri.gluing(0, 0);
    CHECK(g.tet == 0);
    CHECK(g.face == 1);
    const Gluing& back = tri.gluing(0, 1);
    CHECK(back.perm.of(g.perm).is_identity());
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(Triangulation::parse("tets 1\n0: -(....) 0(1023) 0(0132) 0(0132)\n"),
                    ParseError);  // unglued face
    CHECK_THROWS_WITH_AS(
        Triangulation::parse("tets 1\n0: 0(0123) 0(0123) 0(0132) 0(0132)\n"),
        doctest::Contains("glued to itself by the identity"), ValidationError);
    // Mismatched back-gluing.
    CHECK_THROWS_WITH_AS(
        Triangulation::parse("tets 2\n0: 1(0123) 1(0123) 1(0123) 1(0123)\n"
                             "1: 0(0123) 0(0123) 0(0123) 0(1032)\n"),
        doctest::Contains("involution"), ValidationError);
    // Out-of-range tetrahedron index.
    CHECK_THROWS_AS(Triangulation::parse("tets 1\n0: 2(1023) 0(1023) 0(0132) 0(0132)\n"),
                    ParseError);
    // Bad permutation string.
    CHECK_THROWS_AS(Triangulation::parse("tets 1\n0: 0(1022) 0(1023) 0(0132) 0(0132)\n"),
                    ParseError);
    // Missing header.
    CHECK_THROWS_AS(Triangulation::parse("0: 0(1023) 0(1023) 0(0132) 0(0132)\n"),
                    ParseError);
    // Missing tetrahedron line.
    CHECK_THROWS_AS(Triangulation::parse("tets 2\n0: 1(0123) 1(0123) 1(0123) 1(0123)\n"),
                    ParseError);

    try {
        Triangulation::parse("tets 1\n0: 0(1023) 0(1023) 0(0132)\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() > 1);
    }
}

TEST_CASE("skeleton orbits of the one-tetrahedron fixture") {
    // Hand-traced from the gluing table: face 0 <-> face 1 by (01) sends
    // edges {12}->{02}, {13}->{03}, {23}->{23}; face 2 <-> face 3 by (23)
    // sends {01}->{01}, {03}->{02}, {13}->{12}.  Orbits: {01}, {23} and
    // {02,03,12,13}; vertices fall into {0,1} and {2,3}.
    Triangulation tri = load_fixture("t1_a.tri");
    Skeleton sk = compute_skeleton(tri);
    CHECK(sk.vertex_count == 2);
    CHECK(sk.edge_count == 3);
    CHECK(sk.face_count == 2);

    int e01 = edge_index(0, 1), e23 = edge_index(2, 3);
    CHECK(sk.edge_orbit[0][e01] != sk.edge_orbit[0][e23]);
    int mid = sk.edge_orbit[0][edge_index(0, 2)];
    CHECK(sk.edge_orbit[0][edge_index(0, 3)] == mid);
    CHECK(sk.edge_orbit[0][edge_index(1, 2)] == mid);
    CHECK(sk.edge_orbit[0][edge_index(1, 3)] == mid);

    CHECK(sk.vertex_orbit[0][0] == sk.vertex_orbit[0][1]);
    CHECK(sk.vertex_orbit[0][2] == sk.vertex_orbit[0][3]);
    CHECK(sk.vertex_orbit[0][0] != sk.vertex_orbit[0][2]);

    // Canonical labels: smallest member first.
    CHECK(sk.edge_orbit[0][e01] == 0);
    CHECK(mid == 1);
    CHECK(sk.edge_orbit[0][e23] == 2);
}

TEST_CASE("skeleton of the doubled tetrahedron") {
    Triangulation tri = load_fixture("t2_double.tri");
    Skeleton sk = compute_skeleton(tri);
    CHECK(sk.vertex_count == 4);
    CHECK(sk.edge_count == 6);
    // Identity gluings identify cell-for-cell across the two tetrahedra.
    for (int v = 0; v < 4; ++v) CHECK(sk.vertex_orbit[0][v] == sk.vertex_orbit[1][v]);
    for (int e = 0; e < 6; ++e) CHECK(sk.edge_orbit[0][e] == sk.edge_orbit[1][e]);
}

TEST_CASE("euler identity on every fixture") {
    for (const auto& name : testsupport::all_fixtures()) {
        CAPTURE(name);
        Triangulation tri = load_fixture(name);
        Skeleton sk = compute_skeleton(tri);
        CHECK(sk.vertex_count - sk.edge_count + sk.face_count - tri.tets() == 0);
        if (tri.tets() == 1) {
            CHECK(sk.edge_count <= 6);
            CHECK(sk.vertex_count <= 4);
        }
    }
}

TEST_CASE("skeleton is deterministic") {
    for (const auto& name : testsupport::small_fixtures()) {
        Triangulation tri = load_fixture(name);
        Skeleton a = compute_skeleton(tri);
        Skeleton b = compute_skeleton(load_fixture(name));
        CHECK(a.edge_orbit == b.edge_orbit);
        CHECK(a.vertex_orbit == b.vertex_orbit);
        CHECK(a.edge_rep == b.edge_rep);
    }
}

TEST_CASE("orientability") {
    // The double of a tetrahedron: orienting the two tetrahedra oppositely
    // makes all four identity gluings orientation-reversing.
    CHECK(is_orientable(load_fixture("t2_double.tri")));

    // An even self-pairing permutation forces equal orientations somewhere
    // and the assignment cannot close up.
    Triangulation nonor = load_fixture("nonorientable_t2.tri");
    CHECK_FALSE(is_orientable(nonor));
    CHECK_FALSE(oracle::triangulation_orientable(nonor));

    // Exhaustive assignment search agrees everywhere.
    for (const auto& name : testsupport::all_fixtures()) {
        CAPTURE(name);
        Triangulation tri = load_fixture(name);
        CHECK(is_orientable(tri) == oracle::triangulation_orientable(tri));
    }
}
