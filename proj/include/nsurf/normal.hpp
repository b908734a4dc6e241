#pragma once

#include <string>
#include <vector>

#include "nsurf/ints.hpp"
#include "nsurf/triangulation.hpp"

namespace nsurf {

// Quad type q separates one vertex pair from the complementary pair:
//   q = 0 : 01|23,  q = 1 : 02|13,  q = 2 : 03|12.
// The pair containing vertex 0 is the "low" pair of the type.
inline constexpr int kQuadLowPartner[3] = {1, 2, 3};  // partner of vertex 0 in quad q

// The quad type having {a, b} as one of its pairs.
int quad_separating(int a, int b);

// Partner of vertex v in quad type q.
int quad_partner(int q, int v);

// True iff quad type q crosses edge e (it misses exactly its two pair edges).
bool quad_meets_edge(int q, int e);

// Per-tetrahedron layout [tri0 tri1 tri2 tri3 quad0 quad1 quad2]; tri_v counts
// parallel triangles cutting off vertex v, quad_q counts quads of type q.
struct NormalVector {
    std::vector<Int> coords;  // length 7t, all entries >= 0

    NormalVector() = default;
    explicit NormalVector(int tets) : coords(7 * static_cast<size_t>(tets)) {}

    int tets() const { return static_cast<int>(coords.size() / 7); }

    Int& tri(int tet, int v) { return coords[7 * static_cast<size_t>(tet) + v]; }
    const Int& tri(int tet, int v) const { return coords[7 * static_cast<size_t>(tet) + v]; }
    Int& quad(int tet, int q) { return coords[7 * static_cast<size_t>(tet) + 4 + q]; }
    const Int& quad(int tet, int q) const { return coords[7 * static_cast<size_t>(tet) + 4 + q]; }

    bool is_zero() const;

    // Text form "v [n0 n1 ... n_{7t-1}]".
    std::string str() const;
    static NormalVector parse(const std::string& text, int tets);

    friend bool operator==(const NormalVector& a, const NormalVector& b) {
        return a.coords == b.coords;
    }
    friend auto operator<=>(const NormalVector& a, const NormalVector& b) {
        return a.coords <=> b.coords;
    }
};

// Vector with every triangle coordinate 1 and every quad coordinate 0:
// the disjoint union of all vertex links.
NormalVector all_triangles_one(int tets);

// One equation per (face gluing, normal arc type).  Each side contributes a
// triangle and a quad coordinate; the equation equates the two sides'
// counts of discs inducing that arc type.
struct MatchRow {
    int plus_tri, plus_quad;    // coordinates on one side of the gluing
    int minus_tri, minus_quad;  // and on the other
};

struct MatchingSystem {
    int tets = 0;
    std::vector<MatchRow> rows;  // exactly 6t
};

MatchingSystem matching_system(const Triangulation& tri);

// Exact evaluation; throws ValidationError on dimension mismatch.
bool satisfies_matching(const MatchingSystem& sys, const NormalVector& v);

// At most one nonzero quad type per tetrahedron.
bool is_admissible(const NormalVector& v);

// True iff v + w is admissible: in every tetrahedron the nonzero quad types
// coincide or at least one side has none.  Inputs must be admissible.
bool compatible(const NormalVector& v, const NormalVector& w);

// Entrywise sum; throws IncompatibleError naming the clashing tetrahedron.
NormalVector haken_sum(const NormalVector& v, const NormalVector& w);

// Intersections of the surface with one edge orbit.  The value is
// independent of the chosen representative once v satisfies matching;
// callers must guarantee that precondition.
Int edge_weight(const Triangulation& tri, const Skeleton& sk, const NormalVector& v,
                int edge_orbit);

// Total intersections with the one-skeleton.  Verifies that v satisfies
// matching (throws ValidationError otherwise).
Int weight(const Triangulation& tri, const NormalVector& v);
Int weight(const Triangulation& tri, const Skeleton& sk, const MatchingSystem& sys,
           const NormalVector& v);

}  // namespace nsurf
