#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "nsurf/errors.hpp"
#include "nsurf/perm.hpp"

namespace nsurf {

// Face k of a tetrahedron is the face opposite vertex k.
struct Gluing {
    int tet = -1;
    int face = -1;
    Perm4 perm;  // source vertex labels -> target vertex labels; perm[face] == target face
};

// Edge numbering within a tetrahedron: 0:{0,1} 1:{0,2} 2:{0,3} 3:{1,2} 4:{1,3} 5:{2,3}.
inline constexpr int kEdgeEnds[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

// Edge index of the unordered pair {a, b}, a != b.
int edge_index(int a, int b);

// A closed triangulated 3-manifold given by its face gluing table.
// Validated on construction: gluings form an involution, no face is glued
// to itself by the identity, every face is glued, and the identified
// complex satisfies V - E + F - T = 0 (equivalently, all vertex links are
// spheres).  Immutable afterwards.
class Triangulation {
public:
    static Triangulation parse(const std::string& text);

    int tets() const { return static_cast<int>(glue_.size()); }

    const Gluing& gluing(int tet, int face) const { return glue_[tet][face]; }

    // Canonical file form: header plus one line per tetrahedron, no comments.
    std::string to_text() const;

    // FNV-1a 64 over the canonical file form, as 16 hex digits.
    std::string digest() const;

    friend bool operator==(const Triangulation& a, const Triangulation& b);

private:
    Triangulation() = default;
    std::vector<std::array<Gluing, 4>> glue_;
};

// Orbits of tetrahedron edges and vertices under the gluing identifications.
// Orbit labels are canonical: orbits are numbered in increasing order of
// their smallest (tet, index) member.
struct Skeleton {
    int edge_count = 0;
    int vertex_count = 0;
    int face_count = 0;  // 2t

    std::vector<std::array<int, 6>> edge_orbit;    // [tet][edge] -> orbit id
    std::vector<std::array<int, 4>> vertex_orbit;  // [tet][vertex] -> orbit id

    std::vector<std::pair<int, int>> edge_rep;    // orbit id -> smallest (tet, edge)
    std::vector<std::pair<int, int>> vertex_rep;  // orbit id -> smallest (tet, vertex)
};

Skeleton compute_skeleton(const Triangulation& tri);

// True iff tetrahedra admit orientations making every face gluing
// orientation-reversing, i.e. every gluing permutation odd across
// consistently oriented tetrahedra.
bool is_orientable(const Triangulation& tri);

}  // namespace nsurf
