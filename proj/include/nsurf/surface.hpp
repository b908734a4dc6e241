#pragma once

#include <vector>

#include "nsurf/normal.hpp"

namespace nsurf {

// The cell complex realized by an admissible solution vector: one disc per
// unit of each coordinate, boundary arcs glued across face gluings in
// normal-parallel order.  Construction checks that the result is a closed
// complex whose vertex set matches the edge weights.
struct SurfaceComplex {
    struct Disc {
        int tet;
        bool is_quad;
        int type;        // triangle vertex 0..3 or quad type 0..2
        long long copy;  // parallel copy index within its type
    };

    std::vector<Disc> discs;

    // Arcs are numbered disc by disc (3 per triangle, 4 per quad).
    std::vector<long long> arc_partner;    // glued arc, every arc paired
    std::vector<bool> arc_same_direction;  // boundary traversals agree across the pair

    std::vector<int> component;  // disc -> component id
    int component_count = 0;

    long long vertex_classes = 0;      // identified disc corners
    std::vector<int> corner_class;     // corner instance -> class id
    std::vector<long long> arc_base;   // disc -> first arc id
    std::vector<long long> corner_base;  // disc -> first corner id

    long long arcs() const { return static_cast<long long>(arc_partner.size()); }
};

// Builds the complex.  Throws ValidationError if v is inadmissible, fails
// matching, or the reconstruction does not close up.
SurfaceComplex build_surface(const Triangulation& tri, const NormalVector& v);

struct ComponentInvariants {
    NormalVector coords;
    long long euler = 0;
    bool orientable = false;
    long long genus = 0;      // when orientable: chi = 2 - 2 genus
    long long crosscaps = 0;  // when non-orientable: chi = 2 - crosscaps
    Int weight;
};

struct SurfaceInvariants {
    int component_count = 0;
    long long euler_total = 0;
    std::vector<ComponentInvariants> components;
};

SurfaceInvariants surface_invariants(const Triangulation& tri, const SurfaceComplex& sc);

// Coordinate vectors of the connected components; they sum to v.
std::vector<NormalVector> split_components(const Triangulation& tri, const NormalVector& v);

}  // namespace nsurf
