#include "nsurf/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nsurf {

namespace {

// Reconstruction caps the number of discs it will materialize.
constexpr long long kDiscCap = 20'000'000;

struct UnionFind {
    std::vector<long long> parent;

    explicit UnionFind(long long n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0ll);
    }

    long long find(long long x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(long long a, long long b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

long long checked_count(const Int& x) {
    if (x > kDiscCap) throw ValidationError("surface too large to reconstruct");
    return x.convert_to<long long>();
}

// The three vertices of face f, ascending.
void face_vertices(int f, int out[3]) {
    int k = 0;
    for (int v = 0; v < 4; ++v)
        if (v != f) out[k++] = v;
}

// Corner slots of a disc are its corners ordered by tetrahedron edge index.
// A triangle at vertex v sits on the three edges at v; a quad of type q sits
// on the four edges it crosses.
int disc_corner_slot(const SurfaceComplex::Disc& d, int edge) {
    int slot = 0;
    for (int e = 0; e < 6; ++e) {
        bool on = d.is_quad
                      ? quad_meets_edge(d.type, e)
                      : (kEdgeEnds[e][0] == d.type || kEdgeEnds[e][1] == d.type);
        if (e == edge) return on ? slot : -1;
        if (on) ++slot;
    }
    return -1;
}

int disc_corner_total(const SurfaceComplex::Disc& d) { return d.is_quad ? 4 : 3; }

// Arc slots: a triangle at v has arcs on the three faces other than v, in
// ascending face order; a quad has one arc per face.
int disc_arc_slot(const SurfaceComplex::Disc& d, int face) {
    if (d.is_quad) return face;
    if (face == d.type) return -1;
    return face - (face > d.type ? 1 : 0);
}

int disc_arc_total(const SurfaceComplex::Disc& d) { return d.is_quad ? 4 : 3; }

// Directed boundary traversal of the arc of disc d lying on the given face:
// corner edges (from, to) in the disc's own boundary cycle.
//
// Triangle at v with other vertices (a, b, c) ascending runs
//   {v,a} -> {v,b} -> {v,c} -> {v,a},
// the arc on each face joining the two corners it does not name.
// A quad with pairs {0, t} and {u, w} (u < w) runs
//   {0,u} -> {u,t} -> {t,w} -> {w,0} -> {0,u}.
void arc_direction(const SurfaceComplex::Disc& d, int face, int& edge_from, int& edge_to) {
    if (!d.is_quad) {
        int o[3];
        face_vertices(d.type, o);
        int i = 0;
        while (o[i] != face) ++i;
        edge_from = edge_index(d.type, o[(i + 1) % 3]);
        edge_to = edge_index(d.type, o[(i + 2) % 3]);
        return;
    }
    int t = kQuadLowPartner[d.type];
    int rest[2], k = 0;
    for (int v = 1; v < 4; ++v)
        if (v != t) rest[k++] = v;
    int u = rest[0], w = rest[1];
    const int cycle[4] = {edge_index(0, u), edge_index(u, t), edge_index(t, w),
                          edge_index(w, 0)};
    const int faces[4] = {w, 0, u, t};  // face carrying the arc cycle[i] -> cycle[i+1]
    for (int i = 0; i < 4; ++i) {
        if (faces[i] == face) {
            edge_from = cycle[i];
            edge_to = cycle[(i + 1) % 4];
            return;
        }
    }
    throw ValidationError("internal: arc direction lookup failed");
}

}  // namespace

SurfaceComplex build_surface(const Triangulation& tri, const NormalVector& v) {
    const int t = tri.tets();
    if (v.tets() != t) throw ValidationError("vector length does not match the triangulation");
    for (const Int& x : v.coords)
        if (x < 0) throw ValidationError("negative coordinate");
    if (!is_admissible(v)) throw ValidationError("vector is not admissible");
    MatchingSystem sys = matching_system(tri);
    if (!satisfies_matching(sys, v))
        throw ValidationError("vector does not satisfy the matching equations");
    Skeleton sk = compute_skeleton(tri);

    SurfaceComplex sc;

    // Materialize discs: per tetrahedron, triangle types then the quad type.
    // disc_of[tet] maps (kind, type, copy) to disc ids via per-type bases.
    std::vector<std::array<long long, 7>> first_disc(t);
    {
        Int total = 0;
        for (const Int& x : v.coords) total += x;
        checked_count(total);
    }
    for (int i = 0; i < t; ++i) {
        for (int slot = 0; slot < 7; ++slot) {
            first_disc[i][slot] = static_cast<long long>(sc.discs.size());
            long long n = checked_count(v.coords[7 * static_cast<size_t>(i) + slot]);
            for (long long copy = 0; copy < n; ++copy)
                sc.discs.push_back({i, slot >= 4, slot >= 4 ? slot - 4 : slot, copy});
        }
    }

    const long long disc_count = static_cast<long long>(sc.discs.size());
    sc.arc_base.resize(disc_count + 1);
    sc.corner_base.resize(disc_count + 1);
    long long arc_total = 0, corner_total = 0;
    for (long long d = 0; d < disc_count; ++d) {
        sc.arc_base[d] = arc_total;
        sc.corner_base[d] = corner_total;
        arc_total += disc_arc_total(sc.discs[d]);
        corner_total += disc_corner_total(sc.discs[d]);
    }
    sc.arc_base[disc_count] = arc_total;
    sc.corner_base[disc_count] = corner_total;

    sc.arc_partner.assign(arc_total, -1);
    sc.arc_same_direction.assign(arc_total, false);

    // Arcs cutting off corner u of face f of tetrahedron i, ordered by
    // distance from the corner: triangles at u first (copy order), then the
    // quads separating {u, f} (copy order when {u, f} is the low pair of the
    // type, reversed otherwise).
    auto corner_arcs = [&](int i, int f, int u) {
        std::vector<long long> discs_here;
        long long ntri = checked_count(v.tri(i, u));
        for (long long h = 0; h < ntri; ++h)
            discs_here.push_back(first_disc[i][u] + h);
        int q = quad_separating(u, f);
        long long nquad = checked_count(v.quad(i, q));
        bool low = (u == 0 || f == 0);
        for (long long m = 0; m < nquad; ++m)
            discs_here.push_back(first_disc[i][4 + q] + (low ? m : nquad - 1 - m));
        return discs_here;
    };

    UnionFind corners(corner_total);
    UnionFind components(std::max<long long>(disc_count, 1));

    auto corner_id = [&](long long disc, int edge) {
        int slot = disc_corner_slot(sc.discs[disc], edge);
        if (slot < 0) throw ValidationError("internal: corner lookup failed");
        return sc.corner_base[disc] + slot;
    };

    for (int i = 0; i < t; ++i) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(i, f);
            if (std::pair(g.tet, g.face) < std::pair(i, f)) continue;
            int fv[3];
            face_vertices(f, fv);
            for (int ui = 0; ui < 3; ++ui) {
                int u = fv[ui];
                int u2 = g.perm[u];
                std::vector<long long> side_a = corner_arcs(i, f, u);
                std::vector<long long> side_b = corner_arcs(g.tet, g.face, u2);
                if (side_a.size() != side_b.size())
                    throw ValidationError("internal: arc counts disagree across a gluing");
                for (size_t r = 0; r < side_a.size(); ++r) {
                    long long da = side_a[r], db = side_b[r];
                    long long aa = sc.arc_base[da] + disc_arc_slot(sc.discs[da], f);
                    long long ab = sc.arc_base[db] + disc_arc_slot(sc.discs[db], g.face);
                    if (sc.arc_partner[aa] != -1 || sc.arc_partner[ab] != -1)
                        throw ValidationError("internal: arc glued twice");
                    sc.arc_partner[aa] = ab;
                    sc.arc_partner[ab] = aa;

                    int a_from, a_to, b_from, b_to;
                    arc_direction(sc.discs[da], f, a_from, a_to);
                    arc_direction(sc.discs[db], g.face, b_from, b_to);

                    // Map side-a endpoint edges through the gluing.
                    auto mapped = [&](int edge) {
                        return edge_index(g.perm[kEdgeEnds[edge][0]],
                                          g.perm[kEdgeEnds[edge][1]]);
                    };
                    int m_from = mapped(a_from), m_to = mapped(a_to);
                    bool same;
                    if (m_from == b_from && m_to == b_to)
                        same = true;
                    else if (m_from == b_to && m_to == b_from)
                        same = false;
                    else
                        throw ValidationError("internal: endpoint edges disagree across a gluing");
                    sc.arc_same_direction[aa] = same;
                    sc.arc_same_direction[ab] = same;

                    corners.unite(corner_id(da, a_from), corner_id(db, m_from));
                    corners.unite(corner_id(da, a_to), corner_id(db, m_to));
                    components.unite(da, db);
                }
            }
        }
    }

    for (long long a = 0; a < arc_total; ++a)
        if (sc.arc_partner[a] == -1)
            throw ValidationError("internal: unglued arc in a closed triangulation");

    // Number corner classes and check them against the edge weights: the
    // identified corners must be exactly the surface's intersections with
    // the one-skeleton, one class per point, i.e. every vertex link closes
    // into a single circle.
    sc.corner_class.assign(corner_total, -1);
    std::vector<Int> orbit_classes(sk.edge_count, 0);
    long long classes = 0;
    for (long long d = 0; d < disc_count; ++d) {
        const auto& disc = sc.discs[d];
        int slot = 0;
        for (int e = 0; e < 6; ++e) {
            bool on = disc.is_quad ? quad_meets_edge(disc.type, e)
                                   : (kEdgeEnds[e][0] == disc.type ||
                                      kEdgeEnds[e][1] == disc.type);
            if (!on) continue;
            long long c = sc.corner_base[d] + slot;
            ++slot;
            long long root = corners.find(c);
            if (sc.corner_class[root] < 0) {
                sc.corner_class[root] = static_cast<int>(classes++);
                orbit_classes[sk.edge_orbit[disc.tet][e]] += 1;
            }
            sc.corner_class[c] = sc.corner_class[root];
        }
    }
    sc.vertex_classes = classes;
    for (int o = 0; o < sk.edge_count; ++o)
        if (orbit_classes[o] != edge_weight(tri, sk, v, o))
            throw ValidationError("internal: a vertex link failed to close into a circle");

    // Component numbering in disc order.
    sc.component.assign(disc_count, -1);
    for (long long d = 0; d < disc_count; ++d) {
        long long root = components.find(d);
        if (sc.component[root] < 0) sc.component[root] = sc.component_count++;
        sc.component[d] = sc.component[root];
    }
    if (disc_count == 0) sc.component_count = 0;

    return sc;
}

SurfaceInvariants surface_invariants(const Triangulation& tri, const SurfaceComplex& sc) {
    const int t = tri.tets();
    const long long disc_count = static_cast<long long>(sc.discs.size());
    Skeleton sk = compute_skeleton(tri);

    SurfaceInvariants inv;
    inv.component_count = sc.component_count;
    inv.components.resize(sc.component_count);
    for (auto& c : inv.components) {
        c.coords = NormalVector(t);
        c.weight = 0;
    }

    // Cell counts per component.
    std::vector<long long> faces(sc.component_count, 0), edges(sc.component_count, 0),
        verts(sc.component_count, 0);
    std::vector<int> class_component(sc.vertex_classes, -1);
    for (long long d = 0; d < disc_count; ++d) {
        const auto& disc = sc.discs[d];
        int comp = sc.component[d];
        ++faces[comp];
        int slot = disc.is_quad ? 4 + disc.type : disc.type;
        inv.components[comp].coords.coords[7 * static_cast<size_t>(disc.tet) + slot] += 1;
        for (long long c = sc.corner_base[d]; c < sc.corner_base[d + 1]; ++c) {
            int cls = sc.corner_class[c];
            if (class_component[cls] < 0) {
                class_component[cls] = comp;
                ++verts[comp];
            }
        }
        for (long long a = sc.arc_base[d]; a < sc.arc_base[d + 1]; ++a)
            if (sc.arc_partner[a] > a || sc.arc_partner[a] == a) ++edges[comp];
    }

    // Orientability: propagate disc orientations; discs glued along an arc
    // must traverse it in opposite directions.
    std::vector<int> orient(disc_count, 0);
    std::vector<bool> comp_orientable(sc.component_count, true);
    std::vector<long long> stack;
    for (long long start = 0; start < disc_count; ++start) {
        if (orient[start] != 0) continue;
        orient[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            long long d = stack.back();
            stack.pop_back();
            for (long long a = sc.arc_base[d]; a < sc.arc_base[d + 1]; ++a) {
                long long b = sc.arc_partner[a];
                long long d2 =
                    static_cast<long long>(std::upper_bound(sc.arc_base.begin(),
                                                            sc.arc_base.end(), b) -
                                           sc.arc_base.begin()) -
                    1;
                int want = sc.arc_same_direction[a] ? -orient[d] : orient[d];
                if (orient[d2] == 0) {
                    orient[d2] = want;
                    stack.push_back(d2);
                } else if (orient[d2] != want) {
                    comp_orientable[sc.component[d]] = false;
                }
            }
        }
    }

    MatchingSystem sys = matching_system(tri);
    for (int comp = 0; comp < sc.component_count; ++comp) {
        ComponentInvariants& c = inv.components[comp];
        c.euler = verts[comp] - edges[comp] + faces[comp];
        c.orientable = comp_orientable[comp];
        if (c.orientable)
            c.genus = (2 - c.euler) / 2;
        else
            c.crosscaps = 2 - c.euler;
        c.weight = weight(tri, sk, sys, c.coords);
        inv.euler_total += c.euler;
    }
    return inv;
}

std::vector<NormalVector> split_components(const Triangulation& tri, const NormalVector& v) {
    SurfaceComplex sc = build_surface(tri, v);
    SurfaceInvariants inv = surface_invariants(tri, sc);
    std::vector<NormalVector> out;
    out.reserve(inv.components.size());
    for (auto& c : inv.components) out.push_back(c.coords);
    return out;
}

}  // namespace nsurf
