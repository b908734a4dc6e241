#include "nsurf/normal.hpp"

#include <sstream>

namespace nsurf {

int quad_separating(int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == 0) return b - 1;           // {0,1}->0 {0,2}->1 {0,3}->2
    return quad_separating(0, 10 - a - b - 4);  // complement pair contains 0
}

int quad_partner(int q, int v) {
    int low = kQuadLowPartner[q];
    if (v == 0) return low;
    if (v == low) return 0;
    // v is in the complementary pair {x, y} = {1,2,3} \ {low}.
    return 6 - low - v;
}

bool quad_meets_edge(int q, int e) {
    int a = kEdgeEnds[e][0], b = kEdgeEnds[e][1];
    return quad_partner(q, a) != b;
}

bool NormalVector::is_zero() const {
    for (const Int& x : coords)
        if (x != 0) return false;
    return true;
}

std::string NormalVector::str() const {
    std::ostringstream out;
    out << "v [";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) out << " ";
        out << coords[i];
    }
    out << "]";
    return out.str();
}

NormalVector NormalVector::parse(const std::string& text, int tets) {
    size_t pos = 0;
    auto skip_spaces = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    skip_spaces();
    if (pos < text.size() && text[pos] == 'v') {
        ++pos;
        skip_spaces();
    }
    if (pos >= text.size() || text[pos] != '[')
        throw ParseError("expected '['", 1, static_cast<int>(pos) + 1);
    ++pos;
    NormalVector v(tets);
    for (size_t i = 0; i < v.coords.size(); ++i) {
        skip_spaces();
        size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start)
            throw ParseError("expected coordinate " + std::to_string(i), 1,
                             static_cast<int>(pos) + 1);
        v.coords[i] = Int(text.substr(start, pos - start));
    }
    skip_spaces();
    if (pos >= text.size() || text[pos] != ']')
        throw ParseError("expected ']' after " + std::to_string(v.coords.size()) +
                             " coordinates",
                         1, static_cast<int>(pos) + 1);
    ++pos;
    skip_spaces();
    if (pos != text.size())
        throw ParseError("trailing characters", 1, static_cast<int>(pos) + 1);
    return v;
}

NormalVector all_triangles_one(int tets) {
    NormalVector v(tets);
    for (int i = 0; i < tets; ++i)
        for (int a = 0; a < 4; ++a) v.tri(i, a) = 1;
    return v;
}

MatchingSystem matching_system(const Triangulation& tri) {
    MatchingSystem sys;
    sys.tets = tri.tets();
    for (int i = 0; i < tri.tets(); ++i) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(i, f);
            // Emit each gluing once, from its smaller half-face.
            if (std::pair(g.tet, g.face) < std::pair(i, f)) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                // Arc type cutting off corner v of face f: induced by the
                // triangle at v and the quad separating {v, f}.
                MatchRow row;
                row.plus_tri = 7 * i + v;
                row.plus_quad = 7 * i + 4 + quad_separating(v, f);
                row.minus_tri = 7 * g.tet + g.perm[v];
                row.minus_quad = 7 * g.tet + 4 + quad_separating(g.perm[v], g.face);
                sys.rows.push_back(row);
            }
        }
    }
    return sys;
}

bool satisfies_matching(const MatchingSystem& sys, const NormalVector& v) {
    if (v.tets() != sys.tets || v.coords.size() != 7 * static_cast<size_t>(sys.tets))
        throw ValidationError("vector length does not match the triangulation");
    for (const MatchRow& r : sys.rows)
        if (v.coords[r.plus_tri] + v.coords[r.plus_quad] !=
            v.coords[r.minus_tri] + v.coords[r.minus_quad])
            return false;
    return true;
}

bool is_admissible(const NormalVector& v) {
    for (int i = 0; i < v.tets(); ++i) {
        int nonzero = 0;
        for (int q = 0; q < 3; ++q)
            if (v.quad(i, q) != 0) ++nonzero;
        if (nonzero > 1) return false;
    }
    return true;
}

namespace {

// Tetrahedron where the quad supports clash, or -1.
int quad_clash(const NormalVector& v, const NormalVector& w) {
    for (int i = 0; i < v.tets(); ++i) {
        int qv = -1, qw = -1;
        for (int q = 0; q < 3; ++q) {
            if (v.quad(i, q) != 0) qv = q;
            if (w.quad(i, q) != 0) qw = q;
        }
        if (qv >= 0 && qw >= 0 && qv != qw) return i;
    }
    return -1;
}

}  // namespace

bool compatible(const NormalVector& v, const NormalVector& w) {
    if (v.coords.size() != w.coords.size())
        throw ValidationError("vectors of different length");
    if (!is_admissible(v) || !is_admissible(w))
        throw ValidationError("compatible() requires admissible vectors");
    return quad_clash(v, w) < 0;
}

NormalVector haken_sum(const NormalVector& v, const NormalVector& w) {
    if (!compatible(v, w)) {
        int tet = quad_clash(v, w);
        throw IncompatibleError("quad types clash in tetrahedron " + std::to_string(tet),
                                tet);
    }
    NormalVector out(v.tets());
    for (size_t i = 0; i < v.coords.size(); ++i) out.coords[i] = v.coords[i] + w.coords[i];
    return out;
}

Int edge_weight(const Triangulation& tri, const Skeleton& sk, const NormalVector& v,
                int edge_orbit) {
    if (edge_orbit < 0 || edge_orbit >= sk.edge_count)
        throw ValidationError("edge orbit out of range");
    auto [tet, e] = sk.edge_rep[edge_orbit];
    int a = kEdgeEnds[e][0], b = kEdgeEnds[e][1];
    Int total = v.tri(tet, a) + v.tri(tet, b);
    for (int q = 0; q < 3; ++q)
        if (quad_meets_edge(q, e)) total += v.quad(tet, q);
    return total;
}

Int weight(const Triangulation& tri, const Skeleton& sk, const MatchingSystem& sys,
           const NormalVector& v) {
    if (!satisfies_matching(sys, v))
        throw ValidationError("weight is only defined for matching solutions");
    Int total = 0;
    for (int e = 0; e < sk.edge_count; ++e) total += edge_weight(tri, sk, v, e);
    return total;
}

Int weight(const Triangulation& tri, const NormalVector& v) {
    return weight(tri, compute_skeleton(tri), matching_system(tri), v);
}

}  // namespace nsurf
