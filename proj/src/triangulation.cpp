#include "nsurf/triangulation.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

namespace nsurf {

bool Perm4::from_string(const std::string& s, Perm4& out) {
    if (s.size() != 4) return false;
    bool seen[4] = {false, false, false, false};
    int img[4];
    for (int i = 0; i < 4; ++i) {
        char c = s[i];
        if (c < '0' || c > '3') return false;
        int v = c - '0';
        if (seen[v]) return false;
        seen[v] = true;
        img[i] = v;
    }
    out = Perm4(img[0], img[1], img[2], img[3]);
    return true;
}

int edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int e = 0; e < 6; ++e)
        if (kEdgeEnds[e][0] == a && kEdgeEnds[e][1] == b) return e;
    return -1;
}

namespace {

// Line-oriented tokenizer that tracks the column of the current token.
struct Cursor {
    const std::string& line;
    int line_no;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_no, static_cast<int>(pos) + 1);
    }

    void expect(char c) {
        if (pos >= line.size() || line[pos] != c)
            fail(std::string("expected '") + c + "'");
        ++pos;
    }

    void expect_space() { expect(' '); }

    long long read_int() {
        size_t start = pos;
        while (pos < line.size() && line[pos] >= '0' && line[pos] <= '9') ++pos;
        if (pos == start) fail("expected a number");
        return std::stoll(line.substr(start, pos - start));
    }

    std::string read_perm() {
        if (pos + 4 > line.size()) fail("expected a 4-digit permutation");
        std::string s = line.substr(pos, 4);
        pos += 4;
        return s;
    }

    void expect_end() {
        if (pos != line.size()) fail("trailing characters");
    }
};

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Canonical orbit numbering: orbits sorted by smallest member index.
// Returns (orbit id per cell, orbit count, representative per orbit).
struct Orbits {
    std::vector<int> id;
    std::vector<int> rep;  // smallest cell in each orbit
};

Orbits number_orbits(UnionFind& uf, int n) {
    Orbits out;
    out.id.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        int r = uf.find(i);
        if (out.id[r] < 0) {
            out.id[r] = static_cast<int>(out.rep.size());
            out.rep.push_back(r);
        }
        out.id[i] = out.id[r];
    }
    return out;
}

Skeleton skeleton_of(const Triangulation& tri) {
    const int t = tri.tets();
    UnionFind edges(6 * t), vertices(4 * t);

    for (int i = 0; i < t; ++i) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.gluing(i, f);
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                vertices.unite(4 * i + v, 4 * g.tet + g.perm[v]);
                for (int w = v + 1; w < 4; ++w) {
                    if (w == f) continue;
                    edges.unite(6 * i + edge_index(v, w),
                                6 * g.tet + edge_index(g.perm[v], g.perm[w]));
                }
            }
        }
    }

    Orbits eo = number_orbits(edges, 6 * t);
    Orbits vo = number_orbits(vertices, 4 * t);

    Skeleton sk;
    sk.edge_count = static_cast<int>(eo.rep.size());
    sk.vertex_count = static_cast<int>(vo.rep.size());
    sk.face_count = 2 * t;
    sk.edge_orbit.resize(t);
    sk.vertex_orbit.resize(t);
    for (int i = 0; i < t; ++i) {
        for (int e = 0; e < 6; ++e) sk.edge_orbit[i][e] = eo.id[6 * i + e];
        for (int v = 0; v < 4; ++v) sk.vertex_orbit[i][v] = vo.id[4 * i + v];
    }
    for (int r : eo.rep) sk.edge_rep.emplace_back(r / 6, r % 6);
    for (int r : vo.rep) sk.vertex_rep.emplace_back(r / 4, r % 4);
    return sk;
}

}  // namespace

Triangulation Triangulation::parse(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    long long tet_count = -1;
    Triangulation tri;
    std::vector<bool> declared;

    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;

        Cursor cur{line, line_no};
        if (tet_count < 0) {
            // Header: "tets <t>"
            if (line.rfind("tets ", 0) != 0) cur.fail("expected header \"tets <t>\"");
            cur.pos = 5;
            tet_count = cur.read_int();
            cur.expect_end();
            if (tet_count < 1) cur.fail("tetrahedron count must be positive");
            tri.glue_.resize(tet_count);
            declared.assign(tet_count, false);
            continue;
        }

        // "<i>: <j0>(<p0>) <j1>(<p1>) <j2>(<p2>) <j3>(<p3>)"
        long long i = cur.read_int();
        if (i < 0 || i >= tet_count) cur.fail("tetrahedron index out of range");
        if (declared[i]) cur.fail("duplicate tetrahedron line");
        declared[i] = true;
        cur.expect(':');
        for (int f = 0; f < 4; ++f) {
            cur.expect_space();
            size_t tok = cur.pos;
            // A "-" entry marks a boundary face; only closed input is accepted.
            if (cur.pos < line.size() && line[cur.pos] == '-')
                cur.fail("unglued face " + std::to_string(f) + " of tetrahedron " +
                         std::to_string(i));
            long long j = cur.read_int();
            if (j < 0 || j >= tet_count) {
                cur.pos = tok;
                cur.fail("tetrahedron index out of range");
            }
            cur.expect('(');
            tok = cur.pos;
            Perm4 p;
            if (!Perm4::from_string(cur.read_perm(), p)) {
                cur.pos = tok;
                cur.fail("not a permutation of \"0123\"");
            }
            cur.expect(')');
            tri.glue_[i][f] = Gluing{static_cast<int>(j), p[f], p};
        }
        cur.expect_end();
    }

    if (tet_count < 0) throw ParseError("missing \"tets\" header", line_no + 1, 1);
    for (long long i = 0; i < tet_count; ++i)
        if (!declared[i])
            throw ParseError("no gluing line for tetrahedron " + std::to_string(i),
                             line_no + 1, 1);

    // Structural invariants.
    for (int i = 0; i < tet_count; ++i) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = tri.glue_[i][f];
            if (g.tet == i && g.face == f) {
                if (g.perm.is_identity())
                    throw ValidationError("face " + std::to_string(f) + " of tetrahedron " +
                                          std::to_string(i) +
                                          " is glued to itself by the identity");
                // Any self-gluing folds the face and the quotient is not a
                // manifold along the fold.
                throw ValidationError("face " + std::to_string(f) + " of tetrahedron " +
                                      std::to_string(i) + " is glued to itself");
            }
            const Gluing& back = tri.glue_[g.tet][g.face];
            if (back.tet != i || back.face != f || !back.perm.of(g.perm).is_identity())
                throw ValidationError("gluing of face " + std::to_string(f) +
                                      " of tetrahedron " + std::to_string(i) +
                                      " is not an involution");
        }
    }

    // No edge may be identified with itself reversed.
    {
        UnionFind directed(12 * static_cast<int>(tet_count));
        auto dir_id = [](int tet, int a, int b) {
            int e = edge_index(a, b);
            int flip = (a > b) ? 1 : 0;
            return 12 * tet + 2 * e + flip;
        };
        for (int i = 0; i < tet_count; ++i)
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = tri.glue_[i][f];
                for (int v = 0; v < 4; ++v) {
                    if (v == f) continue;
                    for (int w = 0; w < 4; ++w) {
                        if (w == f || w == v) continue;
                        directed.unite(dir_id(i, v, w), dir_id(g.tet, g.perm[v], g.perm[w]));
                    }
                }
            }
        for (int i = 0; i < tet_count; ++i)
            for (int e = 0; e < 6; ++e)
                if (directed.find(12 * i + 2 * e) == directed.find(12 * i + 2 * e + 1))
                    throw ValidationError("edge " + std::to_string(e) + " of tetrahedron " +
                                          std::to_string(i) +
                                          " is identified with itself reversed");
    }

    // Closed-manifold check: every vertex link a sphere, equivalently
    // V - E + F - T = 0 for the identified complex.
    Skeleton sk = skeleton_of(tri);
    long long chi = sk.vertex_count - sk.edge_count + sk.face_count - tet_count;
    if (chi != 0)
        throw ValidationError("not a closed 3-manifold: V - E + F - T = " +
                              std::to_string(chi));

    return tri;
}

std::string Triangulation::to_text() const {
    std::ostringstream out;
    out << "tets " << tets() << "\n";
    for (int i = 0; i < tets(); ++i) {
        out << i << ":";
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = glue_[i][f];
            out << " " << g.tet << "(" << g.perm.str() << ")";
        }
        out << "\n";
    }
    return out.str();
}

std::string Triangulation::digest() const {
    const std::string text = to_text();
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    static const char* hex = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = hex[h & 0xf];
        h >>= 4;
    }
    return out;
}

bool operator==(const Triangulation& a, const Triangulation& b) {
    if (a.tets() != b.tets()) return false;
    for (int i = 0; i < a.tets(); ++i)
        for (int f = 0; f < 4; ++f) {
            const Gluing &x = a.glue_[i][f], &y = b.glue_[i][f];
            if (x.tet != y.tet || x.face != y.face || !(x.perm == y.perm)) return false;
        }
    return true;
}

Skeleton compute_skeleton(const Triangulation& tri) { return skeleton_of(tri); }

bool is_orientable(const Triangulation& tri) {
    const int t = tri.tets();
    std::vector<int> orient(t, 0);
    std::vector<int> stack;
    for (int start = 0; start < t; ++start) {
        if (orient[start] != 0) continue;
        orient[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            int i = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = tri.gluing(i, f);
                int want = -orient[i] * g.perm.sign();
                if (orient[g.tet] == 0) {
                    orient[g.tet] = want;
                    stack.push_back(g.tet);
                } else if (orient[g.tet] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace nsurf
