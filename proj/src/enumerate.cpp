#include "nsurf/enumerate.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>

namespace nsurf {

namespace {

using Vec = std::vector<long long>;

// Box entries beyond any reachable level are clamped.
constexpr long long kBoxClamp = std::numeric_limits<long long>::max() / 4;

// Coefficient of coordinate j in a matching row: the rows are signed sums of
// four unit entries, so this is always in {-1, 0, 1}.
int row_coef(const MatchRow& r, int j) {
    return (j == r.plus_tri) + (j == r.plus_quad) - (j == r.minus_tri) - (j == r.minus_quad);
}

Vec residual(const MatchingSystem& sys, const Vec& x) {
    Vec out(sys.rows.size());
    for (size_t r = 0; r < sys.rows.size(); ++r) {
        const MatchRow& row = sys.rows[r];
        out[r] = x[row.plus_tri] + x[row.plus_quad] - x[row.minus_tri] - x[row.minus_quad];
    }
    return out;
}

bool dominates(const Vec& small, const Vec& big) {
    for (size_t i = 0; i < small.size(); ++i)
        if (small[i] > big[i]) return false;
    return true;
}

NormalVector to_normal(const Vec& x, int tets) {
    NormalVector v(tets);
    for (size_t i = 0; i < x.size(); ++i) v.coords[i] = x[i];
    return v;
}

}  // namespace

namespace {

// Completion engine shared by the support-restricted and the admissible
// variants.  Grows candidates one unit at a time; a step onto coordinate j
// requires <A t, A e_j> < 0, which reaches every minimal solution through a
// monotone path below it.  Residuals A t ride along incrementally.
std::vector<NormalVector> complete_minimal(const MatchingSystem& sys,
                                           const std::vector<bool>& support,
                                           bool admissible_only, long long cap,
                                           const NormalVector* bound) {
    const int n = 7 * sys.tets;
    if (static_cast<int>(support.size()) != n)
        throw ValidationError("support mask length does not match the system");

    Vec box;
    if (bound) {
        box.resize(n);
        for (int j = 0; j < n; ++j) {
            const Int& b = bound->coords[j];
            box[j] = (b > kBoxClamp) ? kBoxClamp : b.convert_to<long long>();
        }
    }

    std::vector<std::vector<int>> unit_rows(n);
    std::vector<int> allowed;
    for (int j = 0; j < n; ++j) {
        if (!support[j]) continue;
        if (bound && box[j] == 0) continue;
        allowed.push_back(j);
        unit_rows[j].resize(sys.rows.size());
        for (size_t r = 0; r < sys.rows.size(); ++r)
            unit_rows[j][r] = row_coef(sys.rows[r], j);
    }

    // A quad step is blocked when the tetrahedron already uses another type.
    auto quad_blocked = [&](const Vec& t, int j) {
        int slot = j % 7;
        if (slot < 4) return false;
        int base = 7 * (j / 7) + 4;
        for (int q = 0; q < 3; ++q)
            if (base + q != j && t[base + q] != 0) return true;
        return false;
    };

    std::vector<Vec> minimal;
    std::map<Vec, Vec> frontier;  // candidate -> residual
    for (int j : allowed) {
        Vec e(n, 0);
        e[j] = 1;
        Vec res(sys.rows.size());
        for (size_t r = 0; r < sys.rows.size(); ++r) res[r] = unit_rows[j][r];
        frontier.emplace(std::move(e), std::move(res));
    }

    long long level = 1;
    while (!frontier.empty()) {
        if (level > cap)
            throw EnumerationCapError(
                "coordinate-sum cap " + std::to_string(cap) +
                " reached before the basis completed; enumeration incomplete");

        // Harvest this level's solutions before extending anything, so the
        // domination prune below sees all of them.
        for (const auto& [t, res] : frontier)
            if (std::all_of(res.begin(), res.end(), [](long long r) { return r == 0; }))
                minimal.push_back(t);

        std::map<Vec, Vec> next;
        for (const auto& [t, res] : frontier) {
            if (std::all_of(res.begin(), res.end(), [](long long r) { return r == 0; }))
                continue;
            for (int j : allowed) {
                if (bound && t[j] + 1 > box[j]) continue;
                if (admissible_only && quad_blocked(t, j)) continue;
                long long dot = 0;
                for (size_t r = 0; r < res.size(); ++r) dot += res[r] * unit_rows[j][r];
                if (dot >= 0) continue;
                Vec grown = t;
                ++grown[j];
                bool dominated = false;
                for (const Vec& m : minimal)
                    if (dominates(m, grown)) {
                        dominated = true;
                        break;
                    }
                if (dominated) continue;
                if (!next.contains(grown)) {
                    Vec res2 = res;
                    for (size_t r = 0; r < res2.size(); ++r) res2[r] += unit_rows[j][r];
                    next.emplace(std::move(grown), std::move(res2));
                }
            }
        }
        frontier = std::move(next);
        ++level;
    }

    std::vector<NormalVector> out;
    out.reserve(minimal.size());
    for (const Vec& m : minimal) out.push_back(to_normal(m, sys.tets));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<NormalVector> minimal_solutions(const MatchingSystem& sys,
                                            const std::vector<bool>& support,
                                            long long cap,
                                            const NormalVector* bound) {
    return complete_minimal(sys, support, false, cap, bound);
}

std::vector<NormalVector> minimal_admissible_solutions(const MatchingSystem& sys,
                                                       long long cap) {
    std::vector<bool> support(7 * static_cast<size_t>(sys.tets), true);
    return complete_minimal(sys, support, true, cap, nullptr);
}

namespace {

// Support mask: all triangle coordinates plus one chosen quad type per
// tetrahedron.
std::vector<bool> selection_support(int tets, const std::vector<int>& quad_choice) {
    std::vector<bool> support(7 * static_cast<size_t>(tets), false);
    for (int i = 0; i < tets; ++i) {
        for (int v = 0; v < 4; ++v) support[7 * i + v] = true;
        support[7 * i + 4 + quad_choice[i]] = true;
    }
    return support;
}

// Support of v itself: any summand of v lives here.
std::vector<bool> vector_support(const NormalVector& v) {
    std::vector<bool> support(v.coords.size());
    for (size_t j = 0; j < v.coords.size(); ++j) support[j] = v.coords[j] != 0;
    return support;
}

}  // namespace

bool is_fundamental(const Triangulation& tri, const NormalVector& v) {
    MatchingSystem sys = matching_system(tri);
    if (!is_admissible(v) || !satisfies_matching(sys, v))
        throw ValidationError("is_fundamental requires an admissible solution");
    if (v.is_zero())
        throw ValidationError("the zero vector is not a surface");

    // v decomposes iff some nonzero solution sits strictly below it; any
    // such solution dominates a minimal one inside the box [0, v].
    std::vector<NormalVector> mins =
        minimal_solutions(sys, vector_support(v), std::numeric_limits<long long>::max(), &v);
    for (const NormalVector& m : mins)
        if (!(m == v)) return false;
    return true;
}

FundamentalSet enumerate_fundamentals(const Triangulation& tri, const EnumerationOptions& opts) {
    if (!is_orientable(tri))
        throw ValidationError("enumeration requires an orientable triangulation");

    MatchingSystem sys = matching_system(tri);

    // The admissible solutions form a union of 3^t sub-cones, one per choice
    // of quad type in each tetrahedron.  A summand of an admissible vector
    // stays inside its sub-cone, so the union of the per-cone Hilbert bases
    // is exactly the set of minimal admissible solutions; one completion run
    // over the whole coordinate set with the quad constraint enforced
    // computes it without re-walking the cones' shared faces.
    FundamentalSet set;
    for (const NormalVector& v : minimal_admissible_solutions(sys, opts.cap)) {
        if (!is_fundamental(tri, v)) continue;
        SurfaceComplex sc = build_surface(tri, v);
        SurfaceInvariants inv = surface_invariants(tri, sc);
        if (inv.component_count != 1)
            throw ValidationError("internal: a minimal solution is disconnected");
        FundamentalEntry e;
        e.vec = v;
        e.euler = inv.components[0].euler;
        e.orientable = inv.components[0].orientable;
        e.genus = inv.components[0].orientable ? inv.components[0].genus
                                               : inv.components[0].crosscaps;
        e.weight = inv.components[0].weight;
        set.entries.push_back(std::move(e));
    }
    // std::set iteration is already lexicographic on coordinates.
    return set;
}

FundamentalReport fundamental_report(const Triangulation& tri, const EnumerationOptions& opts) {
    FundamentalReport rep;
    rep.digest = tri.digest();
    rep.fundamentals = enumerate_fundamentals(tri, opts);
    for (int i = 0; i < static_cast<int>(rep.fundamentals.entries.size()); ++i) {
        long long chi = rep.fundamentals.entries[i].euler;
        if (chi < 0)
            rep.negative_chi.push_back(i);
        else if (chi == 0)
            rep.zero_chi.push_back(i);
        else
            rep.positive_chi.push_back(i);
    }
    rep.K = static_cast<long long>(rep.negative_chi.size());
    if (rep.K > 0) {
        for (int i : rep.negative_chi)
            rep.P = std::max(rep.P, -rep.fundamentals.entries[i].euler);
        rep.c = Rat(1, Int(3) * rep.K * rep.P);
        rep.vacuous = false;
    } else {
        rep.vacuous = true;
    }
    return rep;
}

GenusBound genus_bound(const FundamentalReport& report, long long genus) {
    if (genus < 2) throw ValidationError("genus must be at least 2");
    GenusBound b;
    b.genus = genus;
    if (report.vacuous) {
        b.vacuous = true;
        return b;
    }
    b.exact = report.c * Rat(2 * genus - 2);
    // Floor of a nonnegative rational.
    b.floor_value = numerator(b.exact) / denominator(b.exact);
    b.vacuous = b.floor_value < 1;
    return b;
}

bool check_coefficient_bound(const Triangulation& tri,
                             const std::vector<std::pair<Int, NormalVector>>& decomposition,
                             const FundamentalReport& report) {
    if (decomposition.empty()) throw ValidationError("empty decomposition");
    if (report.vacuous)
        throw ValidationError("no negative-chi fundamentals: the estimate is vacuous");

    const int t = tri.tets();
    NormalVector total(t);
    Int n1 = 0;
    bool maximizer_two_sided = false;

    std::map<NormalVector, const FundamentalEntry*> lookup;
    for (const FundamentalEntry& e : report.fundamentals.entries) lookup[e.vec] = &e;
    std::deque<FundamentalEntry> scratch;

    for (const auto& [coeff, vec] : decomposition) {
        if (coeff < 0) throw ValidationError("negative coefficient in decomposition");
        if (coeff == 0) continue;
        auto it = lookup.find(vec);
        const FundamentalEntry* entry = nullptr;
        if (it != lookup.end()) {
            entry = it->second;
        } else {
            if (!is_fundamental(tri, vec))
                throw ValidationError("decomposition summand is not fundamental");
            SurfaceInvariants inv = surface_invariants(tri, build_surface(tri, vec));
            FundamentalEntry& e = scratch.emplace_back();
            e.vec = vec;
            e.euler = inv.components[0].euler;
            e.orientable = inv.components[0].orientable;
            entry = &e;
        }
        if (entry->euler > 0)
            throw ValidationError("positive-chi summand not allowed in the decomposition");
        if (entry->euler < 0) {
            if (coeff > n1) {
                n1 = coeff;
                maximizer_two_sided = entry->orientable;
            } else if (coeff == n1 && entry->orientable) {
                maximizer_two_sided = true;
            }
        }
        for (size_t j = 0; j < total.coords.size(); ++j)
            total.coords[j] += coeff * vec.coords[j];
    }

    if (!is_admissible(total))
        throw ValidationError("decomposition sum is not admissible");
    SurfaceComplex sc = build_surface(tri, total);
    if (sc.component_count != 1)
        throw ValidationError("decomposition sum is not connected");
    SurfaceInvariants inv = surface_invariants(tri, sc);
    long long chi = inv.components[0].euler;
    if (chi >= 0) throw ValidationError("decomposition sum must have negative euler characteristic");
    if (n1 == 0) throw ValidationError("no negative-chi summand with positive coefficient");

    Int n = maximizer_two_sided ? n1 : n1 / 2;
    if (n == 0) {
        // Degenerate branch: every coefficient is 0 or 1, so -chi(F) <= K P.
        return Int(-chi) <= Int(report.K) * report.P;
    }
    // n >= -chi / (3KP), compared exactly as 3 K P n >= -chi.
    return Int(3) * report.K * report.P * n >= Int(-chi);
}

bool check_coefficient_bound(const Triangulation& tri,
                             const std::vector<std::pair<Int, NormalVector>>& decomposition) {
    return check_coefficient_bound(tri, decomposition, fundamental_report(tri));
}

}  // namespace nsurf
