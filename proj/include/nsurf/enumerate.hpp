#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsurf/surface.hpp"

namespace nsurf {

struct EnumerationOptions {
    // Ceiling on the coordinate sum explored per Hilbert basis run.  Hitting
    // it raises EnumerationCapError; results are never silently truncated.
    long long cap = 10'000;
};

// Minimal nonzero nonnegative solutions of the matching system among vectors
// supported on the given coordinate set (quad coordinates outside the
// selection are pinned to zero).  Lexicographically sorted.
//
// Completion procedure: grow candidates one unit at a time, extending t by
// e_j only when <A t, A e_j> < 0, pruning anything dominated by a known
// solution.  Optionally restricts the search to the box [0, bound].
std::vector<NormalVector> minimal_solutions(const MatchingSystem& sys,
                                            const std::vector<bool>& support,
                                            long long cap,
                                            const NormalVector* bound = nullptr);

struct FundamentalEntry {
    NormalVector vec;
    long long euler = 0;
    bool orientable = false;
    long long genus = 0;  // crosscaps when non-orientable
    Int weight;
};

// All fundamental normal surfaces, lexicographically ordered by coordinates.
struct FundamentalSet {
    std::vector<FundamentalEntry> entries;
};

// Union of the per-quad-selection Hilbert bases, deduplicated and verified
// indecomposable.  Refuses non-orientable triangulations.
FundamentalSet enumerate_fundamentals(const Triangulation& tri,
                                      const EnumerationOptions& opts = {});

// True iff no pair of nonzero admissible solutions sums to v.  v must be a
// nonzero admissible solution.
bool is_fundamental(const Triangulation& tri, const NormalVector& v);

struct FundamentalReport {
    std::string digest;  // of the canonical gluing table
    FundamentalSet fundamentals;
    std::vector<int> negative_chi;  // indices into fundamentals, chi < 0
    std::vector<int> zero_chi;
    std::vector<int> positive_chi;
    long long K = 0;   // |negative_chi|
    long long P = 0;   // max -chi over negative_chi, when K > 0
    Rat c;             // 1/(3KP), meaningful only when K > 0
    bool vacuous = false;  // K == 0: no bound exists for any genus
};

FundamentalReport fundamental_report(const Triangulation& tri,
                                     const EnumerationOptions& opts = {});

// Largest integer <= c * (2g - 2); vacuous when that is < 1 (or K = 0).
struct GenusBound {
    long long genus = 0;
    Rat exact;        // c * (2g - 2)
    Int floor_value;  // integer part
    bool vacuous = false;
};

GenusBound genus_bound(const FundamentalReport& report, long long genus);

// Checks the coefficient estimate for a weighted decomposition
// F = sum coeff_i * vec_i over fundamental surfaces of nonpositive euler
// characteristic.  Let n1 be the largest coefficient attached to a
// negative-chi summand; n = n1 if some maximizing summand is two-sided,
// floor(n1 / 2) otherwise.  Returns n >= -chi(F) / (3KP) when n > 0, and
// -chi(F) <= K P when n = 0.  Preconditions (summands fundamental, sum
// admissible, connected, chi < 0) are verified and reported individually.
bool check_coefficient_bound(const Triangulation& tri,
                             const std::vector<std::pair<Int, NormalVector>>& decomposition,
                             const FundamentalReport& report);
bool check_coefficient_bound(const Triangulation& tri,
                             const std::vector<std::pair<Int, NormalVector>>& decomposition);

}  // namespace nsurf
