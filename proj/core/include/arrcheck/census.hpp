#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrcheck/rational.hpp"

namespace arrcheck {

/// Exact per-degree constraints for the double/triple census.
struct CensusBounds {
    int d = 0;
    int r_low = 0;    // ceil((2/3)d - 2)
    int r_high = 0;   // floor(d/2)
    Rational n3_low;  // (d^2 - 4d - 5)/4, kept exact
    long u3 = 0;      // packing upper bound on triple points
    int epsilon = 0;  // 1 iff d = 5 mod 6
};

/// Bounds for 3 <= d <= 12 (beyond 12 the mdr window is empty for good).
CensusBounds census_bounds(int d);

/// Exact rational (d^2 - 4d - 5)/4 for d >= 3.
Rational triple_lower_bound(int d);

/// Integer roots r of 2r^2 - 2r(d-1) + d^2 - 3d - 2 - 2*n3 = 0, as an
/// ordered pair; absent when the discriminant is not a perfect square or
/// the roots are not integral.
std::optional<std::pair<int, int>> discriminant_roots(int d, long n3);

enum class RejectReason {
    negative_n2,
    negative_n3,
    below_triple_bound,
    schonheim_exceeded,
    nodal_bound,
    no_admissible_mdr,
    bounds_infeasible,
};

std::string reject_reason_name(RejectReason r);

struct CensusTuple {
    int d = 0;
    long n2 = 0, n3 = 0;
    bool operator==(const CensusTuple& o) const { return d == o.d && n2 == o.n2 && n3 == o.n3; }
    bool operator<(const CensusTuple& o) const {
        if (d != o.d) return d < o.d;
        if (n3 != o.n3) return n3 < o.n3;
        return n2 < o.n2;
    }
    std::string to_string() const {
        return "(" + std::to_string(d) + "; " + std::to_string(n2) + ", " + std::to_string(n3) +
               ")";
    }
};

struct CensusRow {
    int d = 0;
    std::optional<int> r;  // absent for degree-level rejections
    long n2 = 0, n3 = 0;   // meaningful when r is present
    bool accepted = false;
    std::vector<RejectReason> reasons;
    std::optional<std::string> realization;  // builtin name for accepted tuples
    std::string detail;                      // human-readable reason text
};

struct CensusResult {
    std::vector<CensusRow> rows;        // ordered by d, degree-level row first
    std::vector<CensusTuple> accepted;  // deduplicated, sorted by d then n3
};

/// Degree-by-degree enumeration of candidate weak-combinatorics for minimal
/// plus-one generated arrangements with only double and triple points.
/// reverse_r_loop only reverses the inner scan; the result must not change.
CensusResult enumerate_mpog_candidates(int max_degree = 12, bool reverse_r_loop = false);

/// The four survivors: (6;9,2), (7;9,4), (8;7,7), (9;6,10).
const std::vector<CensusTuple>& reference_census();

}  // namespace arrcheck
