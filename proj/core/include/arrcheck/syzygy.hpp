#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arrcheck/arrangement.hpp"
#include "arrcheck/linalg.hpp"

namespace arrcheck {

enum class CurveClassKind {
    free_curve,
    nearly_free,
    minimal_plus_one_generated,
    plus_one_generated,
    m_syzygy,
    unclassified,
};

/// "free", "nearly_free", ..., "4-syzygy" for the generic bucket.
std::string curve_class_name(CurveClassKind k, int m);

/// A degree-r triple (a, b, c) with a*fx + b*fy + c*fz = 0; membership is
/// re-checked exactly on construction, independent of the elimination code.
struct RelationVector {
    HomPoly a, b, c;
    RelationVector(HomPoly a, HomPoly b, HomPoly c, const HomPoly& f);
};

/// Per-degree structure of the Jacobian relation module of one curve.
struct SyzygyProfile {
    int d = 0;
    long tau = 0;
    std::vector<int> dims;          // dims[r] = dim AR(f)_r, 0 <= r <= search_limit
    int mdr = -1;
    std::vector<int> exponents;     // minimal generator degrees <= search_limit
    std::optional<int> delta_level; // d3 - d2 when exactly three generators
    CurveClassKind curve_class = CurveClassKind::unclassified;
    int search_limit = 0;           // generator degrees beyond it were not examined
    bool kernel_checked = false;    // re-substitution ran on the reported kernels

    int generator_count() const { return static_cast<int>(exponents.size()); }
};

/// Matrix of (a, b, c) |-> a*fx + b*fy + c*fz on degree-r coefficient
/// triples: C(r+d+1, 2) rows, 3*C(r+2, 2) columns; kernel = AR(f)_r.
ScalarMatrix relation_matrix(const HomPoly& f, int r);

/// dim AR(f)_r = 3*C(r+2,2) - rank(relation_matrix(f, r)).
int relation_dim(const HomPoly& f, int r);

/// Least r with a nonzero relation; at most d-1 (Koszul relations).
int mdr(const HomPoly& f);

/// Kernel basis of the degree-r relation matrix, each vector reassembled
/// into a verified relation triple.
std::vector<RelationVector> relation_basis(const HomPoly& f, int r);

/// Minimal generator degrees of the relation module up to r_max, with
/// multiplicity, via graded Nakayama (new generators in degree r =
/// dim AR_r - dim S_1 * AR_{r-1}). Requires r_max >= d-1.
std::vector<int> minimal_generator_degrees(const HomPoly& f, int r_max);

/// Default generator-search bound: 2d - 2.
int default_search_limit(int d);

/// Full profile and classification for an arrangement; r_max = 0 means the
/// default bound. Structural (exponents) and numerical (Tjurina identities)
/// routes are cross-validated and disagreement raises InternalCheckError.
SyzygyProfile classify(const Arrangement& arr, int r_max = 0);

struct GenericMdrResult {
    int mdr;
    /// A minimal-degree relation over Q(t), verified by re-substitution.
    std::array<HomPoly, 3> witness;
};

/// mdr over the rational-function field by fraction-free elimination.
GenericMdrResult mdr_generic(const Arrangement& arr);

}  // namespace arrcheck
