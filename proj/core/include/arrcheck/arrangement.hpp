#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arrcheck/hompoly.hpp"

namespace arrcheck {

/// A projective line a*x + b*y + c*z = 0, stored canonically with its first
/// nonzero coefficient scaled to 1, so equality of triples is equality of
/// lines. Construction rejects the zero form.
class Line {
  public:
    Line(const FieldScalar& a, const FieldScalar& b, const FieldScalar& c);

    const FieldScalar& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::array<FieldScalar, 3>& coeffs() const { return c_; }

    bool operator==(const Line& o) const { return c_ == o.c_; }
    bool operator!=(const Line& o) const { return !(*this == o); }
    int compare(const Line& o) const;

    FieldScalar eval(const std::array<FieldScalar, 3>& point) const {
        return c_[0] * point[0] + c_[1] * point[1] + c_[2] * point[2];
    }

  private:
    std::array<FieldScalar, 3> c_;
};

/// A reduced arrangement: d >= 1 pairwise distinct lines over one field.
class Arrangement {
  public:
    Arrangement(FieldPtr field, std::vector<Line> lines);

    int d() const { return static_cast<int>(lines_.size()); }
    const FieldPtr& field() const { return desc_; }
    const Line& line(int i) const { return lines_[static_cast<std::size_t>(i)]; }
    const std::vector<Line>& lines() const { return lines_; }

    /// Product of the linear forms, scaled to integral primitive
    /// coefficients. Same curve, friendlier arithmetic.
    HomPoly defining_polynomial() const;

  private:
    FieldPtr desc_;
    std::vector<Line> lines_;
};

/// Intersection point with its sorted set of incident line indices (m >= 2).
/// Coordinates are canonical: first nonzero coordinate scaled to 1.
struct IntersectionPoint {
    std::array<FieldScalar, 3> coords;
    std::vector<int> lines;
    int multiplicity() const { return static_cast<int>(lines.size()); }
};

/// The common zero of two non-proportional lines, canonically normalized.
std::array<FieldScalar, 3> intersect(const Line& a, const Line& b);

/// All pairwise intersections grouped by exact projective equality.
/// Verifies the count identity sum C(m_p, 2) = C(d, 2) before returning.
std::vector<IntersectionPoint> singular_points(const Arrangement& arr);

/// (d; n_2, ..., n_m) with m the maximal multiplicity, plus the total
/// Tjurina number tau = sum (k-1)^2 * n_k of the ordinary singularities.
struct WeakCombinatorics {
    int d = 0;
    std::vector<long> counts;  // counts[i] = n_{i+2}; trailing zeros trimmed
    long tau = 0;

    long n(int k) const {
        int i = k - 2;
        if (i < 0 || i >= static_cast<int>(counts.size())) return 0;
        return counts[static_cast<std::size_t>(i)];
    }
    int max_multiplicity() const { return counts.empty() ? 1 : static_cast<int>(counts.size()) + 1; }
    /// The tuple (d; n_2, ..., n_m) as a flat vector.
    std::vector<long> tuple() const;
    bool operator==(const WeakCombinatorics& o) const { return d == o.d && counts == o.counts; }
    std::string to_string() const;
};

WeakCombinatorics weak_combinatorics(const Arrangement& arr);

/// True iff n_k = 0 for all k >= 4.
bool has_only_double_triple(const Arrangement& arr);

/// Incidence-structure isomorphism by backtracking over line bijections
/// with multiplicity pruning. Both arrangements must have d <= 12.
bool lattice_isomorphic(const Arrangement& a, const Arrangement& b);

/// Catalog: L6, L7, L8, L9, L9prime, Lt (the 9-line family, generic over
/// Q(t)). Lt with a rational parameter comes from builtin_lt.
Arrangement builtin(const std::string& name);
const std::vector<std::string>& builtin_names();

/// Specialization of the Lt family at a rational t0. Rejects t0 in {0, 1}
/// and verifies the result keeps 9 distinct lines with counts (9; 6, 10).
Arrangement builtin_lt(const Rational& t0);

}  // namespace arrcheck
