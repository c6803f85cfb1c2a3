#pragma once

#include <array>
#include <vector>

#include "arrcheck/field.hpp"

namespace arrcheck {

/// dim of the space of degree-k monomials in x, y, z: C(k+2, 2).
inline int monomial_basis_size(int k) {
    if (k < 0) throw UsageError("negative degree");
    return (k + 1) * (k + 2) / 2;
}

/// Monomial x^a y^b z^c. Within a fixed degree the basis is ordered
/// graded-reverse-lexicographically (x^k first, z^k last); this order is
/// frozen artifact-wide and shared by matrix assembly and every oracle.
struct Monomial {
    int a = 0, b = 0, c = 0;

    int degree() const { return a + b + c; }

    /// Position within the degree() basis.
    int index() const {
        int k = degree();
        return c * (2 * k + 3 - c) / 2 + b;
    }

    static Monomial from_index(int degree, int index);

    Monomial operator*(const Monomial& o) const { return {a + o.a, b + o.b, c + o.c}; }
    bool operator==(const Monomial& o) const { return a == o.a && b == o.b && c == o.c; }
};

/// Dense homogeneous polynomial of fixed degree over one coefficient field.
/// The all-zero vector is a valid value (the zero polynomial of that degree).
class HomPoly {
  public:
    HomPoly(FieldPtr field, int degree)
        : desc_(std::move(field)),
          degree_(degree),
          coef_(static_cast<std::size_t>(monomial_basis_size(degree)), FieldScalar::zero(desc_)) {}

    static HomPoly linear_form(const FieldPtr& f, const FieldScalar& a, const FieldScalar& b,
                               const FieldScalar& c);
    static HomPoly constant(const FieldPtr& f, const FieldScalar& value);

    int degree() const { return degree_; }
    const FieldPtr& field() const { return desc_; }
    int terms() const { return static_cast<int>(coef_.size()); }

    const FieldScalar& coeff(int index) const { return coef_[static_cast<std::size_t>(index)]; }
    const FieldScalar& coeff(const Monomial& m) const;
    void set_coeff(const Monomial& m, const FieldScalar& v);
    void set_coeff(int index, const FieldScalar& v) { coef_[static_cast<std::size_t>(index)] = v; }

    bool is_zero() const;

    HomPoly operator+(const HomPoly& o) const;
    HomPoly operator-(const HomPoly& o) const;
    HomPoly scale(const FieldScalar& s) const;
    /// Exact product; degrees add.
    HomPoly operator*(const HomPoly& o) const;
    bool operator==(const HomPoly& o) const;

    /// Formal partial derivative; var is 0 (x), 1 (y) or 2 (z).
    /// Degree must be >= 1.
    HomPoly partial_derivative(int var) const;

    HomPoly multiply_by_monomial(const Monomial& m) const;

    FieldScalar eval(const FieldScalar& x, const FieldScalar& y, const FieldScalar& z) const;

    /// Scalar multiple with "integral primitive" coefficients (denominators
    /// cleared, common content removed). Same projective zero set.
    HomPoly primitive() const;

    /// Coefficient-wise specialization of a Q(t) polynomial at t = t0.
    HomPoly specialize(const Rational& t0) const;

    std::string to_string() const;

  private:
    FieldPtr desc_;
    int degree_;
    std::vector<FieldScalar> coef_;
};

/// The three partials of a degree-d curve equation, each of degree d-1.
struct JacobianTriple {
    HomPoly fx, fy, fz;

    static JacobianTriple of(const HomPoly& f);

    /// x*fx + y*fy + z*fz == d*f, checked exactly.
    static bool euler_holds(const HomPoly& f);
};

/// Defining polynomial of an arrangement: the product of its linear forms.
/// Each triple must be non-zero; an empty list is a usage error.
HomPoly product_of_linear_forms(const FieldPtr& f,
                                const std::vector<std::array<FieldScalar, 3>>& lines);

}  // namespace arrcheck
