#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "arrcheck/qpoly.hpp"
#include "arrcheck/rational.hpp"

namespace arrcheck {

/// Degree cap for canonical rational-function numerators/denominators.
/// Exceeding it raises BoundExceededError instead of thrashing.
int rational_function_degree_cap();
void set_rational_function_degree_cap(int cap);

class FieldDescriptor;
using FieldPtr = std::shared_ptr<const FieldDescriptor>;

/// Identifies one of the three supported coefficient fields:
/// Q, a quadratic extension Q(e) with e^2 = p*e + q, or Q(t).
/// Immutable; scalars share descriptors by pointer.
class FieldDescriptor {
  public:
    enum class Kind { rationals, quadratic, rational_functions };

    static FieldPtr rationals();
    /// Requires X^2 - pX - q irreducible over Q (p^2 + 4q not a square).
    static FieldPtr quadratic(const Rational& p, const Rational& q);
    static FieldPtr rational_functions(const std::string& parameter = "t");

    Kind kind() const { return kind_; }
    const Rational& quad_p() const { return p_; }
    const Rational& quad_q() const { return q_; }
    const std::string& parameter() const { return parameter_; }

    bool same(const FieldDescriptor& o) const {
        if (this == &o) return true;
        if (kind_ != o.kind_) return false;
        if (kind_ == Kind::quadratic) return p_ == o.p_ && q_ == o.q_;
        if (kind_ == Kind::rational_functions) return parameter_ == o.parameter_;
        return true;
    }

    std::string to_string() const;

  private:
    FieldDescriptor(Kind kind, Rational p, Rational q, std::string parameter)
        : kind_(kind), p_(std::move(p)), q_(std::move(q)), parameter_(std::move(parameter)) {}

    Kind kind_;
    Rational p_, q_;        // quadratic only
    std::string parameter_; // rational_functions only
};

/// a + b*e with e^2 = p*e + q taken from the owning descriptor.
struct QuadElem {
    Rational a, b;
    bool operator==(const QuadElem& o) const { return a == o.a && b == o.b; }
};

/// Canonical fraction of univariate polynomials: coprime, monic denominator.
class RationalFunction {
  public:
    RationalFunction() : den_(Rational(1)) {}
    explicit RationalFunction(const QPoly& num) : num_(num), den_(Rational(1)) {}
    RationalFunction(QPoly num, QPoly den);

    const QPoly& numerator() const { return num_; }
    const QPoly& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction reciprocal() const;

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    /// Exact value at t = t0; requires den(t0) != 0.
    Rational eval(const Rational& t0) const;

    std::string to_string(const std::string& symbol = "t") const;

  private:
    QPoly num_, den_;
};

/// Exact element of the field named by its descriptor. Closed under
/// +, -, *, inverse-of-nonzero; every operation returns canonical form.
class FieldScalar {
  public:
    FieldScalar() : desc_(nullptr) {}

    static FieldScalar zero(const FieldPtr& f) { return from_rational(f, Rational(0)); }
    static FieldScalar one(const FieldPtr& f) { return from_rational(f, Rational(1)); }
    static FieldScalar from_int(const FieldPtr& f, long n) { return from_rational(f, Rational(n)); }
    /// Embeds a rational constant into any of the three fields.
    static FieldScalar from_rational(const FieldPtr& f, const Rational& r);
    /// e for quadratic fields, t for rational-function fields.
    static FieldScalar generator(const FieldPtr& f);
    static FieldScalar quadratic(const FieldPtr& f, Rational a, Rational b);
    static FieldScalar function(const FieldPtr& f, RationalFunction rf);

    const FieldPtr& field() const { return desc_; }
    FieldDescriptor::Kind kind() const { return desc_->kind(); }

    bool is_zero() const;
    bool is_one() const;

    FieldScalar operator-() const;
    FieldScalar operator+(const FieldScalar& o) const;
    FieldScalar operator-(const FieldScalar& o) const;
    FieldScalar operator*(const FieldScalar& o) const;
    /// Multiplicative inverse; throws UsageError on zero.
    FieldScalar inverse() const;
    FieldScalar operator/(const FieldScalar& o) const { return *this * o.inverse(); }

    FieldScalar& operator+=(const FieldScalar& o) { return *this = *this + o; }
    FieldScalar& operator-=(const FieldScalar& o) { return *this = *this - o; }
    FieldScalar& operator*=(const FieldScalar& o) { return *this = *this * o; }

    bool operator==(const FieldScalar& o) const;
    bool operator!=(const FieldScalar& o) const { return !(*this == o); }

    /// Total order within one field; only used for deterministic grouping.
    int compare(const FieldScalar& o) const;
    bool operator<(const FieldScalar& o) const { return compare(o) < 0; }

    const Rational& rational_value() const;
    const QuadElem& quad_value() const;
    const RationalFunction& function_value() const;

    /// Specialization Q(t) -> Q at t = t0 (denominator must not vanish).
    /// Rationals pass through; quadratic scalars are rejected.
    Rational eval_at(const Rational& t0) const;

    std::string to_string() const;

  private:
    FieldScalar(FieldPtr f, std::variant<Rational, QuadElem, RationalFunction> v)
        : desc_(std::move(f)), value_(std::move(v)) {}

    void require_same_field(const FieldScalar& o) const;

    FieldPtr desc_;
    std::variant<Rational, QuadElem, RationalFunction> value_;
};

/// Deterministic pseudo-random nonzero scalar; over Q(t) the result is a
/// rational constant outside {0, 1}, usable as a specialization value.
FieldScalar sample(const FieldPtr& f, std::uint64_t seed);

/// A scalar s such that {s * v_i} has integral primitive components
/// (denominators cleared, collective content 1). Over Q and Q(e) the factor
/// is a positive rational; over Q(t) it is a monic-over-monic quotient times
/// a positive rational. All-zero input yields 1.
FieldScalar primitive_factor(const FieldPtr& f, const std::vector<FieldScalar>& v);

}  // namespace arrcheck
