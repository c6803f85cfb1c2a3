#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "arrcheck/errors.hpp"

namespace arrcheck {

using BigInt = mpz_class;

/// Exact rational number, always in canonical form: denominator > 0 and
/// gcd(|num|, den) = 1. Backed by GMP.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}
    Rational(long num, long den) { assign(BigInt(num), BigInt(den)); }
    Rational(const BigInt& num, const BigInt& den) { assign(num, den); }

    static Rational from_mpq(const mpq_class& q) {
        Rational r;
        r.v_ = q;
        r.v_.canonicalize();
        return r;
    }

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return from_mpq(-v_); }
    Rational operator+(const Rational& o) const { return from_mpq(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return from_mpq(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return from_mpq(v_ * o.v_); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw UsageError("rational division by zero");
        return from_mpq(v_ / o.v_);
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational reciprocal() const {
        if (is_zero()) throw UsageError("rational inverse of zero");
        return from_mpq(1 / v_);
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    int compare(const Rational& o) const { return cmp(v_, o.v_); }

    /// True iff this is the square of some rational.
    bool is_rational_square() const {
        if (sign() < 0) return false;
        return mpz_perfect_square_p(v_.get_num().get_mpz_t()) != 0 &&
               mpz_perfect_square_p(v_.get_den().get_mpz_t()) != 0;
    }

    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

  private:
    void assign(const BigInt& num, const BigInt& den) {
        if (den == 0) throw UsageError("rational with zero denominator");
        v_ = mpq_class(num) / mpq_class(den);
        v_.canonicalize();
    }

    mpq_class v_;
};

inline BigInt gcd_big(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline long binomial2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace arrcheck
