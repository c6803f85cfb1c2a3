#pragma once

#include <string>
#include <vector>

#include "arrcheck/rational.hpp"

namespace arrcheck {

/// Dense univariate polynomial over Q. Coefficient i belongs to t^i; the
/// vector never has a trailing zero, so the zero polynomial is the empty
/// vector and degree() == -1 for it.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(const Rational& constant) {
        if (!constant.is_zero()) c_.push_back(constant);
    }
    explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static QPoly variable() { return QPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    Rational coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[i];
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational constant_term() const { return coeff(0); }

    QPoly operator-() const {
        std::vector<Rational> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return QPoly(std::move(r));
    }

    QPoly operator+(const QPoly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return QPoly(std::move(r));
    }

    QPoly operator-(const QPoly& o) const { return *this + (-o); }

    QPoly operator*(const QPoly& o) const {
        if (is_zero() || o.is_zero()) return QPoly();
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        }
        return QPoly(std::move(r));
    }

    QPoly scale(const Rational& s) const {
        if (s.is_zero()) return QPoly();
        std::vector<Rational> r(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
        return QPoly(std::move(r));
    }

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return c_ != o.c_; }

    /// Quotient and remainder with deg(rem) < deg(divisor).
    std::pair<QPoly, QPoly> divmod(const QPoly& divisor) const {
        if (divisor.is_zero()) throw UsageError("polynomial division by zero");
        QPoly rem = *this;
        std::vector<Rational> quot;
        int dq = degree() - divisor.degree();
        if (dq < 0) return {QPoly(), rem};
        quot.assign(static_cast<std::size_t>(dq) + 1, Rational(0));
        Rational lead_inv = divisor.leading().reciprocal();
        while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
            int k = rem.degree() - divisor.degree();
            Rational q = rem.leading() * lead_inv;
            quot[static_cast<std::size_t>(k)] = q;
            // rem -= q * t^k * divisor
            for (int i = 0; i <= divisor.degree(); ++i)
                rem.c_[static_cast<std::size_t>(i + k)] -= q * divisor.c_[static_cast<std::size_t>(i)];
            rem.trim();
        }
        return {QPoly(std::move(quot)), rem};
    }

    /// True iff divisor divides this exactly.
    bool divisible_by(const QPoly& divisor) const { return divmod(divisor).second.is_zero(); }

    QPoly monic() const {
        if (is_zero()) return QPoly();
        return scale(leading().reciprocal());
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Monic gcd (Euclid); gcd(0,0) = 0.
    static QPoly gcd(QPoly a, QPoly b) {
        while (!b.is_zero()) {
            QPoly r = a.divmod(b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    /// Primitive integer form: scaled so all coefficients are coprime
    /// integers and the leading coefficient is positive. Zero stays zero.
    QPoly primitive() const {
        if (is_zero()) return QPoly();
        BigInt den(1);
        for (const auto& c : c_) den = lcm_big(den, c.denominator());
        BigInt num(0);
        for (const auto& c : c_) num = gcd_big(num, c.numerator() * (den / c.denominator()));
        Rational s = Rational(den, num);
        if (leading().sign() < 0) s = -s;
        return scale(s);
    }

    std::string to_string(const std::string& symbol = "t") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

}  // namespace arrcheck
