#pragma once

// Internal fraction-free elimination engine. Rows live in an integral model
// of the coefficient field (Z, a quadratic integer ring, or Q[t]); every row
// update is a cross-multiplication followed by exact content removal, so no
// entry is ever rounded. A checked __int128 instantiation handles the common
// case; arithmetic that outgrows it signals Overflow and the caller reruns
// the same deterministic pivot sequence over GMP integers.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "arrcheck/field.hpp"
#include "arrcheck/linalg.hpp"
#include "arrcheck/qpoly.hpp"

namespace arrcheck::detail {

struct Overflow {};

// ---------------------------------------------------------------------------
// Checked 128-bit integers

struct C128 {
    __int128 v = 0;
    C128() = default;
    C128(long x) : v(x) {}  // NOLINT
};

inline bool is_zero_elem(const C128& x) { return x.v == 0; }
inline bool is_zero_elem(const mpz_class& x) { return sgn(x) == 0; }

inline C128 mul_elem(const C128& a, const C128& b) {
    C128 r;
    if (__builtin_mul_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
}
inline mpz_class mul_elem(const mpz_class& a, const mpz_class& b) { return a * b; }

inline C128 add_elem(const C128& a, const C128& b) {
    C128 r;
    if (__builtin_add_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
}
inline mpz_class add_elem(const mpz_class& a, const mpz_class& b) { return a + b; }

inline C128 sub_elem(const C128& a, const C128& b) {
    C128 r;
    if (__builtin_sub_overflow(a.v, b.v, &r.v)) throw Overflow{};
    return r;
}
inline mpz_class sub_elem(const mpz_class& a, const mpz_class& b) { return a - b; }

// x = x*p - m*y
inline void fused_elem(C128& x, const C128& p, const C128& m, const C128& y) {
    x = sub_elem(mul_elem(x, p), mul_elem(m, y));
}
inline void fused_elem(mpz_class& x, const mpz_class& p, const mpz_class& m, const mpz_class& y) {
    x *= p;
    mpz_submul(x.get_mpz_t(), m.get_mpz_t(), y.get_mpz_t());
}

inline C128 gcd_elem(const C128& a, const C128& b) {
    unsigned __int128 x = a.v < 0 ? -static_cast<unsigned __int128>(a.v) : a.v;
    unsigned __int128 y = b.v < 0 ? -static_cast<unsigned __int128>(b.v) : b.v;
    while (y != 0) {
        unsigned __int128 t = x % y;
        x = y;
        y = t;
    }
    C128 r;
    r.v = static_cast<__int128>(x);
    return r;
}
inline mpz_class gcd_elem(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline void divexact_elem(C128& x, const C128& g) { x.v /= g.v; }
inline void divexact_elem(mpz_class& x, const mpz_class& g) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

inline bool is_one_elem(const C128& g) { return g.v == 1; }
inline bool is_one_elem(const mpz_class& g) { return g == 1; }

inline long bits_elem(const C128& x) {
    if (x.v == 0) return 0;
    unsigned __int128 u = x.v < 0 ? -static_cast<unsigned __int128>(x.v) : x.v;
    long bits = 0;
    while (u != 0) {
        u >>= 1;
        ++bits;
    }
    return bits;
}
inline long bits_elem(const mpz_class& x) {
    if (sgn(x) == 0) return 0;
    return static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2));
}

inline C128 int_from_mpz(const mpz_class& x, C128*) {
    if (mpz_sizeinbase(x.get_mpz_t(), 2) > 120) throw Overflow{};
    bool neg = sgn(x) < 0;
    mpz_class rest = abs(x);
    unsigned __int128 acc = 0;
    int shift = 0;
    while (sgn(rest) != 0) {
        unsigned long limb = mpz_class(rest & 0xFFFFFFFF).get_ui();
        acc |= static_cast<unsigned __int128>(limb) << shift;
        rest >>= 32;
        shift += 32;
    }
    C128 r;
    r.v = neg ? -static_cast<__int128>(acc) : static_cast<__int128>(acc);
    return r;
}
inline mpz_class int_from_mpz(const mpz_class& x, mpz_class*) { return x; }

inline mpz_class mpz_from_int(const C128& x) {
    bool neg = x.v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x.v) : x.v;
    mpz_class acc = 0;
    int shift = 0;
    while (u != 0) {
        mpz_class limb(static_cast<unsigned long>(u & 0xFFFFFFFFULL));
        acc += limb << shift;
        u >>= 32;
        shift += 32;
    }
    return neg ? mpz_class(-acc) : acc;
}
inline const mpz_class& mpz_from_int(const mpz_class& x) { return x; }

// ---------------------------------------------------------------------------
// Plain integers (field Q)

template <class I>
struct ZOps {
    using Elem = I;
    FieldPtr field;

    static bool is_zero(const Elem& e) { return is_zero_elem(e); }
    static Elem zero() { return Elem(); }
    static void fused(Elem& x, const Elem& p, const Elem& m, const Elem& y) {
        fused_elem(x, p, m, y);
    }
    static void reduce_pair(Elem& p, Elem& m) {
        Elem g = gcd_elem(p, m);
        if (!is_one_elem(g) && !is_zero_elem(g)) {
            divexact_elem(p, g);
            divexact_elem(m, g);
        }
    }
    static void strip_row(std::vector<Elem>& row) {
        Elem g = zero();
        for (const Elem& e : row) {
            if (is_zero_elem(e)) continue;
            g = gcd_elem(g, e);
            if (is_one_elem(g)) return;
        }
        if (is_zero_elem(g) || is_one_elem(g)) return;
        for (Elem& e : row)
            if (!is_zero_elem(e)) divexact_elem(e, g);
    }
    static long metric(const Elem& e) { return bits_elem(e); }

    FieldScalar to_field(const Elem& e) const {
        return FieldScalar::from_rational(field, Rational(mpz_from_int(e)));
    }

    std::vector<Elem> row_from_scalars(const std::vector<FieldScalar>& row) const {
        BigInt den(1);
        for (const auto& s : row) den = lcm_big(den, s.rational_value().denominator());
        std::vector<Elem> out(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            const Rational& r = row[j].rational_value();
            out[j] = int_from_mpz(BigInt(r.numerator() * (den / r.denominator())),
                                  static_cast<Elem*>(nullptr));
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Quadratic integer model Z[B], B^2 = P*B + Q (B = lambda * e)

template <class I>
struct QuadOps {
    struct Elem {
        I a{}, b{};
    };
    FieldPtr field;
    I P{}, Q{};
    Rational lambda{1};

    static bool is_zero(const Elem& e) { return is_zero_elem(e.a) && is_zero_elem(e.b); }
    static Elem zero() { return Elem{}; }

    Elem mul(const Elem& u, const Elem& v) const {
        I bb = mul_elem(u.b, v.b);
        Elem r;
        r.a = add_elem(mul_elem(u.a, v.a), mul_elem(Q, bb));
        r.b = add_elem(add_elem(mul_elem(u.a, v.b), mul_elem(u.b, v.a)), mul_elem(P, bb));
        return r;
    }
    void fused(Elem& x, const Elem& p, const Elem& m, const Elem& y) const {
        Elem xp = mul(x, p);
        Elem my = mul(m, y);
        x.a = sub_elem(xp.a, my.a);
        x.b = sub_elem(xp.b, my.b);
    }
    static void reduce_pair(Elem&, Elem&) {}
    static void strip_row(std::vector<Elem>& row) {
        I g{};
        for (const Elem& e : row) {
            g = gcd_elem(g, e.a);
            g = gcd_elem(g, e.b);
            if (is_one_elem(g)) return;
        }
        if (is_zero_elem(g) || is_one_elem(g)) return;
        for (Elem& e : row) {
            if (!is_zero_elem(e.a)) divexact_elem(e.a, g);
            if (!is_zero_elem(e.b)) divexact_elem(e.b, g);
        }
    }
    static long metric(const Elem& e) { return std::max(bits_elem(e.a), bits_elem(e.b)); }

    FieldScalar to_field(const Elem& e) const {
        return FieldScalar::quadratic(field, Rational(mpz_from_int(e.a)),
                                      Rational(mpz_from_int(e.b)) * lambda);
    }

    std::vector<Elem> row_from_scalars(const std::vector<FieldScalar>& row) const {
        BigInt den(1);
        std::vector<std::pair<Rational, Rational>> comps(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            const QuadElem& q = row[j].quad_value();
            comps[j] = {q.a, q.b / lambda};
            den = lcm_big(den, comps[j].first.denominator());
            den = lcm_big(den, comps[j].second.denominator());
        }
        std::vector<Elem> out(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            const auto& [ra, rb] = comps[j];
            out[j].a = int_from_mpz(BigInt(ra.numerator() * (den / ra.denominator())),
                                    static_cast<I*>(nullptr));
            out[j].b = int_from_mpz(BigInt(rb.numerator() * (den / rb.denominator())),
                                    static_cast<I*>(nullptr));
        }
        return out;
    }
};

/// Integral quadratic model for a descriptor with rational (p, q):
/// B = lambda*e with lambda = lcm(den p, den q), so B^2 = P B + Q over Z.
struct QuadModel {
    BigInt P, Q;
    Rational lambda;
    static QuadModel of(const FieldDescriptor& f) {
        BigInt l = lcm_big(f.quad_p().denominator(), f.quad_q().denominator());
        Rational lam(l);
        Rational P = f.quad_p() * lam;
        Rational Q = f.quad_q() * lam * lam;
        return QuadModel{P.numerator(), Q.numerator(), lam};
    }
};

// ---------------------------------------------------------------------------
// Q[t] rows

struct PolyOps {
    using Elem = QPoly;
    FieldPtr field;

    static bool is_zero(const Elem& e) { return e.is_zero(); }
    static Elem zero() { return QPoly(); }
    static void fused(Elem& x, const Elem& p, const Elem& m, const Elem& y) {
        x = x * p - m * y;
    }
    static void reduce_pair(Elem& p, Elem& m) {
        QPoly g = QPoly::gcd(p, m);
        if (!g.is_one() && !g.is_zero()) {
            p = p.divmod(g).first;
            m = m.divmod(g).first;
        }
    }
    static void strip_row(std::vector<Elem>& row) {
        QPoly g;
        for (const Elem& e : row) {
            if (e.is_zero()) continue;
            g = QPoly::gcd(g, e);
            if (g.is_one()) break;
        }
        if (!g.is_zero() && !g.is_one())
            for (Elem& e : row)
                if (!e.is_zero()) e = e.divmod(g).first;
        // primitive rational content across the row
        BigInt den(1), num(0);
        for (const Elem& e : row)
            for (int i = 0; i <= e.degree(); ++i) den = lcm_big(den, e.coeff(i).denominator());
        for (const Elem& e : row)
            for (int i = 0; i <= e.degree(); ++i)
                num = gcd_big(num, e.coeff(i).numerator() * (den / e.coeff(i).denominator()));
        if (num != 0 && !(den == 1 && num == 1)) {
            Rational s(den, num);
            for (Elem& e : row)
                if (!e.is_zero()) e = e.scale(s);
        }
    }
    static long metric(const Elem& e) {
        if (e.is_zero()) return 0;
        long coeff_bits = 0;
        for (int i = 0; i <= e.degree(); ++i)
            coeff_bits = std::max(coeff_bits, bits_elem(e.coeff(i).numerator()) +
                                                  bits_elem(e.coeff(i).denominator()));
        return static_cast<long>(e.degree() + 1) * 4096 + coeff_bits;
    }

    FieldScalar to_field(const Elem& e) const {
        return FieldScalar::function(field, RationalFunction(e));
    }

    std::vector<Elem> row_from_scalars(const std::vector<FieldScalar>& row) const {
        QPoly den{Rational(1)};
        for (const auto& s : row) {
            const RationalFunction& rf = s.function_value();
            QPoly g = QPoly::gcd(den, rf.denominator());
            den = den * rf.denominator().divmod(g).first;
        }
        std::vector<Elem> out(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) {
            const RationalFunction& rf = row[j].function_value();
            out[j] = rf.numerator() * den.divmod(rf.denominator()).first;
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// The engine

template <class Ops>
class FracFree {
  public:
    using E = typename Ops::Elem;

    FracFree(Ops ops, std::vector<std::vector<E>> rows, int cols)
        : ops_(std::move(ops)), m_(std::move(rows)), cols_(cols) {}

    int rows() const { return static_cast<int>(m_.size()); }

    /// Column-by-column forward elimination; deterministic pivot rule:
    /// smallest metric, then lowest row index.
    void forward() {
        int n = rows();
        used_.assign(static_cast<std::size_t>(n), 0);
        pivots_.clear();
        free_cols_.clear();
        for (int c = 0; c < cols_; ++c) {
            int best = -1;
            long best_metric = 0;
            for (int r = 0; r < n; ++r) {
                if (used_[static_cast<std::size_t>(r)] ||
                    ops_.is_zero(m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]))
                    continue;
                long met = ops_.metric(m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
                if (best < 0 || met < best_metric) {
                    best = r;
                    best_metric = met;
                }
            }
            if (best < 0) {
                free_cols_.push_back(c);
                continue;
            }
            used_[static_cast<std::size_t>(best)] = 1;
            pivots_.emplace_back(c, best);
            for (int r = 0; r < n; ++r) {
                if (used_[static_cast<std::size_t>(r)] ||
                    ops_.is_zero(m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]))
                    continue;
                eliminate(r, best, c);
            }
        }
    }

    int rank() const { return static_cast<int>(pivots_.size()); }
    const std::vector<int>& free_cols() const { return free_cols_; }

    /// Clears pivot columns above each pivot; afterwards a pivot row is
    /// supported on its pivot column and the free columns to its right.
    void back_eliminate() {
        for (int i = static_cast<int>(pivots_.size()) - 1; i >= 0; --i) {
            auto [c, rp] = pivots_[static_cast<std::size_t>(i)];
            for (int k = 0; k < i; ++k) {
                int r = pivots_[static_cast<std::size_t>(k)].second;
                if (!ops_.is_zero(m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]))
                    eliminate(r, rp, c);
            }
        }
    }

    /// Kernel basis; call after forward() + back_eliminate().
    std::vector<std::vector<FieldScalar>> kernel() const {
        std::vector<std::vector<FieldScalar>> basis;
        basis.reserve(free_cols_.size());
        FieldScalar zero = FieldScalar::zero(ops_.field);
        for (int f : free_cols_) {
            std::vector<FieldScalar> v(static_cast<std::size_t>(cols_), zero);
            v[static_cast<std::size_t>(f)] = FieldScalar::one(ops_.field);
            for (const auto& [c, rp] : pivots_) {
                if (c > f) continue;
                const E& e = m_[static_cast<std::size_t>(rp)][static_cast<std::size_t>(f)];
                if (ops_.is_zero(e)) continue;
                v[static_cast<std::size_t>(c)] =
                    -(ops_.to_field(e) /
                      ops_.to_field(m_[static_cast<std::size_t>(rp)][static_cast<std::size_t>(c)]));
            }
            basis.push_back(primitive_vector(std::move(v)));
        }
        return basis;
    }

  private:
    void eliminate(int r, int rp, int c) {
        E p = m_[static_cast<std::size_t>(rp)][static_cast<std::size_t>(c)];
        E q = m_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        ops_.reduce_pair(p, q);
        auto& row = m_[static_cast<std::size_t>(r)];
        const auto& prow = m_[static_cast<std::size_t>(rp)];
        for (int j = c; j < cols_; ++j)
            ops_.fused(row[static_cast<std::size_t>(j)], p, q, prow[static_cast<std::size_t>(j)]);
        row[static_cast<std::size_t>(c)] = Ops::zero();
        Ops::strip_row(row);
    }

    Ops ops_;
    std::vector<std::vector<E>> m_;
    int cols_;
    std::vector<char> used_;
    std::vector<std::pair<int, int>> pivots_;  // (col, row) in discovery order
    std::vector<int> free_cols_;
};

/// Runs fn with the ops object matching the field, preferring the checked
/// 128-bit integer model and rerunning over GMP when arithmetic overflows.
template <class Fn>
auto dispatch_field(const FieldPtr& f, Fn&& fn) {
    switch (f->kind()) {
        case FieldDescriptor::Kind::rationals:
            try {
                return fn(ZOps<C128>{f});
            } catch (const Overflow&) {
                return fn(ZOps<mpz_class>{f});
            }
        case FieldDescriptor::Kind::quadratic: {
            QuadModel model = QuadModel::of(*f);
            try {
                QuadOps<C128> ops{f, int_from_mpz(model.P, static_cast<C128*>(nullptr)),
                                  int_from_mpz(model.Q, static_cast<C128*>(nullptr)), model.lambda};
                return fn(ops);
            } catch (const Overflow&) {
                QuadOps<mpz_class> ops{f, model.P, model.Q, model.lambda};
                return fn(ops);
            }
        }
        case FieldDescriptor::Kind::rational_functions:
            return fn(PolyOps{f});
    }
    throw UsageError("unknown field kind");
}

/// Incremental fraction-free echelon; used for span ranks with early exit.
template <class Ops>
class IncrementalEchelon {
  public:
    using E = typename Ops::Elem;
    IncrementalEchelon(Ops ops, int cols) : ops_(std::move(ops)), cols_(cols) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    /// Reduces v against the echelon; absorbs and returns true if v was
    /// independent of the current span.
    bool insert(std::vector<E> v) {
        for (int j = 0; j < cols_; ++j) {
            if (ops_.is_zero(v[static_cast<std::size_t>(j)])) continue;
            auto it = by_col_.find(j);
            if (it == by_col_.end()) {
                Ops::strip_row(v);
                by_col_[j] = static_cast<int>(rows_.size());
                rows_.push_back(std::move(v));
                return true;
            }
            const auto& prow = rows_[static_cast<std::size_t>(it->second)];
            E p = prow[static_cast<std::size_t>(j)];
            E q = v[static_cast<std::size_t>(j)];
            ops_.reduce_pair(p, q);
            for (int k = j; k < cols_; ++k)
                ops_.fused(v[static_cast<std::size_t>(k)], p, q, prow[static_cast<std::size_t>(k)]);
            v[static_cast<std::size_t>(j)] = Ops::zero();
        }
        return false;
    }

  private:
    Ops ops_;
    int cols_;
    std::vector<std::vector<E>> rows_;
    std::map<int, int> by_col_;
};

}  // namespace arrcheck::detail
