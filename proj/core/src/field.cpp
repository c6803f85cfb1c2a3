#include "arrcheck/field.hpp"

#include <atomic>
#include <random>
#include <sstream>

namespace arrcheck {

namespace {
std::atomic<int> g_rf_degree_cap{200};
}

int rational_function_degree_cap() { return g_rf_degree_cap.load(); }
void set_rational_function_degree_cap(int cap) {
    if (cap < 1) throw UsageError("degree cap must be positive");
    g_rf_degree_cap.store(cap);
}

std::string QPoly::to_string(const std::string& symbol) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) out << "-";
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        Rational a = c.sign() < 0 ? -c : c;
        if (i == 0) {
            out << a.to_string();
        } else {
            if (!a.is_one()) out << a.to_string() << "*";
            out << symbol;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// FieldDescriptor

FieldPtr FieldDescriptor::rationals() {
    static FieldPtr instance(
        new FieldDescriptor(Kind::rationals, Rational(0), Rational(0), ""));
    return instance;
}

FieldPtr FieldDescriptor::quadratic(const Rational& p, const Rational& q) {
    Rational disc = p * p + Rational(4) * q;
    if (disc.is_rational_square())
        throw UsageError("X^2 - (" + p.to_string() + ")X - (" + q.to_string() +
                         ") is reducible over Q; not a field extension");
    return FieldPtr(new FieldDescriptor(Kind::quadratic, p, q, ""));
}

FieldPtr FieldDescriptor::rational_functions(const std::string& parameter) {
    if (parameter.empty()) throw UsageError("parameter symbol must be nonempty");
    return FieldPtr(new FieldDescriptor(Kind::rational_functions, Rational(0), Rational(0), parameter));
}

std::string FieldDescriptor::to_string() const {
    switch (kind_) {
        case Kind::rationals:
            return "Q";
        case Kind::quadratic:
            return "Q(e), e^2 = " + (p_.is_zero() ? "" : p_.to_string() + "*e + ") + q_.to_string();
        case Kind::rational_functions:
            return "Q(" + parameter_ + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(QPoly num, QPoly den) {
    if (den.is_zero()) throw UsageError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = QPoly();
        den_ = QPoly(Rational(1));
        return;
    }
    QPoly g = QPoly::gcd(num, den);
    if (!g.is_one()) {
        num = num.divmod(g).first;
        den = den.divmod(g).first;
    }
    Rational lead_inv = den.leading().reciprocal();
    num_ = num.scale(lead_inv);
    den_ = den.scale(lead_inv);
    int cap = rational_function_degree_cap();
    if (num_.degree() > cap || den_.degree() > cap)
        throw BoundExceededError("rational function degree exceeds cap " + std::to_string(cap));
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw UsageError("inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

Rational RationalFunction::eval(const Rational& t0) const {
    Rational d = den_.eval(t0);
    if (d.is_zero())
        throw UsageError("specialization hits a pole: denominator vanishes at t = " + t0.to_string());
    return num_.eval(t0) / d;
}

std::string RationalFunction::to_string(const std::string& symbol) const {
    if (is_polynomial()) return num_.to_string(symbol);
    auto wrap = [&](const QPoly& p) {
        std::string s = p.to_string(symbol);
        if (p.degree() > 0 || s.find('/') != std::string::npos) return "(" + s + ")";
        return s;
    };
    return wrap(num_) + "/" + wrap(den_);
}

// ---------------------------------------------------------------------------
// FieldScalar

FieldScalar FieldScalar::from_rational(const FieldPtr& f, const Rational& r) {
    if (!f) throw UsageError("null field descriptor");
    switch (f->kind()) {
        case FieldDescriptor::Kind::rationals:
            return FieldScalar(f, r);
        case FieldDescriptor::Kind::quadratic:
            return FieldScalar(f, QuadElem{r, Rational(0)});
        case FieldDescriptor::Kind::rational_functions:
            return FieldScalar(f, RationalFunction(QPoly(r)));
    }
    throw UsageError("unknown field kind");
}

FieldScalar FieldScalar::generator(const FieldPtr& f) {
    if (!f) throw UsageError("null field descriptor");
    switch (f->kind()) {
        case FieldDescriptor::Kind::quadratic:
            return FieldScalar(f, QuadElem{Rational(0), Rational(1)});
        case FieldDescriptor::Kind::rational_functions:
            return FieldScalar(f, RationalFunction(QPoly::variable()));
        default:
            throw UsageError("field Q has no extension generator");
    }
}

FieldScalar FieldScalar::quadratic(const FieldPtr& f, Rational a, Rational b) {
    if (!f || f->kind() != FieldDescriptor::Kind::quadratic)
        throw UsageError("quadratic component constructor needs a quadratic field");
    return FieldScalar(f, QuadElem{std::move(a), std::move(b)});
}

FieldScalar FieldScalar::function(const FieldPtr& f, RationalFunction rf) {
    if (!f || f->kind() != FieldDescriptor::Kind::rational_functions)
        throw UsageError("function constructor needs a rational-function field");
    return FieldScalar(f, std::move(rf));
}

void FieldScalar::require_same_field(const FieldScalar& o) const {
    if (!desc_ || !o.desc_) throw UsageError("operation on uninitialized scalar");
    if (!desc_->same(*o.desc_))
        throw UsageError("field mismatch: " + desc_->to_string() + " vs " + o.desc_->to_string());
}

bool FieldScalar::is_zero() const {
    switch (kind()) {
        case FieldDescriptor::Kind::rationals:
            return std::get<Rational>(value_).is_zero();
        case FieldDescriptor::Kind::quadratic: {
            const auto& v = std::get<QuadElem>(value_);
            return v.a.is_zero() && v.b.is_zero();
        }
        case FieldDescriptor::Kind::rational_functions:
            return std::get<RationalFunction>(value_).is_zero();
    }
    return false;
}

bool FieldScalar::is_one() const {
    switch (kind()) {
        case FieldDescriptor::Kind::rationals:
            return std::get<Rational>(value_).is_one();
        case FieldDescriptor::Kind::quadratic: {
            const auto& v = std::get<QuadElem>(value_);
            return v.a.is_one() && v.b.is_zero();
        }
        case FieldDescriptor::Kind::rational_functions:
            return std::get<RationalFunction>(value_).is_one();
    }
    return false;
}

FieldScalar FieldScalar::operator-() const {
    switch (kind()) {
        case FieldDescriptor::Kind::rationals:
            return FieldScalar(desc_, -std::get<Rational>(value_));
        case FieldDescriptor::Kind::quadratic: {
            const auto& v = std::get<QuadElem>(value_);
            return FieldScalar(desc_, QuadElem{-v.a, -v.b});
        }
        case FieldDescriptor::Kind::rational_functions:
            return FieldScalar(desc_, -std::get<RationalFunction>(value_));
    }
    throw UsageError("unknown field kind");
}

FieldScalar FieldScalar::operator+(const FieldScalar& o) const {
    require_same_field(o);
    switch (kind()) {
        case FieldDescriptor::Kind::rationals:
            return FieldScalar(desc_, std::get<Rational>(value_) + std::get<Rational>(o.value_));
        case FieldDescriptor::Kind::quadratic: {
            const auto& x = std::get<QuadElem>(value_);
            const auto& y = std::get<QuadElem>(o.value_);
            return FieldScalar(desc_, QuadElem{x.a + y.a, x.b + y.b});
        }
        case FieldDescriptor::Kind::rational_functions:
            return FieldScalar(desc_, std::get<RationalFunction>(value_) + std::get<RationalFunction>(o.value_));
    }
    throw UsageError("unknown field kind");
}

FieldScalar FieldScalar::operator-(const FieldScalar& o) const { return *this + (-o); }

FieldScalar FieldScalar::operator*(const FieldScalar& o) const {
    require_same_field(o);
    switch (kind()) {
        case FieldDescriptor::Kind::rationals:
            return FieldScalar(desc_, std::get<Rational>(value_) * std::get<Rational>(o.value_));
        case FieldDescriptor::Kind::quadratic: {
            // (a1 + b1 e)(a2 + b2 e), e^2 = p e + q
            const auto& x = std::get<QuadElem>(value_);
            const auto& y = std::get<QuadElem>(o.value_);
            Rational bb = x.b * y.b;
            return FieldScalar(desc_, QuadElem{x.a * y.a + bb * desc_->quad_q(),
                                               x.a * y.b + x.b * y.a + bb * desc_->quad_p()});
        }
        case FieldDescriptor::Kind::rational_functions:
            return FieldScalar(desc_, std::get<RationalFunction>(value_) * std::get<RationalFunction>(o.value_));
    }
    throw UsageError("unknown field kind");
}

FieldScalar FieldScalar::inverse() const {
    if (is_zero()) throw UsageError("division by zero in " + desc_->to_string());
    switch (kind()) {
        case FieldDescriptor::Kind::rationals:
            return FieldScalar(desc_, std::get<Rational>(value_).reciprocal());
        case FieldDescriptor::Kind::quadratic: {
            // (a + b e)^-1 = (a + p b - b e) / (a^2 + p a b - q b^2)
            const auto& v = std::get<QuadElem>(value_);
            Rational norm = v.a * v.a + desc_->quad_p() * v.a * v.b - desc_->quad_q() * v.b * v.b;
            Rational inv = norm.reciprocal();
            return FieldScalar(desc_, QuadElem{(v.a + desc_->quad_p() * v.b) * inv, -v.b * inv});
        }
        case FieldDescriptor::Kind::rational_functions:
            return FieldScalar(desc_, std::get<RationalFunction>(value_).reciprocal());
    }
    throw UsageError("unknown field kind");
}

bool FieldScalar::operator==(const FieldScalar& o) const {
    require_same_field(o);
    return value_ == o.value_;
}

namespace {
int cmp_qpoly(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = a.coeff(i).compare(b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}
}  // namespace

int FieldScalar::compare(const FieldScalar& o) const {
    require_same_field(o);
    switch (kind()) {
        case FieldDescriptor::Kind::rationals:
            return std::get<Rational>(value_).compare(std::get<Rational>(o.value_));
        case FieldDescriptor::Kind::quadratic: {
            const auto& x = std::get<QuadElem>(value_);
            const auto& y = std::get<QuadElem>(o.value_);
            int c = x.a.compare(y.a);
            return c != 0 ? c : x.b.compare(y.b);
        }
        case FieldDescriptor::Kind::rational_functions: {
            const auto& x = std::get<RationalFunction>(value_);
            const auto& y = std::get<RationalFunction>(o.value_);
            int c = cmp_qpoly(x.numerator(), y.numerator());
            return c != 0 ? c : cmp_qpoly(x.denominator(), y.denominator());
        }
    }
    return 0;
}

const Rational& FieldScalar::rational_value() const {
    if (kind() != FieldDescriptor::Kind::rationals)
        throw UsageError("scalar is not a plain rational");
    return std::get<Rational>(value_);
}

const QuadElem& FieldScalar::quad_value() const {
    if (kind() != FieldDescriptor::Kind::quadratic)
        throw UsageError("scalar is not in a quadratic extension");
    return std::get<QuadElem>(value_);
}

const RationalFunction& FieldScalar::function_value() const {
    if (kind() != FieldDescriptor::Kind::rational_functions)
        throw UsageError("scalar is not a rational function");
    return std::get<RationalFunction>(value_);
}

Rational FieldScalar::eval_at(const Rational& t0) const {
    switch (kind()) {
        case FieldDescriptor::Kind::rationals:
            return std::get<Rational>(value_);
        case FieldDescriptor::Kind::rational_functions:
            return std::get<RationalFunction>(value_).eval(t0);
        default:
            throw UsageError("cannot specialize a quadratic-extension scalar to Q");
    }
}

std::string FieldScalar::to_string() const {
    switch (kind()) {
        case FieldDescriptor::Kind::rationals:
            return std::get<Rational>(value_).to_string();
        case FieldDescriptor::Kind::quadratic: {
            const auto& v = std::get<QuadElem>(value_);
            if (v.b.is_zero()) return v.a.to_string();
            std::string bs;
            Rational ab = v.b.sign() < 0 ? -v.b : v.b;
            if (ab.is_one())
                bs = "e";
            else
                bs = ab.to_string() + "*e";
            if (v.a.is_zero()) return (v.b.sign() < 0 ? "-" : "") + bs;
            return v.a.to_string() + (v.b.sign() < 0 ? " - " : " + ") + bs;
        }
        case FieldDescriptor::Kind::rational_functions:
            return std::get<RationalFunction>(value_).to_string(desc_->parameter());
    }
    return "?";
}

FieldScalar primitive_factor(const FieldPtr& f, const std::vector<FieldScalar>& v) {
    switch (f->kind()) {
        case FieldDescriptor::Kind::rationals: {
            BigInt den(1), num(0);
            for (const auto& s : v) den = lcm_big(den, s.rational_value().denominator());
            for (const auto& s : v) {
                const Rational& r = s.rational_value();
                num = gcd_big(num, r.numerator() * (den / r.denominator()));
            }
            if (num == 0) return FieldScalar::one(f);
            return FieldScalar::from_rational(f, Rational(den, num));
        }
        case FieldDescriptor::Kind::quadratic: {
            BigInt den(1), num(0);
            for (const auto& s : v) {
                const QuadElem& q = s.quad_value();
                den = lcm_big(den, q.a.denominator());
                den = lcm_big(den, q.b.denominator());
            }
            for (const auto& s : v) {
                const QuadElem& q = s.quad_value();
                num = gcd_big(num, q.a.numerator() * (den / q.a.denominator()));
                num = gcd_big(num, q.b.numerator() * (den / q.b.denominator()));
            }
            if (num == 0) return FieldScalar::one(f);
            return FieldScalar::from_rational(f, Rational(den, num));
        }
        case FieldDescriptor::Kind::rational_functions: {
            QPoly den{Rational(1)};
            for (const auto& s : v) {
                const RationalFunction& rf = s.function_value();
                QPoly g = QPoly::gcd(den, rf.denominator());
                den = den * rf.denominator().divmod(g).first;
            }
            QPoly content;
            std::vector<QPoly> cleared;
            cleared.reserve(v.size());
            for (const auto& s : v) {
                const RationalFunction& rf = s.function_value();
                cleared.push_back(rf.numerator() * den.divmod(rf.denominator()).first);
                content = QPoly::gcd(content, cleared.back());
            }
            if (content.is_zero()) return FieldScalar::one(f);
            BigInt iden(1), inum(0);
            for (const auto& p0 : cleared) {
                QPoly p = p0.divmod(content).first;
                for (int i = 0; i <= p.degree(); ++i) iden = lcm_big(iden, p.coeff(i).denominator());
            }
            for (const auto& p0 : cleared) {
                QPoly p = p0.divmod(content).first;
                for (int i = 0; i <= p.degree(); ++i)
                    inum = gcd_big(inum, p.coeff(i).numerator() * (iden / p.coeff(i).denominator()));
            }
            RationalFunction factor(den.scale(inum == 0 ? Rational(1) : Rational(iden, inum)), content);
            return FieldScalar::function(f, factor);
        }
    }
    return FieldScalar::one(f);
}

FieldScalar sample(const FieldPtr& f, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    auto draw = [&]() { return Rational(num(rng), den(rng)); };
    switch (f->kind()) {
        case FieldDescriptor::Kind::rationals: {
            Rational r = draw();
            while (r.is_zero()) r = draw();
            return FieldScalar::from_rational(f, r);
        }
        case FieldDescriptor::Kind::quadratic: {
            Rational a = draw(), b = draw();
            while (a.is_zero() && b.is_zero()) { a = draw(); b = draw(); }
            return FieldScalar::quadratic(f, a, b);
        }
        case FieldDescriptor::Kind::rational_functions: {
            // Constant outside {0, 1}: safe as a specialization parameter.
            Rational r = draw();
            while (r.is_zero() || r.is_one()) r = draw();
            return FieldScalar::from_rational(f, r);
        }
    }
    throw UsageError("unknown field kind");
}

}  // namespace arrcheck
