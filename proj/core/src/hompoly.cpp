#include "arrcheck/hompoly.hpp"

#include <sstream>

namespace arrcheck {

Monomial Monomial::from_index(int degree, int index) {
    if (degree < 0 || index < 0 || index >= monomial_basis_size(degree))
        throw UsageError("monomial index out of range");
    int c = 0;
    while (index >= degree - c + 1) {
        index -= degree - c + 1;
        ++c;
    }
    return Monomial{degree - c - index, index, c};
}

HomPoly HomPoly::linear_form(const FieldPtr& f, const FieldScalar& a, const FieldScalar& b,
                             const FieldScalar& c) {
    HomPoly p(f, 1);
    p.set_coeff(Monomial{1, 0, 0}, a);
    p.set_coeff(Monomial{0, 1, 0}, b);
    p.set_coeff(Monomial{0, 0, 1}, c);
    return p;
}

HomPoly HomPoly::constant(const FieldPtr& f, const FieldScalar& value) {
    HomPoly p(f, 0);
    p.set_coeff(0, value);
    return p;
}

const FieldScalar& HomPoly::coeff(const Monomial& m) const {
    if (m.degree() != degree_) throw UsageError("monomial degree does not match polynomial degree");
    return coef_[static_cast<std::size_t>(m.index())];
}

void HomPoly::set_coeff(const Monomial& m, const FieldScalar& v) {
    if (m.degree() != degree_) throw UsageError("monomial degree does not match polynomial degree");
    coef_[static_cast<std::size_t>(m.index())] = v;
}

bool HomPoly::is_zero() const {
    for (const auto& c : coef_)
        if (!c.is_zero()) return false;
    return true;
}

HomPoly HomPoly::operator+(const HomPoly& o) const {
    if (degree_ != o.degree_) throw UsageError("adding polynomials of different degrees");
    HomPoly r(desc_, degree_);
    for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i] = coef_[i] + o.coef_[i];
    return r;
}

HomPoly HomPoly::operator-(const HomPoly& o) const {
    if (degree_ != o.degree_) throw UsageError("subtracting polynomials of different degrees");
    HomPoly r(desc_, degree_);
    for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i] = coef_[i] - o.coef_[i];
    return r;
}

HomPoly HomPoly::scale(const FieldScalar& s) const {
    HomPoly r(desc_, degree_);
    for (std::size_t i = 0; i < coef_.size(); ++i) r.coef_[i] = coef_[i] * s;
    return r;
}

HomPoly HomPoly::operator*(const HomPoly& o) const {
    if (!desc_->same(*o.desc_)) throw UsageError("multiplying polynomials over different fields");
    HomPoly r(desc_, degree_ + o.degree_);
    for (int i = 0; i < terms(); ++i) {
        if (coef_[static_cast<std::size_t>(i)].is_zero()) continue;
        Monomial mi = Monomial::from_index(degree_, i);
        for (int j = 0; j < o.terms(); ++j) {
            const auto& cj = o.coef_[static_cast<std::size_t>(j)];
            if (cj.is_zero()) continue;
            Monomial m = mi * Monomial::from_index(o.degree_, j);
            std::size_t idx = static_cast<std::size_t>(m.index());
            r.coef_[idx] += coef_[static_cast<std::size_t>(i)] * cj;
        }
    }
    return r;
}

bool HomPoly::operator==(const HomPoly& o) const {
    if (degree_ != o.degree_ || !desc_->same(*o.desc_)) return false;
    for (std::size_t i = 0; i < coef_.size(); ++i)
        if (coef_[i] != o.coef_[i]) return false;
    return true;
}

HomPoly HomPoly::partial_derivative(int var) const {
    if (degree_ < 1) throw UsageError("cannot differentiate a degree-0 polynomial");
    HomPoly r(desc_, degree_ - 1);
    for (int i = 0; i < terms(); ++i) {
        const auto& c = coef_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        Monomial m = Monomial::from_index(degree_, i);
        int e = var == 0 ? m.a : var == 1 ? m.b : m.c;
        if (e == 0) continue;
        Monomial dm = m;
        (var == 0 ? dm.a : var == 1 ? dm.b : dm.c) -= 1;
        r.set_coeff(dm, c * FieldScalar::from_int(desc_, e));
    }
    return r;
}

HomPoly HomPoly::multiply_by_monomial(const Monomial& m) const {
    HomPoly r(desc_, degree_ + m.degree());
    for (int i = 0; i < terms(); ++i) {
        const auto& c = coef_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        r.set_coeff(Monomial::from_index(degree_, i) * m, c);
    }
    return r;
}

FieldScalar HomPoly::eval(const FieldScalar& x, const FieldScalar& y, const FieldScalar& z) const {
    FieldScalar acc = FieldScalar::zero(desc_);
    for (int i = 0; i < terms(); ++i) {
        const auto& c = coef_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        Monomial m = Monomial::from_index(degree_, i);
        FieldScalar term = c;
        for (int k = 0; k < m.a; ++k) term *= x;
        for (int k = 0; k < m.b; ++k) term *= y;
        for (int k = 0; k < m.c; ++k) term *= z;
        acc += term;
    }
    return acc;
}

HomPoly HomPoly::primitive() const {
    return scale(primitive_factor(desc_, coef_));
}

HomPoly HomPoly::specialize(const Rational& t0) const {
    HomPoly r(FieldDescriptor::rationals(), degree_);
    for (int i = 0; i < terms(); ++i)
        r.set_coeff(i, FieldScalar::from_rational(FieldDescriptor::rationals(),
                                                  coef_[static_cast<std::size_t>(i)].eval_at(t0)));
    return r;
}

std::string HomPoly::to_string() const {
    std::ostringstream out;
    bool first = true;
    static const char* vars = "xyz";
    for (int i = 0; i < terms(); ++i) {
        const auto& c = coef_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        Monomial m = Monomial::from_index(degree_, i);
        out << "(" << c.to_string() << ")";
        int exps[3] = {m.a, m.b, m.c};
        for (int v = 0; v < 3; ++v) {
            if (exps[v] == 0) continue;
            out << "*" << vars[v];
            if (exps[v] > 1) out << "^" << exps[v];
        }
    }
    if (first) out << "0";
    return out.str();
}

JacobianTriple JacobianTriple::of(const HomPoly& f) {
    return JacobianTriple{f.partial_derivative(0), f.partial_derivative(1), f.partial_derivative(2)};
}

bool JacobianTriple::euler_holds(const HomPoly& f) {
    JacobianTriple j = of(f);
    HomPoly lhs = j.fx.multiply_by_monomial(Monomial{1, 0, 0}) +
                  j.fy.multiply_by_monomial(Monomial{0, 1, 0}) +
                  j.fz.multiply_by_monomial(Monomial{0, 0, 1});
    HomPoly rhs = f.scale(FieldScalar::from_int(f.field(), f.degree()));
    return lhs == rhs;
}

HomPoly product_of_linear_forms(const FieldPtr& f,
                                const std::vector<std::array<FieldScalar, 3>>& lines) {
    if (lines.empty()) throw UsageError("product of an empty list of forms");
    HomPoly acc = HomPoly::constant(f, FieldScalar::one(f));
    for (const auto& l : lines) {
        if (l[0].is_zero() && l[1].is_zero() && l[2].is_zero())
            throw UsageError("zero linear form in product");
        acc = acc * HomPoly::linear_form(f, l[0], l[1], l[2]);
    }
    return acc;
}

}  // namespace arrcheck
