#include "arrcheck/syzygy.hpp"

#include <algorithm>
#include <map>

#include "fracfree.hpp"

namespace arrcheck {

std::string curve_class_name(CurveClassKind k, int m) {
    switch (k) {
        case CurveClassKind::free_curve: return "free";
        case CurveClassKind::nearly_free: return "nearly_free";
        case CurveClassKind::minimal_plus_one_generated: return "minimal_plus_one_generated";
        case CurveClassKind::plus_one_generated: return "plus_one_generated";
        case CurveClassKind::m_syzygy: return std::to_string(m) + "-syzygy";
        case CurveClassKind::unclassified: return "unclassified";
    }
    return "?";
}

RelationVector::RelationVector(HomPoly a_in, HomPoly b_in, HomPoly c_in, const HomPoly& f)
    : a(std::move(a_in)), b(std::move(b_in)), c(std::move(c_in)) {
    JacobianTriple jac = JacobianTriple::of(f);
    HomPoly lhs = a * jac.fx + b * jac.fy + c * jac.fz;
    if (!lhs.is_zero())
        throw InternalCheckError("relation re-substitution failed: a*fx + b*fy + c*fz != 0");
}

int default_search_limit(int d) { return 2 * d - 2; }

namespace {

/// Partials as flat scalar vectors, jointly cleared so all three columns of
/// blocks share a single scaling (the kernel is then exactly AR(f)_r).
template <class Ops>
std::array<std::vector<typename Ops::Elem>, 3> ring_partials(const Ops& ops,
                                                             const JacobianTriple& jac) {
    std::vector<FieldScalar> joint;
    int n = jac.fx.terms();
    joint.reserve(static_cast<std::size_t>(3 * n));
    for (const HomPoly* p : {&jac.fx, &jac.fy, &jac.fz})
        for (int i = 0; i < n; ++i) joint.push_back(p->coeff(i));
    auto row = ops.row_from_scalars(joint);
    std::array<std::vector<typename Ops::Elem>, 3> out;
    for (int s = 0; s < 3; ++s)
        out[static_cast<std::size_t>(s)].assign(
            row.begin() + static_cast<long>(s) * n, row.begin() + static_cast<long>(s + 1) * n);
    return out;
}

/// Rows of the degree-r relation map S_r^3 -> S_{r+d-1} in the ring model.
template <class Ops>
detail::FracFree<Ops> relation_engine(const Ops& ops, const JacobianTriple& jac, int d, int r) {
    int rows_n = monomial_basis_size(r + d - 1);
    int br = monomial_basis_size(r);
    int cols = 3 * br;
    std::vector<std::vector<typename Ops::Elem>> rows(
        static_cast<std::size_t>(rows_n),
        std::vector<typename Ops::Elem>(static_cast<std::size_t>(cols), Ops::zero()));
    auto partials = ring_partials(ops, jac);
    int bp = monomial_basis_size(d - 1);
    for (int j = 0; j < br; ++j) {
        Monomial mu = Monomial::from_index(r, j);
        for (int s = 0; s < 3; ++s) {
            const auto& part = partials[static_cast<std::size_t>(s)];
            int col = s * br + j;
            for (int i = 0; i < bp; ++i) {
                if (Ops::is_zero(part[static_cast<std::size_t>(i)])) continue;
                Monomial target = mu * Monomial::from_index(d - 1, i);
                rows[static_cast<std::size_t>(target.index())][static_cast<std::size_t>(col)] =
                    part[static_cast<std::size_t>(i)];
            }
        }
    }
    return detail::FracFree<Ops>(ops, std::move(rows), cols);
}

int nullity_at(const HomPoly& f, const JacobianTriple& jac, int r) {
    return detail::dispatch_field(f.field(), [&](const auto& ops) {
        auto eng = relation_engine(ops, jac, f.degree(), r);
        eng.forward();
        return 3 * monomial_basis_size(r) - eng.rank();
    });
}

std::vector<std::vector<FieldScalar>> kernel_at(const HomPoly& f, const JacobianTriple& jac,
                                                int r) {
    return detail::dispatch_field(f.field(), [&](const auto& ops) {
        auto eng = relation_engine(ops, jac, f.degree(), r);
        eng.forward();
        eng.back_eliminate();
        return eng.kernel();
    });
}

/// dim of S_1 * AR_{r-1} inside AR_r, with early exit at the known target
/// dim AR_r (the span can never exceed it).
int span_rank(const FieldPtr& field, const std::vector<std::vector<FieldScalar>>& prev_basis,
              int r, int target) {
    if (prev_basis.empty() || target == 0) return 0;
    int br = monomial_basis_size(r);
    int bp = monomial_basis_size(r - 1);
    std::array<std::vector<int>, 3> shift;
    for (int v = 0; v < 3; ++v) {
        shift[static_cast<std::size_t>(v)].resize(static_cast<std::size_t>(bp));
        for (int j = 0; j < bp; ++j) {
            Monomial m = Monomial::from_index(r - 1, j);
            (v == 0 ? m.a : v == 1 ? m.b : m.c) += 1;
            shift[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)] = m.index();
        }
    }
    int rank = detail::dispatch_field(field, [&](const auto& ops) {
        using Ops = std::decay_t<decltype(ops)>;
        detail::IncrementalEchelon<Ops> ech(ops, 3 * br);
        for (int v = 0; v < 3 && ech.rank() < target; ++v) {
            for (const auto& basis_vec : prev_basis) {
                auto ring_vec = ops.row_from_scalars(basis_vec);
                std::vector<typename Ops::Elem> out(static_cast<std::size_t>(3 * br), Ops::zero());
                for (int s = 0; s < 3; ++s)
                    for (int j = 0; j < bp; ++j)
                        out[static_cast<std::size_t>(
                            s * br + shift[static_cast<std::size_t>(v)][static_cast<std::size_t>(j)])] =
                            ring_vec[static_cast<std::size_t>(s * bp + j)];
                ech.insert(std::move(out));
                if (ech.rank() >= target) break;
            }
        }
        return ech.rank();
    });
    if (rank > target)
        throw InternalCheckError("span of S_1 * AR_{r-1} exceeds dim AR_r; elimination defect");
    return rank;
}

std::array<HomPoly, 3> vector_to_triple(const FieldPtr& field, const std::vector<FieldScalar>& v,
                                        int r) {
    int br = monomial_basis_size(r);
    std::array<HomPoly, 3> t{HomPoly(field, r), HomPoly(field, r), HomPoly(field, r)};
    for (int s = 0; s < 3; ++s)
        for (int j = 0; j < br; ++j)
            t[static_cast<std::size_t>(s)].set_coeff(j, v[static_cast<std::size_t>(s * br + j)]);
    return t;
}

void require_arrangement_poly(const HomPoly& f) {
    if (f.degree() < 1) throw UsageError("curve polynomial must have degree >= 1");
    if (f.is_zero()) throw UsageError("zero polynomial does not define a curve");
}

}  // namespace

ScalarMatrix relation_matrix(const HomPoly& f, int r) {
    require_arrangement_poly(f);
    if (r < 0) throw UsageError("relation degree must be non-negative");
    int d = f.degree();
    JacobianTriple jac = JacobianTriple::of(f);
    ScalarMatrix m(f.field(), monomial_basis_size(r + d - 1), 3 * monomial_basis_size(r));
    int br = monomial_basis_size(r);
    int bp = monomial_basis_size(d - 1);
    const HomPoly* parts[3] = {&jac.fx, &jac.fy, &jac.fz};
    for (int j = 0; j < br; ++j) {
        Monomial mu = Monomial::from_index(r, j);
        for (int s = 0; s < 3; ++s) {
            for (int i = 0; i < bp; ++i) {
                const FieldScalar& c = parts[s]->coeff(i);
                if (c.is_zero()) continue;
                Monomial target = mu * Monomial::from_index(d - 1, i);
                m.at(target.index(), s * br + j) = c;
            }
        }
    }
    return m;
}

int relation_dim(const HomPoly& f, int r) {
    require_arrangement_poly(f);
    if (r < 0) throw UsageError("relation degree must be non-negative");
    HomPoly fp = f.primitive();
    JacobianTriple jac = JacobianTriple::of(fp);
    return nullity_at(fp, jac, r);
}

int mdr(const HomPoly& f) {
    require_arrangement_poly(f);
    HomPoly fp = f.primitive();
    JacobianTriple jac = JacobianTriple::of(fp);
    int d = fp.degree();
    for (int r = 0; r <= d - 1; ++r)
        if (nullity_at(fp, jac, r) > 0) return r;
    throw InternalCheckError("no relation found up to the Koszul degree d-1");
}

std::vector<RelationVector> relation_basis(const HomPoly& f, int r) {
    require_arrangement_poly(f);
    HomPoly fp = f.primitive();
    JacobianTriple jac = JacobianTriple::of(fp);
    std::vector<RelationVector> out;
    for (const auto& v : kernel_at(fp, jac, r)) {
        auto t = vector_to_triple(fp.field(), v, r);
        out.emplace_back(t[0], t[1], t[2], fp);
    }
    return out;
}

namespace {

struct SweepResult {
    std::vector<int> dims;
    std::vector<int> exponents;
    bool kernel_checked = false;
};

SweepResult generator_sweep(const HomPoly& f, int r_max) {
    int d = f.degree();
    if (r_max < d - 1)
        throw BoundExceededError("generator search bound " + std::to_string(r_max) +
                                 " is below the Koszul degree " + std::to_string(d - 1));
    JacobianTriple jac = JacobianTriple::of(f);
    SweepResult res;
    res.dims.resize(static_cast<std::size_t>(r_max) + 1, 0);
    std::vector<std::vector<FieldScalar>> prev;
    for (int r = 0; r <= r_max; ++r) {
        auto basis = kernel_at(f, jac, r);
        res.dims[static_cast<std::size_t>(r)] = static_cast<int>(basis.size());
        int span = r == 0 ? 0
                          : span_rank(f.field(), prev, r,
                                      res.dims[static_cast<std::size_t>(r)]);
        int fresh = res.dims[static_cast<std::size_t>(r)] - span;
        if (fresh < 0)
            throw InternalCheckError("negative generator count at degree " + std::to_string(r));
        bool verify = r <= d || fresh > 0;
        if (verify) {
            for (const auto& v : basis) {
                auto t = vector_to_triple(f.field(), v, r);
                RelationVector check(t[0], t[1], t[2], f);  // throws on failure
            }
            res.kernel_checked = true;
        }
        for (int k = 0; k < fresh; ++k) res.exponents.push_back(r);
        prev = std::move(basis);
    }
    return res;
}

}  // namespace

std::vector<int> minimal_generator_degrees(const HomPoly& f, int r_max) {
    require_arrangement_poly(f);
    return generator_sweep(f.primitive(), r_max).exponents;
}

SyzygyProfile classify(const Arrangement& arr, int r_max) {
    WeakCombinatorics wc = weak_combinatorics(arr);
    int d = arr.d();
    if (r_max <= 0) r_max = default_search_limit(d);
    if (r_max < d - 1)
        throw BoundExceededError("generator search bound " + std::to_string(r_max) +
                                 " is below the Koszul degree " + std::to_string(d - 1));

    HomPoly f = arr.defining_polynomial();
    if (!JacobianTriple::euler_holds(f))
        throw InternalCheckError("Euler relation failed for the defining polynomial");

    SweepResult sweep = generator_sweep(f, r_max);

    SyzygyProfile p;
    p.d = d;
    p.tau = wc.tau;
    p.dims = sweep.dims;
    p.exponents = sweep.exponents;
    p.search_limit = r_max;
    p.kernel_checked = sweep.kernel_checked;
    p.mdr = -1;
    for (int r = 0; r <= r_max; ++r) {
        if (p.dims[static_cast<std::size_t>(r)] > 0) {
            p.mdr = r;
            break;
        }
    }
    if (p.mdr < 0 || p.mdr > d - 1)
        throw InternalCheckError("mdr not found below the Koszul degree; elimination defect");
    if (!p.exponents.empty() && p.exponents.front() != p.mdr)
        throw InternalCheckError("first generator degree disagrees with mdr");

    int m = p.generator_count();
    if (m < 2) throw InternalCheckError("relation module of a reduced curve needs >= 2 generators");
    if (m == 3) p.delta_level = p.exponents[2] - p.exponents[1];

    // Structural route.
    bool boundary_activity =
        !p.exponents.empty() && p.exponents.back() == r_max && r_max > d - 1;
    bool pog_shape = m == 3 && p.exponents[0] + p.exponents[1] == d;
    if (boundary_activity) {
        p.curve_class = CurveClassKind::unclassified;
    } else if (m == 2) {
        p.curve_class = CurveClassKind::free_curve;
    } else if (pog_shape && *p.delta_level == 1) {
        p.curve_class = CurveClassKind::minimal_plus_one_generated;
    } else if (pog_shape && *p.delta_level == 0) {
        p.curve_class = CurveClassKind::nearly_free;
    } else if (pog_shape) {
        p.curve_class = CurveClassKind::plus_one_generated;
    } else {
        p.curve_class = CurveClassKind::m_syzygy;
    }

    // Numerical route; any disagreement with the structure is a defect.
    long dm1 = d - 1;
    long r = p.mdr;
    bool numeric_mpog = 2 * r <= d && r * r - r * dm1 + dm1 * dm1 == p.tau + 2;
    if (p.curve_class != CurveClassKind::unclassified) {
        bool structural_mpog = p.curve_class == CurveClassKind::minimal_plus_one_generated;
        if (numeric_mpog != structural_mpog)
            throw InternalCheckError(
                "minimal plus-one generated: numerical and structural routes disagree (tau " +
                std::to_string(p.tau) + ", mdr " + std::to_string(p.mdr) + ")");
        if (m == 3) {
            long d1 = p.exponents[0], d2 = p.exponents[1], d3 = p.exponents[2];
            bool numeric_pog = p.tau == dm1 * dm1 - d1 * (d - d1 - 1) - (d3 - d2 + 1);
            if (numeric_pog != pog_shape)
                throw InternalCheckError(
                    "plus-one generated: Tjurina identity and exponent shape disagree");
        }
        if (m == 2) {
            long d1 = p.exponents[0], d2 = p.exponents[1];
            if (d1 + d2 != dm1)
                throw InternalCheckError("free curve exponents do not sum to d-1");
            if (p.tau != dm1 * dm1 - d1 * d2)
                throw InternalCheckError("free curve Tjurina identity failed");
        }
    }
    return p;
}

GenericMdrResult mdr_generic(const Arrangement& arr) {
    if (arr.field()->kind() != FieldDescriptor::Kind::rational_functions)
        throw UsageError("generic mdr needs an arrangement over a rational-function field");
    HomPoly f = arr.defining_polynomial();
    JacobianTriple jac = JacobianTriple::of(f);
    int d = f.degree();
    for (int r = 0; r <= d - 1; ++r) {
        auto basis = kernel_at(f, jac, r);
        if (basis.empty()) continue;
        auto t = vector_to_triple(f.field(), basis.front(), r);
        RelationVector check(t[0], t[1], t[2], f);  // exact over Q(t)
        return GenericMdrResult{r, {check.a, check.b, check.c}};
    }
    throw InternalCheckError("no generic relation found up to the Koszul degree");
}

}  // namespace arrcheck
