#include "arrcheck/linalg.hpp"

#include "fracfree.hpp"

namespace arrcheck {

namespace {

template <class Ops>
detail::FracFree<Ops> load(const Ops& ops, const ScalarMatrix& m) {
    std::vector<std::vector<typename Ops::Elem>> rows;
    rows.reserve(static_cast<std::size_t>(m.rows()));
    std::vector<FieldScalar> scratch;
    for (int r = 0; r < m.rows(); ++r) {
        scratch.clear();
        for (int c = 0; c < m.cols(); ++c) scratch.push_back(m.at(r, c));
        rows.push_back(ops.row_from_scalars(scratch));
    }
    return detail::FracFree<Ops>(ops, std::move(rows), m.cols());
}

}  // namespace

int rank_of(const ScalarMatrix& m) {
    return detail::dispatch_field(m.field(), [&](const auto& ops) {
        auto eng = load(ops, m);
        eng.forward();
        return eng.rank();
    });
}

KernelResult kernel_of(const ScalarMatrix& m) {
    return detail::dispatch_field(m.field(), [&](const auto& ops) {
        auto eng = load(ops, m);
        eng.forward();
        eng.back_eliminate();
        return KernelResult{eng.rank(), eng.kernel()};
    });
}

std::vector<FieldScalar> primitive_vector(std::vector<FieldScalar> v) {
    std::size_t first = v.size();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) {
            first = i;
            break;
        }
    }
    if (first == v.size()) return v;
    FieldScalar inv = v[first].inverse();
    for (auto& e : v) e = e * inv;
    FieldScalar s = primitive_factor(v[first].field(), v);
    for (auto& e : v) e = e * s;
    return v;
}

}  // namespace arrcheck
