#include "arrcheck/arrangement.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "arrcheck/parse.hpp"

namespace arrcheck {

Line::Line(const FieldScalar& a, const FieldScalar& b, const FieldScalar& c) : c_{a, b, c} {
    int first = -1;
    for (int i = 0; i < 3; ++i) {
        if (!c_[static_cast<std::size_t>(i)].is_zero()) {
            first = i;
            break;
        }
    }
    if (first < 0) throw InvalidArrangementError("zero linear form is not a line");
    FieldScalar inv = c_[static_cast<std::size_t>(first)].inverse();
    for (auto& x : c_) x = x * inv;
}

int Line::compare(const Line& o) const {
    for (int i = 0; i < 3; ++i) {
        int c = c_[static_cast<std::size_t>(i)].compare(o.c_[static_cast<std::size_t>(i)]);
        if (c != 0) return c;
    }
    return 0;
}

Arrangement::Arrangement(FieldPtr field, std::vector<Line> lines)
    : desc_(std::move(field)), lines_(std::move(lines)) {
    if (lines_.empty()) throw InvalidArrangementError("arrangement needs at least one line");
    for (const Line& l : lines_)
        for (const auto& c : l.coeffs())
            if (!c.field()->same(*desc_))
                throw UsageError("line coefficients disagree with the arrangement field");
    for (std::size_t i = 0; i < lines_.size(); ++i)
        for (std::size_t j = i + 1; j < lines_.size(); ++j)
            if (lines_[i] == lines_[j])
                throw InvalidArrangementError("duplicate (proportional) lines at positions " +
                                              std::to_string(i) + " and " + std::to_string(j));
}

HomPoly Arrangement::defining_polynomial() const {
    std::vector<std::array<FieldScalar, 3>> forms;
    forms.reserve(lines_.size());
    for (const Line& l : lines_) forms.push_back(l.coeffs());
    return product_of_linear_forms(desc_, forms).primitive();
}

namespace {
std::array<FieldScalar, 3> normalize_point(std::array<FieldScalar, 3> p) {
    int first = -1;
    for (int i = 0; i < 3; ++i) {
        if (!p[static_cast<std::size_t>(i)].is_zero()) {
            first = i;
            break;
        }
    }
    if (first < 0) throw InvalidArrangementError("degenerate intersection: lines are proportional");
    FieldScalar inv = p[static_cast<std::size_t>(first)].inverse();
    for (auto& x : p) x = x * inv;
    return p;
}

struct PointOrder {
    bool operator()(const std::array<FieldScalar, 3>& a,
                    const std::array<FieldScalar, 3>& b) const {
        for (int i = 0; i < 3; ++i) {
            int c = a[static_cast<std::size_t>(i)].compare(b[static_cast<std::size_t>(i)]);
            if (c != 0) return c < 0;
        }
        return false;
    }
};
}  // namespace

std::array<FieldScalar, 3> intersect(const Line& a, const Line& b) {
    // cross product of the coefficient triples
    std::array<FieldScalar, 3> p{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                                 a[0] * b[1] - a[1] * b[0]};
    return normalize_point(std::move(p));
}

std::vector<IntersectionPoint> singular_points(const Arrangement& arr) {
    std::map<std::array<FieldScalar, 3>, std::vector<int>, PointOrder> groups;
    int d = arr.d();
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            auto p = intersect(arr.line(i), arr.line(j));
            auto& inc = groups[p];
            if (std::find(inc.begin(), inc.end(), i) == inc.end()) inc.push_back(i);
            if (std::find(inc.begin(), inc.end(), j) == inc.end()) inc.push_back(j);
        }
    }
    std::vector<IntersectionPoint> points;
    points.reserve(groups.size());
    long pair_count = 0;
    for (auto& [coords, lines] : groups) {
        std::sort(lines.begin(), lines.end());
        pair_count += binomial2(static_cast<long>(lines.size()));
        points.push_back(IntersectionPoint{coords, lines});
    }
    if (d >= 2 && pair_count != binomial2(static_cast<long>(d)))
        throw InternalCheckError("intersection count identity failed: sum C(m_p,2) = " +
                                 std::to_string(pair_count) + " != C(d,2)");
    return points;
}

std::vector<long> WeakCombinatorics::tuple() const {
    std::vector<long> t;
    t.push_back(d);
    t.insert(t.end(), counts.begin(), counts.end());
    return t;
}

std::string WeakCombinatorics::to_string() const {
    std::ostringstream out;
    out << "(" << d;
    for (std::size_t i = 0; i < counts.size(); ++i) out << (i == 0 ? "; " : ", ") << counts[i];
    out << ")";
    return out.str();
}

WeakCombinatorics weak_combinatorics(const Arrangement& arr) {
    WeakCombinatorics wc;
    wc.d = arr.d();
    for (const auto& p : singular_points(arr)) {
        int m = p.multiplicity();
        if (static_cast<int>(wc.counts.size()) < m - 1)
            wc.counts.resize(static_cast<std::size_t>(m - 1), 0);
        wc.counts[static_cast<std::size_t>(m - 2)] += 1;
        wc.tau += static_cast<long>(m - 1) * (m - 1);
    }
    while (!wc.counts.empty() && wc.counts.back() == 0) wc.counts.pop_back();
    return wc;
}

bool has_only_double_triple(const Arrangement& arr) {
    return weak_combinatorics(arr).max_multiplicity() <= 3;
}

// ---------------------------------------------------------------------------
// Lattice isomorphism

namespace {

struct Incidence {
    int d;
    std::vector<std::vector<int>> point_lines;          // per point, sorted
    std::vector<std::vector<int>> point_of_pair;        // [i][j] -> point index
    std::vector<std::vector<int>> line_profile;         // per line, sorted point mults

    explicit Incidence(const Arrangement& a) : d(a.d()) {
        auto pts = singular_points(a);
        point_of_pair.assign(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(d), -1));
        line_profile.assign(static_cast<std::size_t>(d), {});
        for (int pi = 0; pi < static_cast<int>(pts.size()); ++pi) {
            const auto& lines = pts[static_cast<std::size_t>(pi)].lines;
            point_lines.push_back(lines);
            for (std::size_t x = 0; x < lines.size(); ++x) {
                line_profile[static_cast<std::size_t>(lines[x])].push_back(
                    static_cast<int>(lines.size()));
                for (std::size_t y = x + 1; y < lines.size(); ++y) {
                    point_of_pair[static_cast<std::size_t>(lines[x])][static_cast<std::size_t>(lines[y])] = pi;
                    point_of_pair[static_cast<std::size_t>(lines[y])][static_cast<std::size_t>(lines[x])] = pi;
                }
            }
        }
        for (auto& prof : line_profile) std::sort(prof.begin(), prof.end());
    }

    int pair_mult(int i, int j) const {
        int p = point_of_pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return static_cast<int>(point_lines[static_cast<std::size_t>(p)].size());
    }
};

bool extend(const Incidence& A, const Incidence& B, std::vector<int>& map_ab,
            std::vector<char>& used_b, int next) {
    if (next == A.d) return true;
    for (int cand = 0; cand < B.d; ++cand) {
        if (used_b[static_cast<std::size_t>(cand)]) continue;
        if (A.line_profile[static_cast<std::size_t>(next)] !=
            B.line_profile[static_cast<std::size_t>(cand)])
            continue;
        bool ok = true;
        for (int i = 0; i < next && ok; ++i) {
            int pa = A.point_of_pair[static_cast<std::size_t>(i)][static_cast<std::size_t>(next)];
            int pb = B.point_of_pair[static_cast<std::size_t>(map_ab[static_cast<std::size_t>(i)])]
                                    [static_cast<std::size_t>(cand)];
            if (static_cast<int>(A.point_lines[static_cast<std::size_t>(pa)].size()) !=
                static_cast<int>(B.point_lines[static_cast<std::size_t>(pb)].size())) {
                ok = false;
                break;
            }
            // partition consistency: assigned lines sharing the A-point must
            // map exactly onto assigned lines sharing the B-point
            for (int k = 0; k < next && ok; ++k) {
                if (k == i) continue;
                bool in_a = A.point_of_pair[static_cast<std::size_t>(k)][static_cast<std::size_t>(next)] == pa;
                bool in_b = B.point_of_pair[static_cast<std::size_t>(map_ab[static_cast<std::size_t>(k)])]
                                           [static_cast<std::size_t>(cand)] == pb;
                if (in_a != in_b) ok = false;
            }
        }
        if (!ok) continue;
        map_ab[static_cast<std::size_t>(next)] = cand;
        used_b[static_cast<std::size_t>(cand)] = 1;
        if (extend(A, B, map_ab, used_b, next + 1)) return true;
        used_b[static_cast<std::size_t>(cand)] = 0;
        map_ab[static_cast<std::size_t>(next)] = -1;
    }
    return false;
}

}  // namespace

bool lattice_isomorphic(const Arrangement& a, const Arrangement& b) {
    if (a.d() > 12 || b.d() > 12)
        throw BoundExceededError("lattice isomorphism search is bounded at d <= 12");
    if (a.d() != b.d()) return false;
    if (a.d() == 1) return true;
    Incidence A(a), B(b);
    if (A.point_lines.size() != B.point_lines.size()) return false;
    auto mult_multiset = [](const Incidence& inc) {
        std::vector<int> ms;
        ms.reserve(inc.point_lines.size());
        for (const auto& pl : inc.point_lines) ms.push_back(static_cast<int>(pl.size()));
        std::sort(ms.begin(), ms.end());
        return ms;
    };
    if (mult_multiset(A) != mult_multiset(B)) return false;
    {
        auto profs = [](const Incidence& inc) {
            auto p = inc.line_profile;
            std::sort(p.begin(), p.end());
            return p;
        };
        if (profs(A) != profs(B)) return false;
    }
    std::vector<int> map_ab(static_cast<std::size_t>(a.d()), -1);
    std::vector<char> used_b(static_cast<std::size_t>(a.d()), 0);
    return extend(A, B, map_ab, used_b, 0);
}

// ---------------------------------------------------------------------------
// Catalog

namespace {

Arrangement from_forms(const FieldPtr& f, const std::vector<std::string>& forms) {
    std::vector<Line> lines;
    lines.reserve(forms.size());
    for (const auto& s : forms) {
        auto t = parse_linear_form(s, f);
        lines.emplace_back(t[0], t[1], t[2]);
    }
    return Arrangement(f, std::move(lines));
}

const std::vector<std::string>& lt_forms() {
    static const std::vector<std::string> forms = {
        "x",
        "y",
        "z",
        "y+z",
        "x+y+z",
        "x+t*y",
        "(t-1)*x+(t-1)*y+t*z",
        "(t-1)*x+t*z",
        "(t-1)*x+t*(t-1)*y+t^2*z",
    };
    return forms;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
    static const std::vector<std::string> names = {"L6", "L7", "L8", "L9", "L9prime", "Lt"};
    return names;
}

Arrangement builtin(const std::string& name) {
    FieldPtr q = FieldDescriptor::rationals();
    if (name == "L6")
        return from_forms(q, {"y", "x-z", "y-x-2z", "y+x-2z", "y-x+2z", "y+x+2z"});
    if (name == "L7")
        return from_forms(q, {"x", "y", "x-z", "y-x-2z", "x+y-2z", "y-x+2z", "x+y+2z"});
    if (name == "L8")
        return from_forms(
            q, {"y", "y-2z", "y+2z", "y-x-2z", "y+x-2z", "y-x+2z", "y+x+2z", "y+x-6z"});
    if (name == "L9")
        return from_forms(
            q, {"y", "y-z", "y+z", "y-x", "y+x", "y-x-2z", "y-x+2z", "y+x-2z", "y+x+2z"});
    if (name == "L9prime") {
        FieldPtr qe = FieldDescriptor::quadratic(Rational(0), Rational(-1));
        return from_forms(qe, {"x", "y", "z", "x+y", "x+z", "y-z", "x+y+e*z", "x-e*y+z",
                               "x-e*y+e*z"});
    }
    if (name == "Lt") return from_forms(FieldDescriptor::rational_functions("t"), lt_forms());
    throw UsageError("unknown builtin arrangement '" + name +
                     "' (known: L6, L7, L8, L9, L9prime, Lt)");
}

Arrangement builtin_lt(const Rational& t0) {
    if (t0.is_zero() || t0.is_one())
        throw InvalidArrangementError("degenerate family parameter t = " + t0.to_string());
    FieldPtr qt = FieldDescriptor::rational_functions("t");
    FieldPtr q = FieldDescriptor::rationals();
    std::vector<Line> lines;
    for (const auto& s : lt_forms()) {
        auto form = parse_linear_form(s, qt);
        std::array<FieldScalar, 3> spec{
            FieldScalar::from_rational(q, form[0].eval_at(t0)),
            FieldScalar::from_rational(q, form[1].eval_at(t0)),
            FieldScalar::from_rational(q, form[2].eval_at(t0))};
        if (spec[0].is_zero() && spec[1].is_zero() && spec[2].is_zero())
            throw InvalidArrangementError("degenerate family parameter t = " + t0.to_string());
        lines.emplace_back(spec[0], spec[1], spec[2]);
    }
    Arrangement arr(q, std::move(lines));  // throws on coinciding lines
    WeakCombinatorics wc = weak_combinatorics(arr);
    if (wc.d != 9 || wc.n(2) != 6 || wc.n(3) != 10 || wc.max_multiplicity() != 3)
        throw InvalidArrangementError("parameter t = " + t0.to_string() +
                                      " degenerates the family: counts " + wc.to_string());
    return arr;
}

}  // namespace arrcheck
