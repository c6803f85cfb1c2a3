#include "arrcheck/census.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace arrcheck {

Rational triple_lower_bound(int d) {
    if (d < 3) throw UsageError("triple-point bound needs d >= 3");
    long dd = d;
    return Rational(dd * dd - 4 * dd - 5, 4);
}

CensusBounds census_bounds(int d) {
    if (d < 3 || d > 12) throw UsageError("census bounds are defined for 3 <= d <= 12");
    CensusBounds b;
    b.d = d;
    // ceil((2d - 6)/3) and floor(d/2), exactly (2d - 6 >= 0 for d >= 3)
    b.r_low = static_cast<int>((2L * d - 6 + 2) / 3);
    b.r_high = d / 2;
    b.n3_low = triple_lower_bound(d);
    b.epsilon = d % 6 == 5 ? 1 : 0;
    b.u3 = ((d - 1) / 2) * static_cast<long>(d) / 3 - b.epsilon;
    return b;
}

std::optional<std::pair<int, int>> discriminant_roots(int d, long n3) {
    // quarter discriminant of 2r^2 - 2r(d-1) + d^2 - 3d - 2 - 2 n3
    long q = -static_cast<long>(d) * d + 4L * d + 5 + 4 * n3;
    if (q < 0) return std::nullopt;
    long s = static_cast<long>(std::sqrt(static_cast<double>(q)));
    while (s * s > q) --s;
    while ((s + 1) * (s + 1) <= q) ++s;
    if (s * s != q) return std::nullopt;
    long num_lo = (d - 1) - s, num_hi = (d - 1) + s;
    if (num_lo % 2 != 0) return std::nullopt;
    return std::make_pair(static_cast<int>(num_lo / 2), static_cast<int>(num_hi / 2));
}

std::string reject_reason_name(RejectReason r) {
    switch (r) {
        case RejectReason::negative_n2: return "negative_n2";
        case RejectReason::negative_n3: return "negative_n3";
        case RejectReason::below_triple_bound: return "below_triple_bound";
        case RejectReason::schonheim_exceeded: return "schonheim_exceeded";
        case RejectReason::nodal_bound: return "nodal_bound";
        case RejectReason::no_admissible_mdr: return "no_admissible_mdr";
        case RejectReason::bounds_infeasible: return "bounds_infeasible";
    }
    return "?";
}

const std::vector<CensusTuple>& reference_census() {
    static const std::vector<CensusTuple> ref = {
        {6, 9, 2}, {7, 9, 4}, {8, 7, 7}, {9, 6, 10}};
    return ref;
}

namespace {
const std::map<std::string, CensusTuple>& realization_map() {
    static const std::map<std::string, CensusTuple> m = {
        {"L6", {6, 9, 2}}, {"L7", {7, 9, 4}}, {"L8", {8, 7, 7}}, {"L9", {9, 6, 10}}};
    return m;
}
}  // namespace

CensusResult enumerate_mpog_candidates(int max_degree, bool reverse_r_loop) {
    if (max_degree < 3 || max_degree > 12)
        throw UsageError("census degree limit must lie in [3, 12]");
    CensusResult out;
    std::vector<CensusTuple> accepted;
    for (int d = 3; d <= max_degree; ++d) {
        CensusBounds b = census_bounds(d);
        bool window_empty = b.r_low > b.r_high;
        bool chain_empty = Rational(b.u3) < b.n3_low;
        if (window_empty || chain_empty) {
            CensusRow row;
            row.d = d;
            std::ostringstream det;
            if (window_empty) {
                row.reasons.push_back(RejectReason::no_admissible_mdr);
                det << "no integer mdr in [" << b.r_low << ", " << b.r_high << "]";
            }
            if (chain_empty) {
                if (!row.reasons.empty()) det << "; ";
                row.reasons.push_back(RejectReason::bounds_infeasible);
                det << "n3 lower bound " << b.n3_low.to_string() << " exceeds U3 = " << b.u3;
            }
            row.detail = det.str();
            out.rows.push_back(std::move(row));
        }
        std::vector<int> r_values;
        for (int r = b.r_low; r <= b.r_high; ++r) r_values.push_back(r);
        if (reverse_r_loop) std::reverse(r_values.begin(), r_values.end());
        std::vector<CensusRow> d_rows;
        for (int r : r_values) {
            CensusRow row;
            row.d = d;
            row.r = r;
            long dm1 = d - 1;
            row.n3 = static_cast<long>(r) * r - r * dm1 + dm1 * dm1 - 2 - binomial2(d);
            row.n2 = binomial2(d) - 3 * row.n3;
            std::ostringstream det;
            auto flag = [&](RejectReason why, const std::string& text) {
                if (!row.reasons.empty()) det << "; ";
                row.reasons.push_back(why);
                det << text;
            };
            if (row.n3 < 0)
                flag(RejectReason::negative_n3, "forces n3 = " + std::to_string(row.n3) + " < 0");
            if (row.n2 < 0)
                flag(RejectReason::negative_n2, "forces n2 = " + std::to_string(row.n2) + " < 0");
            if (row.n3 >= 0 && Rational(row.n3) < b.n3_low)
                flag(RejectReason::below_triple_bound,
                     "n3 = " + std::to_string(row.n3) + " is below the lower bound " +
                         b.n3_low.to_string());
            if (row.n3 > b.u3)
                flag(RejectReason::schonheim_exceeded,
                     "n3 = " + std::to_string(row.n3) + " exceeds U3 = " + std::to_string(b.u3));
            if (row.n3 == 0 && r < d - 2)
                flag(RejectReason::nodal_bound,
                     "n3 = 0 forces a nodal arrangement with mdr >= " + std::to_string(d - 2) +
                         " > " + std::to_string(r));
            row.accepted = row.reasons.empty();
            if (row.accepted) {
                CensusTuple t{d, row.n2, row.n3};
                for (const auto& [name, tuple] : realization_map())
                    if (tuple == t) row.realization = name;
                if (std::find(accepted.begin(), accepted.end(), t) == accepted.end())
                    accepted.push_back(t);
                det << "admissible";
            }
            row.detail = det.str();
            d_rows.push_back(std::move(row));
        }
        if (reverse_r_loop) std::reverse(d_rows.begin(), d_rows.end());
        for (auto& r : d_rows) out.rows.push_back(std::move(r));
    }
    std::sort(accepted.begin(), accepted.end());
    out.accepted = std::move(accepted);
    return out;
}

}  // namespace arrcheck
