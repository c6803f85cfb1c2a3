#include "arrcheck/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace arrcheck {

using nlohmann::json;

AnalysisReport analyze_arrangement(const Arrangement& arr, const std::string& input_name,
                                   int r_max) {
    AnalysisReport rep;
    rep.input = input_name;
    rep.field = arr.field()->to_string();
    rep.d = arr.d();
    rep.wc = weak_combinatorics(arr);  // count identity verified inside
    rep.profile = classify(arr, r_max);
    rep.checks.euler = JacobianTriple::euler_holds(arr.defining_polynomial());
    rep.checks.count_identity = true;
    rep.checks.kernel_soundness = rep.profile.kernel_checked;
    rep.checks.tjurina_consistency =
        rep.wc.max_multiplicity() > 3 ||
        rep.wc.tau == binomial2(rep.d) + rep.wc.n(3);
    if (!rep.checks.tjurina_consistency)
        throw InternalCheckError("tau = n2 + 4*n3 and tau = C(d,2) + n3 disagree");
    return rep;
}

std::string report_to_json(const AnalysisReport& rep) {
    json j;
    j["report_version"] = 1;
    j["input"] = rep.input;
    j["field"] = rep.field;
    j["d"] = rep.d;
    j["weak_combinatorics"] = rep.wc.tuple();
    j["tau"] = rep.wc.tau;
    j["mdr"] = rep.profile.mdr;
    j["dims"] = rep.profile.dims;
    j["exponents"] = rep.profile.exponents;
    if (rep.profile.delta_level)
        j["delta_level"] = *rep.profile.delta_level;
    else
        j["delta_level"] = nullptr;
    j["class"] = curve_class_name(rep.profile.curve_class, rep.profile.generator_count());
    j["checks"] = {{"euler", rep.checks.euler},
                   {"count_identity", rep.checks.count_identity},
                   {"kernel_soundness", rep.checks.kernel_soundness},
                   {"tjurina_consistency", rep.checks.tjurina_consistency},
                   {"exponents_searched_to", rep.profile.search_limit}};
    return j.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& rep) {
    std::ostringstream out;
    out << "input:              " << rep.input << "\n";
    out << "field:              " << rep.field << "\n";
    out << "d:                  " << rep.d << "\n";
    out << "weak combinatorics: " << rep.wc.to_string() << "\n";
    out << "tau:                " << rep.wc.tau << "\n";
    out << "mdr:                " << rep.profile.mdr << "\n";
    out << "dims (r: dim AR_r): ";
    for (std::size_t r = 0; r < rep.profile.dims.size(); ++r) {
        if (r) out << "  ";
        out << r << ":" << rep.profile.dims[r];
    }
    out << "\n";
    out << "exponents:          ";
    if (rep.profile.exponents.empty()) out << "-";
    for (std::size_t i = 0; i < rep.profile.exponents.size(); ++i)
        out << (i ? ", " : "") << rep.profile.exponents[i];
    out << "   (searched to degree " << rep.profile.search_limit << ")\n";
    out << "delta level:        ";
    if (rep.profile.delta_level)
        out << *rep.profile.delta_level;
    else
        out << "-";
    out << "\n";
    out << "class:              "
        << curve_class_name(rep.profile.curve_class, rep.profile.generator_count()) << "\n";
    out << "checks:             euler " << (rep.checks.euler ? "ok" : "FAIL") << ", counts "
        << (rep.checks.count_identity ? "ok" : "FAIL") << ", kernels "
        << (rep.checks.kernel_soundness ? "ok" : "FAIL") << ", tjurina "
        << (rep.checks.tjurina_consistency ? "ok" : "FAIL") << "\n";
    return out.str();
}

std::string census_to_json(const CensusResult& res) {
    json j;
    j["report_version"] = 1;
    json rows = json::array();
    for (const auto& row : res.rows) {
        json r;
        r["d"] = row.d;
        if (row.r)
            r["r"] = *row.r;
        else
            r["r"] = nullptr;
        if (row.r) {
            r["n2"] = row.n2;
            r["n3"] = row.n3;
        }
        r["accepted"] = row.accepted;
        json reasons = json::array();
        for (auto why : row.reasons) reasons.push_back(reject_reason_name(why));
        r["reasons"] = reasons;
        if (row.realization) r["realization"] = *row.realization;
        r["detail"] = row.detail;
        rows.push_back(r);
    }
    j["rows"] = rows;
    json acc = json::array();
    for (const auto& t : res.accepted) acc.push_back({t.d, t.n2, t.n3});
    j["accepted"] = acc;
    return j.dump(2) + "\n";
}

std::string census_to_text(const CensusResult& res, bool show_rejected) {
    std::ostringstream out;
    out << "  d  r   n2  n3  verdict\n";
    for (const auto& row : res.rows) {
        if (!row.accepted && !show_rejected) continue;
        out << std::setw(3) << row.d << " ";
        if (row.r)
            out << std::setw(2) << *row.r << " ";
        else
            out << " - ";
        if (row.r)
            out << std::setw(4) << row.n2 << std::setw(4) << row.n3 << "  ";
        else
            out << "   -   -  ";
        out << (row.accepted ? "accepted" : "rejected") << ": " << row.detail;
        if (row.realization) out << "  [realized by " << *row.realization << "]";
        out << "\n";
    }
    out << "accepted weak-combinatorics:";
    for (const auto& t : res.accepted) out << " " << t.to_string();
    out << "\n";
    return out.str();
}

}  // namespace arrcheck
