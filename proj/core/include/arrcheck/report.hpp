#pragma once

#include <string>

#include "arrcheck/arrangement.hpp"
#include "arrcheck/census.hpp"
#include "arrcheck/syzygy.hpp"

namespace arrcheck {

/// Everything the analyze command reports for one arrangement. All numeric
/// fields are exact (integers, or rationals rendered as "p/q").
struct AnalysisReport {
    std::string input;  // file path or "builtin:<name>"
    std::string field;
    int d = 0;
    WeakCombinatorics wc;
    SyzygyProfile profile;

    struct Checks {
        bool euler = false;
        bool count_identity = false;
        bool kernel_soundness = false;
        bool tjurina_consistency = false;
    } checks;
};

/// r_max = 0 means the default generator-search bound.
AnalysisReport analyze_arrangement(const Arrangement& arr, const std::string& input_name,
                                   int r_max = 0);

/// Canonical JSON (sorted keys, 2-space indent, trailing newline); parsing
/// and re-serializing the output is byte-identical.
std::string report_to_json(const AnalysisReport& rep);
std::string report_to_text(const AnalysisReport& rep);

std::string census_to_json(const CensusResult& res);
std::string census_to_text(const CensusResult& res, bool show_rejected);

}  // namespace arrcheck
