#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "twobridge/ors.hpp"
#include "twobridge/parallel.hpp"

namespace twobridge {

struct CensusConfig {
    long long q_max = 999;
    std::set<std::string> checks;  ///< empty selects every check
    int jobs = default_jobs();
    unsigned long long seed = 0;
    std::string data_dir;  ///< location of the reference-errata file
};

struct CheckResult {
    std::string name;
    long long cases = 0;
    std::vector<std::string> anomalies;
    double seconds = 0.0;
    bool passed() const { return anomalies.empty(); }
};

struct CensusReport {
    std::vector<CheckResult> results;
    long long anomaly_count() const {
        long long n = 0;
        for (const CheckResult& r : results) n += static_cast<long long>(r.anomalies.size());
        return n;
    }
    bool ok() const { return anomaly_count() == 0; }
};

const std::vector<std::string>& census_check_names();

/// One canonical (p, q) per knot class with 3 <= q <= q_max.
std::vector<std::pair<long long, long long>> knot_class_list(long long q_max);

struct OrsCase {
    std::vector<Int> seed;
    OrsWord word;
};

/// Sweep cases: every seed with m <= 3 and entries <= 5, crossed with all
/// 2-syllable words with |c| <= 3, plus seeded random 4- and 6-syllable
/// words (full products of the longer words are out of reach).
std::vector<OrsCase> ors_sweep_cases(unsigned long long seed);

CheckResult run_census_check(const std::string& name, const CensusConfig& config);
CensusReport run_census(const CensusConfig& config);

std::string default_data_dir();

}  // namespace twobridge
