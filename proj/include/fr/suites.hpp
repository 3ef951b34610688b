#ifndef FR_SUITES_HPP
#define FR_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fr/graph.hpp"

namespace fr {

struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::vector<std::string> failures; // human-readable, empty = pass

    bool ok() const { return failures.empty(); }
};

struct SuiteOptions {
    int max_triple_len = 13;    // odd lengths 7..max
    int max_pair_len = 14;      // even lengths 4..max
    int max_generated_n = 12;   // exhaustive small-graph sweeps
    bool inject_mutant = false; // corrupt one length-7 table entry (negative control)
};

/// Disjoint rainbow balanced triples on every good odd colouring, validated
/// and cross-checked against a brute-force oracle.
SuiteResult suite_triples(const SuiteOptions& opt);

/// Disjoint balanced pairs on every good even colouring and every eligible
/// colour class.
SuiteResult suite_pairs(const SuiteOptions& opt);

/// The A/B split variant on lengths 8, 10, 12 over all admissible splits.
SuiteResult suite_pairs_ab(const SuiteOptions& opt);

/// Perfect matchings avoiding every edge pair, over all generated bridgeless
/// cubic simple graphs up to max_generated_n.
SuiteResult suite_avoidance(const SuiteOptions& opt);

/// Uniform perfect-matching families on the small corpus (exact counts).
SuiteResult suite_uniform(const std::vector<std::pair<std::string, CubicGraph>>& corpus);

/// No perfect matching avoids the three edges at any vertex.
SuiteResult suite_three_cut(const std::vector<std::pair<std::string, CubicGraph>>& corpus);

} // namespace fr

#endif
