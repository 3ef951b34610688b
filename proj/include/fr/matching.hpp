#ifndef FR_MATCHING_HPP
#define FR_MATCHING_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "fr/graph.hpp"

namespace fr {

/// Edge subset covering every vertex exactly once. Edge ids sorted.
struct PerfectMatching {
    std::vector<EdgeId> edges;
    std::uint64_t graph_id = 0;

    bool contains(EdgeId e) const;
    bool operator==(const PerfectMatching&) const = default;
};

bool is_perfect_matching(const CubicGraph& g, const PerfectMatching& m);

/// Cycle decomposition of g - M.
struct TwoFactor {
    std::vector<Cycle> cycles;
    std::vector<int> odd_cycle_ids;

    int odd_count() const { return static_cast<int>(odd_cycle_ids.size()); }
};

/// Multiset of perfect matchings covering each edge exactly p times.
struct UniformFamily {
    int p = 0;
    std::vector<std::pair<PerfectMatching, int>> members; // matching, multiplicity
};

/// Complete duplicate-free list, in the deterministic backtracking order
/// (lowest uncovered vertex first, incident edges by increasing id).
std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g,
                                                         const Limits* limits = nullptr);

/// Stops after max_count matchings (0 = no bound beyond the cap).
std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g,
                                                         std::uint64_t max_count,
                                                         const Limits* limits);

/// First perfect matching (in enumeration order) containing all of forced_in
/// and none of forced_out.
std::optional<PerfectMatching> constrained_pm(const CubicGraph& g,
                                              const std::vector<EdgeId>& forced_in,
                                              const std::vector<EdgeId>& forced_out,
                                              const Limits* limits = nullptr);

TwoFactor two_factor(const CubicGraph& g, const PerfectMatching& m);

struct OddnessResult {
    int oddness = 0;
    PerfectMatching witness;
    TwoFactor factor;
};

/// Minimum odd-cycle count over all 2-factors, with an attaining witness.
OddnessResult oddness(const CubicGraph& g, const Limits* limits = nullptr);

/// A perfect matching avoiding the given <= 2 edges; guaranteed to exist on
/// bridgeless cubic input, so absence throws LemmaViolation.
PerfectMatching pm_avoiding(const CubicGraph& g, const std::vector<EdgeId>& avoid,
                            const Limits* limits = nullptr);

/// Smallest-denominator uniform cover by perfect matchings (exact rationals).
UniformFamily uniform_pm_family(const CubicGraph& g, const Limits* limits = nullptr);

/// True for every genuine 3-edge cut: no perfect matching avoids all three.
bool three_cut_obstruction(const CubicGraph& g, const std::vector<EdgeId>& cut,
                           const Limits* limits = nullptr);

} // namespace fr

#endif
