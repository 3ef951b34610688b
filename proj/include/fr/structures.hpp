#ifndef FR_STRUCTURES_HPP
#define FR_STRUCTURES_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "fr/balanced.hpp"
#include "fr/matching.hpp"

namespace fr {

/// Vertex -> cycle bookkeeping for a fixed 2-factor.
struct FactorContext {
    std::vector<int> cycle_of;     // vertex -> cycle index
    std::vector<int> pos_on_cycle; // vertex -> position on its cycle
    std::vector<EdgeId> m_edge_at; // vertex -> its matching edge
};

FactorContext make_factor_context(const CubicGraph& g, const PerfectMatching& m,
                                  const TwoFactor& f);

/// Chain of cycles joined by matching edges: endpoints odd, interior even,
/// and on each interior even cycle the two junction attachment vertices cut
/// two odd arcs. junctions[i] joins cycles[i] to cycles[i+1].
struct GoodPath {
    std::vector<int> cycles;
    std::vector<EdgeId> junctions;
};

/// Cyclic arrangement of an even number of odd cycles; paths[i] runs from
/// odd cycle i to odd cycle i+1 and all its junction edges carry index i.
struct GoodRing {
    std::vector<GoodPath> paths;
};

/// Chordless centre of length >= 7 whose matching edges all land on three
/// pairwise non-adjacent leaves, at least two per leaf.
struct GoodStar {
    int center = -1;
    std::array<int, 3> leaves{-1, -1, -1};
};

struct FactorPartition {
    std::vector<GoodRing> rings;
    std::vector<GoodStar> stars;
    std::vector<int> free_even_cycles;
};

/// Checks every structural axiom; throws PreconditionFailed with a reason.
void validate_partition(const CubicGraph& g, const PerfectMatching& m, const TwoFactor& f,
                        const FactorPartition& part);

/// Fast special case: pair up the odd cycles so each pair is joined by at
/// least two matching edges (a ring of length 2 per pair).
std::optional<FactorPartition> rings_of_length_two(const CubicGraph& g, const PerfectMatching& m,
                                                   const TwoFactor& f);

/// Backtracking search for a partition into good rings, good stars and free
/// even cycles. Absence means "not found within budget", never "none exists".
std::optional<FactorPartition> find_partition(const CubicGraph& g, const PerfectMatching& m,
                                              const TwoFactor& f,
                                              std::uint64_t node_budget = 10'000'000);

/// The two disjoint balanced pick sets induced by a partition: even-index
/// junction edges plus one rainbow triple per star on one side, odd-index
/// junctions plus the second triple on the other. Witnesses are searched and
/// must exist (WitnessSearchFailed is a defect signal).
std::pair<BalancedMatching, BalancedMatching> balanced_pair_from_partition(
    const CubicGraph& g, const PerfectMatching& m, const TwoFactor& f,
    const FactorPartition& part, const Limits* limits = nullptr);

} // namespace fr

#endif
