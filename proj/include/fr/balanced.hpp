#ifndef FR_BALANCED_HPP
#define FR_BALANCED_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fr/matching.hpp"

namespace fr {

/// A cycle of known length with every position coloured 1, 2 or 3.
struct ColouredCycle {
    std::vector<int> colour; // colour[i] for position i along the cycle

    int length() const { return static_cast<int>(colour.size()); }
    std::array<int, 3> class_sizes() const;
    std::vector<int> positions_of(int colour_index) const;
};

/// Positions on the cycle, ascending.
using BalancedTriple = std::array<int, 3>;
using BalancedPair = std::array<int, 2>;

/// All arcs cut by the (sorted) positions have odd edge length.
bool arcs_all_odd(int length, const std::vector<int>& sorted_positions);

bool is_balanced_triple(int length, const BalancedTriple& t);
bool is_balanced_pair(int length, const BalancedPair& p);

/// Odd length >= 7 and every colour class has >= 2 vertices.
bool is_good_odd_cycle(const ColouredCycle& c);

/// Even length >= 4 and at most one colour class has <= 1 vertices.
bool is_good_even_cycle(const ColouredCycle& c);

/// Colour labels relabelled so classes sort by (size, smallest position).
/// Positions are untouched, so triple/pair outputs need no back-mapping.
ColouredCycle canonicalize_colours(const ColouredCycle& c);
std::string colour_string(const ColouredCycle& c);

/// Two vertex-disjoint balanced triples, each containing exactly one vertex
/// of each colour. Lengths 7 and 9 come from exhaustive tables; longer odd
/// cycles contract an eligible consecutive pair and recurse.
std::pair<BalancedTriple, BalancedTriple> find_disjoint_balanced_triples(const ColouredCycle& c);

/// Two disjoint balanced pairs, each meeting colour class i exactly once.
std::pair<BalancedPair, BalancedPair> find_disjoint_balanced_pairs(const ColouredCycle& c, int i);

/// Even cycle of length 2p >= 8 with two excluded vertices and a partition
/// A/B of the rest, both sides of size >= p-2: two disjoint balanced pairs
/// meeting A and B exactly once each (red/blue alternating classification).
std::pair<BalancedPair, BalancedPair> find_pairs_AB(int length, const BalancedPair& excluded,
                                                    const std::vector<int>& a,
                                                    const std::vector<int>& b);

// ---------------------------------------------------------------- tables

/// Answer table for good odd colourings of the given length (7 or 9), keyed
/// by the canonical colour string.
const std::map<std::string, std::pair<BalancedTriple, BalancedTriple>>& triple_table(int length);

/// Plain-text fixture dump: one "length colouring t1 t2" line per entry.
std::string dump_triple_table(int length);

// ---------------------------------------------------------------- graphs

/// A subset of a perfect matching realizable as M ∩ witness.
struct BalancedMatching {
    PerfectMatching m;
    std::vector<EdgeId> a;   // sorted subset of m.edges
    PerfectMatching witness; // m ∩ witness == a
};

/// Witness search: perfect matching M' with M ∩ M' = A exactly.
std::optional<PerfectMatching> is_balanced(const CubicGraph& g, const PerfectMatching& m,
                                           std::vector<EdgeId> a, const Limits* limits = nullptr);

/// Per-cycle parity report for a pick set A ⊆ M.
struct CycleParity {
    int cycle_index = 0;
    std::vector<int> hit_positions; // positions on the cycle touched by A
    bool ok = false;                // untouched-even or all arcs odd
};

struct BalanceDiagnostics {
    std::optional<BalancedMatching> balanced;
    std::vector<CycleParity> cycles;
    bool parity_ok = false;
};

/// Witness search plus the per-cycle parity diagnostics (the two routes are
/// independent and must agree).
BalanceDiagnostics assemble_balanced(const CubicGraph& g, const PerfectMatching& m,
                                     const std::vector<EdgeId>& picks,
                                     const Limits* limits = nullptr);

} // namespace fr

#endif
