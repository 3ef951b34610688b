#ifndef FR_SOLVER_HPP
#define FR_SOLVER_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "fr/balanced.hpp"
#include "fr/matching.hpp"
#include "fr/structures.hpp"

namespace fr {

/// Three perfect matchings with empty common intersection, plus the
/// provenance of the strategy that produced them.
struct FRCertificate {
    PerfectMatching m1, m2, m3;
    std::string strategy;
    nlohmann::json trail;
};

bool verify_certificate(const CubicGraph& g, const FRCertificate& cert);

/// Two disjoint balanced M-matchings combine into a certificate:
/// (M, witness_A, witness_B) has intersection A ∩ B = ∅.
FRCertificate from_balanced_pair(const CubicGraph& g, const PerfectMatching& m,
                                 const BalancedMatching& a, const BalancedMatching& b);

// ------------------------------------------------------------- strategies

/// Two odd cycles at distance 1 or 3 (distance 2 is impossible).
std::optional<FRCertificate> strategy_oddness2_close(const CubicGraph& g,
                                                     const PerfectMatching& m, const TwoFactor& f,
                                                     const Limits* limits = nullptr);

/// Exactly {odd, odd, even} cycles with a near-bipartite even cycle: picks
/// attachments of the two odd cycles at opposite parity positions.
std::optional<FRCertificate> strategy_oddness2_near_bipartite(const CubicGraph& g,
                                                              const PerfectMatching& m,
                                                              const TwoFactor& f,
                                                              const Limits* limits = nullptr);

/// Four odd cycles arranged into two directly-joined pairs.
std::optional<FRCertificate> strategy_oddness4_paired(const CubicGraph& g,
                                                      const PerfectMatching& m, const TwoFactor& f,
                                                      const Limits* limits = nullptr);

/// Exactly four chordless odd cycles: colour a long cycle by the leaf its
/// matching edges reach and split a pair of rainbow balanced triples.
std::optional<FRCertificate> strategy_four_chordless(const CubicGraph& g,
                                                     const PerfectMatching& m, const TwoFactor& f,
                                                     const Limits* limits = nullptr);

/// Partition into good rings, good stars and even cycles, then split the
/// junction/star edges by index parity.
std::optional<FRCertificate> strategy_rings_stars(const CubicGraph& g, const PerfectMatching& m,
                                                  const TwoFactor& f,
                                                  std::uint64_t partition_budget = 10'000'000,
                                                  const Limits* limits = nullptr);

// ------------------------------------------------------------- solver

struct SolveConfig {
    enum class Mode { Auto, Brute, Balanced, Reduction };
    Mode mode = Mode::Auto;
    std::optional<std::int64_t> timeout_ms;
    std::uint64_t max_pms = 0;               // 0 = bounded only by the cap
    std::uint64_t enumeration_cap = 5'000'000;
    std::uint64_t partition_budget = 10'000'000;
    std::string exhausted_report_dir = ".";  // where a counterexample would be persisted
    int depth = 0;                           // reduction recursion marker
};

/// Full cascade: 3-edge-colouring, per-matching strategies, reductions,
/// brute force. Throws Timeout / Exhausted / PreconditionFailed (bridge or
/// disconnected input). Every returned certificate verifies.
FRCertificate solve(const CubicGraph& g, const SolveConfig& config = {});

/// Exact decision by scanning matching triples in lexicographic order.
std::optional<FRCertificate> solve_bruteforce(const CubicGraph& g, const Limits* limits = nullptr);

// ------------------------------------------------------------- serialization

nlohmann::json certificate_to_json(const CubicGraph& g, const FRCertificate& cert);

/// Parses a certificate file; returns the graph and certificate for
/// re-verification.
std::pair<CubicGraph, FRCertificate> certificate_from_json(const nlohmann::json& j);

} // namespace fr

#endif
