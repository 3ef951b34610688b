#ifndef FR_REDUCTIONS_HPP
#define FR_REDUCTIONS_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fr/matching.hpp"

namespace fr {

/// Fixed pattern with attachment points (vertices of pattern degree 2 whose
/// third host edge must leave the image).
struct PatternGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> attachments;
    std::string name;

    RawGraph raw() const { return RawGraph{n, edges}; }
};

/// 8-vertex pattern on a,b,c,d (attachments) and x,y,z,t; isomorphic to the
/// Petersen graph minus two adjacent vertices.
const PatternGraph& g8_pattern();

/// Petersen minus one vertex; attachments are x, b, e in that order.
const PatternGraph& petersen_minus_vertex_pattern();

struct Embedding {
    std::vector<int> image;             // pattern vertex -> host vertex
    std::vector<int> boundary;          // attachment index -> host neighbour
    std::vector<EdgeId> boundary_edges; // attachment index -> host edge used
};

/// First embedding in deterministic search order, or absent. Boundary
/// vertices lie outside the image (they may coincide with each other).
std::optional<Embedding> find_pattern(const CubicGraph& g, const PatternGraph& pattern);

std::optional<Embedding> find_g8(const CubicGraph& g);
std::optional<Embedding> find_petersen_minus_vertex(const CubicGraph& g);

enum class PatternKind { G8, PetersenMinusVertex };

struct ReductionResult {
    PatternKind kind;
    CubicGraph reduced;
    std::vector<EdgeId> added_edges;  // reduced edge ids of the replacements
    std::vector<EdgeId> back_edge;    // reduced edge id -> host edge id, -1 for added
    std::vector<int> reduced_vertex;  // reduced vertex -> host vertex, -1 for the new vertex
    Embedding emb;
};

/// Delete the embedded G8, join a' to c' and b' to d'. The reduced graph may
/// be disconnected or carry parallel edges.
ReductionResult reduce_g8(const CubicGraph& g, const Embedding& emb);

/// Delete the embedded Petersen-minus-vertex, add a new degree-3 vertex v on
/// x', b', e'.
ReductionResult reduce_pmv(const CubicGraph& g, const Embedding& emb);

/// Lift three non-intersecting perfect matchings of the reduced graph back to
/// the host, by the per-matching substitution tables; every candidate triple
/// is verified before being returned.
std::array<PerfectMatching, 3> lift_g8(const CubicGraph& host, const ReductionResult& red,
                                       const PerfectMatching& p1, const PerfectMatching& p2,
                                       const PerfectMatching& p3);

std::array<PerfectMatching, 3> lift_pmv(const CubicGraph& host, const ReductionResult& red,
                                        const PerfectMatching& p1, const PerfectMatching& p2,
                                        const PerfectMatching& p3);

/// Necessary conditions for a minimal graph with no non-intersecting triple.
struct MinimalityReport {
    int n = 0;
    int girth_value = 0;
    std::vector<int> short_cycle;     // witness when girth < 5
    std::optional<Embedding> g8;      // witness when present
    std::optional<Embedding> pmv;

    bool girth_ok() const { return girth_value >= 5; }
    bool no_g8() const { return !g8.has_value(); }
    bool no_pmv() const { return !pmv.has_value(); }
    bool order_ok() const { return n >= 32; }
    bool candidate() const { return girth_ok() && no_g8() && no_pmv() && order_ok(); }
};

MinimalityReport minimality_report(const CubicGraph& g);

} // namespace fr

#endif
