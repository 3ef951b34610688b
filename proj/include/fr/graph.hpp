#ifndef FR_GRAPH_HPP
#define FR_GRAPH_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fr/error.hpp"

namespace fr {

using EdgeId = int;

/// Decoded graph before any regularity validation. Multi-edges allowed,
/// loops representable (sparse6) but rejected by CubicGraph.
struct RawGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Immutable 3-regular multigraph. Edges are normalized (u <= v) and sorted
/// lexicographically so edge ids are stable and reproducible; parallel edges
/// get consecutive ids. No loops.
class CubicGraph {
public:
    CubicGraph(int n, std::vector<std::pair<int, int>> edges);

    static CubicGraph from_raw(const RawGraph& raw) { return CubicGraph(raw.n, raw.edges); }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::pair<int, int> endpoints(EdgeId e) const { return edges_[e]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// The three incident edge ids of v, in increasing order.
    const std::array<EdgeId, 3>& incident(int v) const { return incidence_[v]; }

    int other_end(EdgeId e, int v) const {
        auto [a, b] = edges_[e];
        return a == v ? b : a;
    }

    /// All edge ids joining u and v (0, 1 or more for parallel edges).
    std::vector<EdgeId> edges_between(int u, int v) const;

    bool adjacent(int u, int v) const;

    /// Stable content hash; equal graphs (same labelled edge multiset) agree.
    std::uint64_t id() const { return id_; }

    RawGraph raw() const { return RawGraph{n_, edges_}; }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::array<EdgeId, 3>> incidence_;
    std::uint64_t id_;
};

/// A cycle of a 2-factor: vertices in traversal order, edge_ids[i] joins
/// vertices[i] to vertices[(i+1) % len]. Length >= 2 (parallel pair).
struct Cycle {
    std::vector<int> vertices;
    std::vector<EdgeId> edge_ids;

    int length() const { return static_cast<int>(vertices.size()); }
    bool odd() const { return length() % 2 == 1; }
};

// ---------------------------------------------------------------- codec

/// graph6/sparse6 line decoder (sniffs ':' prefix, tolerates the standard
/// ">>graph6<<" / ">>sparse6<<" headers). Bit-exact per McKay's format spec.
RawGraph decode_graph_line(const std::string& line);

std::string encode_graph6(const RawGraph& g);
std::string encode_sparse6(const RawGraph& g);

/// graph6 for simple graphs, sparse6 when parallel edges are present.
std::string encode_graph_line(const RawGraph& g);

/// Decode + validate cubic, loop-free. Throws MalformedEncoding / NotCubic /
/// LoopPresent.
CubicGraph parse_graph6(const std::string& text);

// ---------------------------------------------------------------- predicates

bool is_connected(const CubicGraph& g);

/// Cut edges of a connected cubic graph; empty iff bridgeless.
std::vector<EdgeId> find_bridges(const CubicGraph& g);

bool is_bridgeless(const CubicGraph& g);

/// Length of a shortest cycle; a parallel pair counts as a 2-cycle.
int girth(const CubicGraph& g);

/// Shortest-path distance between two non-empty vertex sets (0 if they meet).
int set_distance(const CubicGraph& g, const std::vector<int>& xs, const std::vector<int>& ys);

/// Proper 3-edge-colouring, colour[e] in {0,1,2}, if one exists.
struct Limits;
std::optional<std::vector<int>> chromatic_index_is_3(const CubicGraph& g,
                                                     const Limits* limits = nullptr);

// ---------------------------------------------------------------- limits

/// Shared wall-clock / node budget threaded through the heavy searches.
struct Limits {
    std::int64_t deadline_ns = -1;   // steady-clock epoch ns, -1 = none
    std::uint64_t enumeration_cap = 5'000'000;

    void check_deadline() const;
    static Limits with_timeout_ms(std::int64_t ms);
};

} // namespace fr

#endif
