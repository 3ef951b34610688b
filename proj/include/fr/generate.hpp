#ifndef FR_GENERATE_HPP
#define FR_GENERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "fr/graph.hpp"

namespace fr {

/// Exact isomorphism for labelled cubic multigraphs (backtracking with
/// colour-refinement pruning). Desk scale only.
bool isomorphic(const CubicGraph& a, const CubicGraph& b);

/// Colour-refinement invariant; equal for isomorphic graphs.
std::uint64_t wl_hash(const CubicGraph& g);

/// Streams every connected bridgeless cubic (multi)graph on n labelled
/// vertices at least once, in a deterministic order. With dedupe, one
/// representative per isomorphism class.
void generate_cubic_bridgeless(int n, bool allow_multi, bool dedupe,
                               const std::function<void(const CubicGraph&)>& yield);

std::vector<CubicGraph> generate_cubic_bridgeless(int n, bool allow_multi, bool dedupe = true);

/// Same enumeration without the bridgeless filter (used by the tests to
/// cross-check class counts).
std::vector<CubicGraph> generate_cubic_connected(int n, bool allow_multi, bool dedupe = true);

} // namespace fr

#endif
