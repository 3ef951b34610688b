#ifndef FR_TESTS_FIXTURES_HPP
#define FR_TESTS_FIXTURES_HPP

#include <string>

#include "fr/graph.hpp"
#include "fr/matching.hpp"

namespace fr::tests {

// small classics
CubicGraph k4();
CubicGraph k33();
CubicGraph dipole3();
CubicGraph prism5();    // pentagonal prism
CubicGraph petersen();  // outer 0-4, spokes to 5-9, inner pentagram

/// The spoke matching of petersen(): {ax, bt, cy, du, ez}.
PerfectMatching petersen_spokes();

/// A 10-vertex cubic graph with a bridge (two subdivided K4 blocks).
CubicGraph bridged10();

/// A constructed graph together with the matching exhibiting its intended
/// 2-factor.
struct Instance {
    CubicGraph g;
    PerfectMatching m;
};

Instance far_odd_cycles26();      // two pentagons separated by two 8-cycles, d = 5
Instance near_bipartite18();      // two pentagons on an 8-cycle, opposite-parity attachments
Instance near_bipartite_neg22();  // attachments all one colour, centre not near-bipartite
Instance oddness4_paired24();     // two directly-joined pentagon pairs plus a 4-cycle
Instance oddness4_central32();    // four pentagons attached only to a central 12-cycle
Instance four_chordless30();      // three pentagons around a chordless 15-cycle
Instance four_chordless_bad22();  // triangle leaf with a single centre attachment
Instance six_pentagon_ring30();   // six pentagons chained into one ring
Instance prism_instance();        // prism with its spoke matching

// reduction hosts
CubicGraph g8_host12(); // pattern plus a boundary 4-cycle; reduces to K4
CubicGraph g8_host14(); // pattern plus a 6-cycle boundary with a chord

/// Replace vertex v by a triangle (preserves 3-edge-colourability class).
CubicGraph triangle_expand(const CubicGraph& g, int v);

/// Graphs shipped under data/, e.g. "snarks/blanusa1.g6".
CubicGraph load_data_graph(const std::string& relative_path);
std::string data_path(const std::string& relative_path);

} // namespace fr::tests

#endif
