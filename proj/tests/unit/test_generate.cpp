#include <doctest.h>

#include "fr/generate.hpp"
#include "support/fixtures.hpp"

using namespace fr;
using namespace fr::tests;

TEST_CASE("n=2 multigraphs: exactly the 3-dipole") {
    auto gs = generate_cubic_bridgeless(2, true, true);
    REQUIRE(gs.size() == 1);
    CHECK(isomorphic(gs[0], dipole3()));
}

TEST_CASE("n=4 simple: exactly K4") {
    auto gs = generate_cubic_bridgeless(4, false, true);
    REQUIRE(gs.size() == 1);
    CHECK(isomorphic(gs[0], k4()));
}

TEST_CASE("n=4 multigraphs: K4 and the parallel ladder") {
    auto gs = generate_cubic_bridgeless(4, true, true);
    CHECK(gs.size() == 2);
    int k4_hits = 0;
    for (const auto& g : gs) k4_hits += isomorphic(g, k4());
    CHECK(k4_hits == 1);
}

TEST_CASE("connected class counts match the published census") {
    // connected cubic graphs: 1, 2, 5, 19 for n = 4, 6, 8, 10
    CHECK(generate_cubic_connected(4, false, true).size() == 1);
    CHECK(generate_cubic_connected(6, false, true).size() == 2);
    CHECK(generate_cubic_connected(8, false, true).size() == 5);
    CHECK(generate_cubic_connected(10, false, true).size() == 19);
}

TEST_CASE("n=10 stream contains the Petersen graph") {
    bool found = false;
    generate_cubic_bridgeless(10, false, true,
                              [&](const CubicGraph& g) { found = found || isomorphic(g, petersen()); });
    CHECK(found);
}

TEST_CASE("bridgeless graphs all pass the bridge filter") {
    for (int n : {4, 6, 8}) {
        for (const auto& g : generate_cubic_bridgeless(n, true, true)) {
            CHECK(is_connected(g));
            CHECK(find_bridges(g).empty());
        }
    }
}

TEST_CASE("isomorphism test distinguishes and identifies") {
    CHECK(isomorphic(petersen(), parse_graph6("Ihe@GT@DG")));
    CHECK_FALSE(isomorphic(petersen(), prism5()));
    // relabelled Petersen
    CubicGraph p = petersen();
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : p.edges()) edges.emplace_back(9 - u, 9 - v);
    CHECK(isomorphic(p, CubicGraph(10, edges)));
    auto multi4 = generate_cubic_bridgeless(4, true, true);
    bool both_k4 = isomorphic(k4(), multi4[0]) && isomorphic(k4(), multi4[1]);
    CHECK_FALSE(both_k4);
}
