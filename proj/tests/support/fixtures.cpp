#include "support/fixtures.hpp"

#include <algorithm>
#include <fstream>

namespace fr::tests {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

EdgeList cycle_edges(int from, int len) {
    EdgeList out;
    for (int i = 0; i < len; ++i) out.emplace_back(from + i, from + (i + 1) % len);
    return out;
}

EdgeList concat(std::initializer_list<EdgeList> parts) {
    EdgeList out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

PerfectMatching matching_from_pairs(const CubicGraph& g, const EdgeList& pairs) {
    std::vector<char> used(g.edge_count(), 0);
    std::vector<EdgeId> edges;
    for (auto [u, v] : pairs) {
        EdgeId pick = -1;
        for (EdgeId e : g.edges_between(u, v))
            if (!used[e]) {
                pick = e;
                break;
            }
        if (pick == -1) throw std::runtime_error("fixture matching edge missing");
        used[pick] = 1;
        edges.push_back(pick);
    }
    std::sort(edges.begin(), edges.end());
    return PerfectMatching{edges, g.id()};
}

Instance make(int n, const EdgeList& cycles, const EdgeList& matching) {
    EdgeList all = cycles;
    all.insert(all.end(), matching.begin(), matching.end());
    CubicGraph g(n, all);
    return Instance{g, matching_from_pairs(g, matching)};
}

} // namespace

CubicGraph k4() { return CubicGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

CubicGraph k33() {
    return CubicGraph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

CubicGraph dipole3() { return CubicGraph(2, {{0, 1}, {0, 1}, {0, 1}}); }

CubicGraph prism5() {
    return CubicGraph(10, concat({cycle_edges(0, 5), cycle_edges(5, 5),
                                  {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}}}));
}

CubicGraph petersen() {
    return CubicGraph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},
                           {0, 5}, {1, 8}, {2, 6}, {3, 9}, {4, 7},
                           {5, 6}, {6, 7}, {7, 8}, {8, 9}, {5, 9}});
}

PerfectMatching petersen_spokes() {
    CubicGraph g = petersen();
    return [&] {
        std::vector<EdgeId> edges;
        for (auto [u, v] : EdgeList{{0, 5}, {1, 8}, {2, 6}, {3, 9}, {4, 7}})
            edges.push_back(g.edges_between(u, v).at(0));
        std::sort(edges.begin(), edges.end());
        return PerfectMatching{edges, g.id()};
    }();
}

CubicGraph bridged10() {
    // K4 with one edge subdivided, twice, bridged through the two new vertices
    return CubicGraph(10, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                           {5, 9}, {9, 6}, {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8},
                           {4, 9}});
}

Instance far_odd_cycles26() {
    // pentagons 0-4 and 21-25, 8-cycles 5-12 and 13-20
    EdgeList cycles = concat(
        {cycle_edges(0, 5), cycle_edges(5, 8), cycle_edges(13, 8), cycle_edges(21, 5)});
    EdgeList m = {{0, 5},  {2, 7},  {4, 9},  {1, 3},          // pentagon 1 into first 8-cycle
                  {10, 18}, {11, 19}, {12, 20}, {6, 8},        // 8-cycle links and chord
                  {13, 21}, {15, 23}, {17, 25}, {14, 16},      // second 8-cycle
                  {22, 24}};                                   // far pentagon chord
    return make(26, cycles, m);
}

Instance near_bipartite18() {
    EdgeList cycles = concat({cycle_edges(0, 5), cycle_edges(5, 5), cycle_edges(10, 8)});
    EdgeList m = {{0, 10}, {2, 12}, {4, 15}, {1, 3},   // pentagon 1 (positions 0, 2, 5)
                  {5, 11}, {7, 13}, {9, 16}, {6, 8},   // pentagon 2 (positions 1, 3, 6)
                  {14, 17}};                           // centre chord, opposite parity
    return make(18, cycles, m);
}

Instance near_bipartite_neg22() {
    EdgeList cycles = concat({cycle_edges(0, 5), cycle_edges(5, 5), cycle_edges(10, 12)});
    EdgeList m = {{0, 10}, {2, 12}, {4, 14}, {1, 3},    // pentagon 1 at even positions
                  {5, 16}, {7, 18}, {9, 20}, {6, 8},    // pentagon 2 at even positions
                  {11, 15}, {13, 19}, {17, 21}};        // same-parity chords
    return make(22, cycles, m);
}

Instance oddness4_paired24() {
    EdgeList cycles = concat({cycle_edges(0, 5), cycle_edges(5, 5), cycle_edges(10, 5),
                              cycle_edges(15, 5), cycle_edges(20, 4)});
    EdgeList m = {{0, 5}, {2, 7}, {4, 20}, {9, 21}, {1, 3}, {6, 8},
                  {10, 15}, {12, 17}, {14, 22}, {19, 23}, {11, 13}, {16, 18}};
    return make(24, cycles, m);
}

Instance oddness4_central32() {
    EdgeList cycles = concat({cycle_edges(0, 5), cycle_edges(5, 5), cycle_edges(10, 5),
                              cycle_edges(15, 5), cycle_edges(20, 12)});
    EdgeList m = {{0, 20}, {2, 21}, {4, 22}, {1, 3},  {5, 23},  {7, 24},  {9, 25},  {6, 8},
                  {10, 26}, {12, 27}, {14, 28}, {11, 13}, {15, 29}, {17, 30}, {19, 31}, {16, 18}};
    return make(32, cycles, m);
}

Instance four_chordless30() {
    EdgeList cycles = concat(
        {cycle_edges(0, 5), cycle_edges(5, 5), cycle_edges(10, 5), cycle_edges(15, 15)});
    EdgeList m;
    for (int i = 0; i < 5; ++i) {
        m.push_back({0 + i, 15 + 3 * i});
        m.push_back({5 + i, 16 + 3 * i});
        m.push_back({10 + i, 17 + 3 * i});
    }
    return make(30, cycles, m);
}

Instance four_chordless_bad22() {
    EdgeList cycles = concat(
        {cycle_edges(0, 3), cycle_edges(3, 5), cycle_edges(8, 5), cycle_edges(13, 9)});
    EdgeList m = {{0, 13}, {1, 3}, {2, 8},
                  {4, 14}, {5, 15}, {6, 16}, {7, 17},
                  {9, 18}, {10, 19}, {11, 20}, {12, 21}};
    return make(22, cycles, m);
}

Instance six_pentagon_ring30() {
    EdgeList cycles;
    for (int i = 0; i < 6; ++i) {
        auto c = cycle_edges(5 * i, 5);
        cycles.insert(cycles.end(), c.begin(), c.end());
    }
    EdgeList m;
    for (int i = 0; i < 6; ++i) {
        m.push_back({5 * i + 4, 5 * ((i + 1) % 6)}); // ring junctions
        m.push_back({5 * i + 1, 5 * i + 3});         // chords
    }
    m.push_back({2, 17});
    m.push_back({7, 22});
    m.push_back({12, 27});
    return make(30, cycles, m);
}

Instance prism_instance() {
    CubicGraph g = prism5();
    EdgeList m = {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}};
    return Instance{g, matching_from_pairs(g, m)};
}

CubicGraph g8_host12() {
    return CubicGraph(12, {{0, 4}, {0, 5}, {1, 4}, {1, 7}, {2, 7}, {2, 6}, {3, 5}, {3, 6},
                           {4, 6}, {5, 7},                        // the pattern
                           {8, 9}, {9, 10}, {10, 11}, {8, 11},    // boundary 4-cycle
                           {0, 8}, {1, 9}, {2, 10}, {3, 11}});
}

CubicGraph g8_host14() {
    return CubicGraph(14, {{0, 4}, {0, 5}, {1, 4}, {1, 7}, {2, 7}, {2, 6}, {3, 5}, {3, 6},
                           {4, 6}, {5, 7},
                           {8, 9}, {9, 10}, {10, 11}, {11, 12}, {12, 13}, {8, 13}, {9, 12},
                           {0, 8}, {1, 10}, {2, 11}, {3, 13}});
}

CubicGraph triangle_expand(const CubicGraph& g, int v) {
    int n = g.vertex_count();
    std::vector<int> relabel(n);
    int k = 0;
    for (int u = 0; u < n; ++u) relabel[u] = (u == v) ? -1 : k++;
    EdgeList edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (a == v || b == v) continue;
        edges.emplace_back(relabel[a], relabel[b]);
    }
    int t0 = k, t1 = k + 1, t2 = k + 2;
    edges.insert(edges.end(), {{t0, t1}, {t1, t2}, {t0, t2}});
    int slot = 0;
    std::array<int, 3> tri{t0, t1, t2};
    for (EdgeId e : g.incident(v)) edges.emplace_back(tri[slot++], relabel[g.other_end(e, v)]);
    return CubicGraph(n + 2, edges);
}

std::string data_path(const std::string& relative_path) {
    return std::string(FR_SOURCE_DIR) + "/data/" + relative_path;
}

CubicGraph load_data_graph(const std::string& relative_path) {
    std::ifstream in(data_path(relative_path));
    std::string line;
    std::getline(in, line);
    return parse_graph6(line);
}

} // namespace fr::tests
