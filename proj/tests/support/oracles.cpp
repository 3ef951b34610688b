#include "support/oracles.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace fr::tests {

namespace {

std::uint64_t pm_count_rec(const CubicGraph& g, int first_edge, std::vector<char>& used) {
    bool all = std::all_of(used.begin(), used.end(), [](char c) { return c != 0; });
    if (all) return 1;
    std::uint64_t total = 0;
    for (EdgeId e = first_edge; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (used[u] || used[v]) continue;
        used[u] = used[v] = 1;
        total += pm_count_rec(g, e + 1, used);
        used[u] = used[v] = 0;
    }
    return total;
}

bool connected_without(const CubicGraph& g, EdgeId banned) {
    std::vector<char> seen(g.vertex_count(), 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (EdgeId e : g.incident(v)) {
            if (e == banned) continue;
            int w = g.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push_back(w);
            }
        }
    }
    return cnt == g.vertex_count();
}

} // namespace

std::uint64_t naive_pm_count(const CubicGraph& g) {
    std::vector<char> used(g.vertex_count(), 0);
    return pm_count_rec(g, 0, used);
}

std::vector<EdgeId> edge_removal_bridges(const CubicGraph& g) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (!connected_without(g, e)) out.push_back(e);
    return out;
}

int bfs_girth(const CubicGraph& g) {
    int best = g.vertex_count() + 1;
    // parallel pair = 2-cycle, the minimum possible here
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (EdgeId f = e + 1; f < g.edge_count(); ++f)
            if (g.endpoints(e) == g.endpoints(f)) best = 2;
    for (int s = 0; s < g.vertex_count(); ++s) {
        std::vector<int> dist(g.vertex_count(), -1), par(g.vertex_count(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            std::vector<int> nbrs;
            for (EdgeId e : g.incident(v)) {
                int w = g.other_end(e, v);
                if (std::find(nbrs.begin(), nbrs.end(), w) == nbrs.end()) nbrs.push_back(w);
            }
            for (int w : nbrs) {
                if (w == par[v]) continue;
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    par[w] = v;
                    q.push_back(w);
                } else {
                    best = std::min(best, dist[v] + dist[w] + 1);
                }
            }
        }
    }
    return best;
}

std::vector<int> walked_arc_lengths(int length, std::vector<int> positions) {
    std::sort(positions.begin(), positions.end());
    std::vector<int> arcs;
    for (size_t i = 0; i < positions.size(); ++i) {
        int from = positions[i];
        int steps = 0;
        int at = from;
        do {
            at = (at + 1) % length;
            ++steps;
        } while (std::find(positions.begin(), positions.end(), at) == positions.end());
        arcs.push_back(steps);
    }
    return arcs;
}

namespace {

bool naive_match(const CubicGraph& g, const PatternGraph& pat, std::vector<int>& image,
                 std::vector<char>& used, int p) {
    if (p == pat.n) {
        // boundary: every attachment's third edge leaves the image
        std::vector<char> in_image(g.vertex_count(), 0);
        for (int h : image) in_image[h] = 1;
        for (int a : pat.attachments) {
            int deg_in = 0;
            for (EdgeId e : g.incident(image[a]))
                if (in_image[g.other_end(e, image[a])]) ++deg_in;
            if (deg_in != 2) return false;
        }
        return true;
    }
    for (int h = 0; h < g.vertex_count(); ++h) {
        if (used[h]) continue;
        bool ok = true;
        for (auto [u, v] : pat.edges) {
            int a = -1, b = -1;
            if (u == p) a = h, b = image[v] == -1 ? -1 : image[v];
            if (v == p) a = h, b = image[u] == -1 ? -1 : image[u];
            if (a != -1 && b != -1 && !g.adjacent(a, b)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        image[p] = h;
        used[h] = 1;
        if (naive_match(g, pat, image, used, p + 1)) return true;
        image[p] = -1;
        used[h] = 0;
    }
    return false;
}

} // namespace

bool naive_contains_pattern(const CubicGraph& g, const PatternGraph& pattern) {
    if (g.vertex_count() < pattern.n) return false;
    std::vector<int> image(pattern.n, -1);
    std::vector<char> used(g.vertex_count(), 0);
    return naive_match(g, pattern, image, used, 0);
}

std::uint64_t automorphism_count(const RawGraph& g) {
    std::vector<std::vector<int>> mult(g.n, std::vector<int>(g.n, 0));
    for (auto [u, v] : g.edges) {
        mult[u][v]++;
        mult[v][u]++;
    }
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int i = 0; i < g.n && ok; ++i)
            for (int j = i; j < g.n && ok; ++j)
                if (mult[i][j] != mult[perm[i]][perm[j]]) ok = false;
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

bool is_proper_3_edge_colouring(const CubicGraph& g, const std::vector<int>& colour) {
    if (static_cast<int>(colour.size()) != g.edge_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::array<int, 3> seen{0, 0, 0};
        for (EdgeId e : g.incident(v)) {
            if (colour[e] < 0 || colour[e] > 2) return false;
            seen[colour[e]]++;
        }
        if (seen != std::array<int, 3>{1, 1, 1}) return false;
    }
    return true;
}

} // namespace fr::tests
