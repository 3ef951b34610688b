#include "fr/generate.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace fr {

namespace {

std::uint64_t mix64(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

std::vector<std::uint64_t> refine_colours(const CubicGraph& g, int rounds) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> col(n, 3); // cubic: uniform start
    for (int r = 0; r < rounds; ++r) {
        std::vector<std::uint64_t> next(n);
        for (int v = 0; v < n; ++v) {
            std::array<std::uint64_t, 3> nb;
            for (int i = 0; i < 3; ++i) nb[i] = col[g.other_end(g.incident(v)[i], v)];
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = col[v];
            for (auto x : nb) h = mix64(h, x);
            next[v] = h;
        }
        col = std::move(next);
    }
    return col;
}

} // namespace

std::uint64_t wl_hash(const CubicGraph& g) {
    auto col = refine_colours(g, 4);
    std::sort(col.begin(), col.end());
    std::uint64_t h = static_cast<std::uint64_t>(g.vertex_count());
    for (auto x : col) h = mix64(h, x);
    return h;
}

namespace {

struct IsoSearch {
    const CubicGraph& a;
    const CubicGraph& b;
    std::vector<std::uint64_t> ca, cb;
    std::vector<int> map;     // a -> b
    std::vector<char> used;   // b side

    IsoSearch(const CubicGraph& a_, const CubicGraph& b_) : a(a_), b(b_) {
        ca = refine_colours(a, 4);
        cb = refine_colours(b, 4);
        map.assign(a.vertex_count(), -1);
        used.assign(b.vertex_count(), 0);
    }

    bool consistent(int va, int vb) const {
        // multiplicities to already-mapped neighbours must match both ways
        std::map<int, int> need;
        for (EdgeId e : a.incident(va)) {
            int w = a.other_end(e, va);
            if (map[w] != -1) ++need[map[w]];
        }
        std::map<int, int> have;
        for (EdgeId e : b.incident(vb)) {
            int w = b.other_end(e, vb);
            if (used[w]) ++have[w];
        }
        return need == have;
    }

    bool rec(int va) {
        if (va == a.vertex_count()) return true;
        for (int vb = 0; vb < b.vertex_count(); ++vb) {
            if (used[vb] || ca[va] != cb[vb] || !consistent(va, vb)) continue;
            map[va] = vb;
            used[vb] = 1;
            if (rec(va + 1)) return true;
            map[va] = -1;
            used[vb] = 0;
        }
        return false;
    }
};

} // namespace

bool isomorphic(const CubicGraph& a, const CubicGraph& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    if (wl_hash(a) != wl_hash(b)) return false;
    IsoSearch s(a, b);
    {
        auto sa = s.ca, sb = s.cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    return s.rec(0);
}

namespace {

/// Generation in vertex-discovery order: the lowest unsaturated vertex gets
/// all its remaining edges at once, partners non-decreasing, fresh labels
/// introduced consecutively. Every connected labelled graph appears under at
/// least one discovery order; dedup collapses relabelings.
struct Generator {
    int n;
    bool multi;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> deg;
    int max_intro = 0;
    const std::function<void(std::vector<std::pair<int, int>>&)>& emit;

    Generator(int n_, bool multi_, const std::function<void(std::vector<std::pair<int, int>>&)>& e)
        : n(n_), multi(multi_), deg(n_, 0), emit(e) {}

    bool has_edge(int u, int v) const {
        for (auto [a, b] : edges)
            if (a == u && b == v) return true;
        return false;
    }

    void step() {
        int u = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] < 3) {
                u = v;
                break;
            }
        if (u == -1) {
            if (max_intro == n - 1) emit(edges);
            return;
        }
        if (u > max_intro) return; // would start a second component
        fill(u, u + 1);
    }

    void fill(int u, int minq) {
        if (deg[u] == 3) {
            step();
            return;
        }
        int hi = std::min(max_intro + 1, n - 1);
        for (int q = minq; q <= hi; ++q) {
            if (deg[q] >= 3) continue;
            if (!multi && has_edge(u, q)) continue;
            edges.emplace_back(u, q);
            ++deg[u];
            ++deg[q];
            int saved = max_intro;
            max_intro = std::max(max_intro, q);
            fill(u, multi ? q : q + 1);
            max_intro = saved;
            --deg[u];
            --deg[q];
            edges.pop_back();
        }
    }
};

void generate_impl(int n, bool allow_multi, bool dedupe, bool require_bridgeless,
                   const std::function<void(const CubicGraph&)>& yield) {
    if (n < 2 || n % 2 != 0) return;
    if (!allow_multi && n < 4) return;
    std::unordered_map<std::uint64_t, std::vector<CubicGraph>> seen;
    std::function<void(std::vector<std::pair<int, int>>&)> emit =
        [&](std::vector<std::pair<int, int>>& edges) {
            CubicGraph g(n, edges);
            if (require_bridgeless && !find_bridges(g).empty()) return;
            if (dedupe) {
                auto key = wl_hash(g);
                auto& bucket = seen[key];
                for (const auto& h : bucket)
                    if (isomorphic(g, h)) return;
                bucket.push_back(g);
            }
            yield(g);
        };
    Generator gen(n, allow_multi, emit);
    gen.step();
}

} // namespace

void generate_cubic_bridgeless(int n, bool allow_multi, bool dedupe,
                               const std::function<void(const CubicGraph&)>& yield) {
    generate_impl(n, allow_multi, dedupe, true, yield);
}

std::vector<CubicGraph> generate_cubic_bridgeless(int n, bool allow_multi, bool dedupe) {
    std::vector<CubicGraph> out;
    generate_impl(n, allow_multi, dedupe, true, [&](const CubicGraph& g) { out.push_back(g); });
    return out;
}

std::vector<CubicGraph> generate_cubic_connected(int n, bool allow_multi, bool dedupe) {
    std::vector<CubicGraph> out;
    generate_impl(n, allow_multi, dedupe, false, [&](const CubicGraph& g) { out.push_back(g); });
    return out;
}

} // namespace fr
