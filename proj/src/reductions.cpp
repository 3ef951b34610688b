#include "fr/reductions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace fr {

namespace {

PatternGraph make_g8() {
    // a=0 b=1 c=2 d=3 x=4 y=5 z=6 t=7
    PatternGraph p;
    p.n = 8;
    p.edges = {{0, 4}, {0, 5}, {1, 4}, {1, 7}, {2, 7}, {2, 6}, {3, 5}, {3, 6}, {4, 6}, {5, 7}};
    p.attachments = {0, 1, 2, 3};
    p.name = "g8";
    return p;
}

PatternGraph make_pmv() {
    // Petersen minus vertex a; labels b=0 c=1 d=2 e=3 x=4 y=5 z=6 t=7 u=8
    PatternGraph p;
    p.n = 9;
    p.edges = {{0, 1}, {1, 2}, {2, 3},                   // b-c-d-e path
               {0, 7}, {1, 5}, {2, 8}, {3, 6},           // bt cy du ez
               {4, 5}, {5, 6}, {6, 7}, {7, 8}, {8, 4}};  // x-y-z-t-u cycle
    p.attachments = {4, 0, 3}; // x, b, e
    p.name = "petersen-minus-vertex";
    return p;
}

} // namespace

const PatternGraph& g8_pattern() {
    static const PatternGraph p = make_g8();
    return p;
}

const PatternGraph& petersen_minus_vertex_pattern() {
    static const PatternGraph p = make_pmv();
    return p;
}

namespace {

struct PatternSearch {
    const CubicGraph& g;
    const PatternGraph& pat;
    std::vector<std::vector<int>> pat_adj;
    std::vector<int> order;             // pattern vertices, connectivity-first
    std::vector<int> image;             // pattern -> host
    std::vector<char> host_used;
    std::optional<Embedding> found;

    PatternSearch(const CubicGraph& g_, const PatternGraph& p_) : g(g_), pat(p_) {
        pat_adj.assign(pat.n, {});
        for (auto [u, v] : pat.edges) {
            pat_adj[u].push_back(v);
            pat_adj[v].push_back(u);
        }
        std::vector<char> placed(pat.n, 0);
        order.push_back(0);
        placed[0] = 1;
        while (static_cast<int>(order.size()) < pat.n) {
            int best = -1, best_links = -1;
            for (int v = 0; v < pat.n; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int w : pat_adj[v]) links += placed[w];
                if (links > best_links) {
                    best_links = links;
                    best = v;
                }
            }
            order.push_back(best);
            placed[best] = 1;
        }
        image.assign(pat.n, -1);
        host_used.assign(g.vertex_count(), 0);
    }

    bool boundary_ok(Embedding& emb) const {
        emb.boundary.clear();
        emb.boundary_edges.clear();
        std::vector<char> in_image(g.vertex_count(), 0);
        for (int h : image) in_image[h] = 1;
        for (int a : pat.attachments) {
            int h = image[a];
            std::set<EdgeId> used;
            for (int q : pat_adj[a]) {
                auto ids = g.edges_between(h, image[q]);
                EdgeId pick = -1;
                for (EdgeId e : ids)
                    if (!used.count(e)) {
                        pick = e;
                        break;
                    }
                if (pick == -1) return false;
                used.insert(pick);
            }
            EdgeId rest = -1;
            for (EdgeId e : g.incident(h))
                if (!used.count(e)) rest = e;
            if (rest == -1) return false;
            int nb = g.other_end(rest, h);
            if (in_image[nb]) return false;
            emb.boundary.push_back(nb);
            emb.boundary_edges.push_back(rest);
        }
        return true;
    }

    bool rec(size_t depth) {
        if (depth == order.size()) {
            Embedding emb;
            emb.image = image;
            if (!boundary_ok(emb)) return false;
            found = std::move(emb);
            return true;
        }
        int p = order[depth];
        for (int h = 0; h < g.vertex_count(); ++h) {
            if (host_used[h]) continue;
            bool ok = true;
            for (int q : pat_adj[p]) {
                if (image[q] == -1) continue;
                if (!g.adjacent(h, image[q])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[p] = h;
            host_used[h] = 1;
            if (rec(depth + 1)) return true;
            image[p] = -1;
            host_used[h] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<Embedding> find_pattern(const CubicGraph& g, const PatternGraph& pattern) {
    if (g.vertex_count() < pattern.n) return std::nullopt;
    PatternSearch s(g, pattern);
    s.rec(0);
    return s.found;
}

std::optional<Embedding> find_g8(const CubicGraph& g) { return find_pattern(g, g8_pattern()); }

std::optional<Embedding> find_petersen_minus_vertex(const CubicGraph& g) {
    return find_pattern(g, petersen_minus_vertex_pattern());
}

namespace {

void check_embedding(const CubicGraph& g, const PatternGraph& pat, const Embedding& emb) {
    if (static_cast<int>(emb.image.size()) != pat.n ||
        emb.boundary.size() != pat.attachments.size())
        throw Error(ErrorCode::InvalidEmbedding, "embedding shape mismatch");
    std::set<int> img(emb.image.begin(), emb.image.end());
    if (static_cast<int>(img.size()) != pat.n)
        throw Error(ErrorCode::InvalidEmbedding, "image not injective");
    for (auto [u, v] : pat.edges)
        if (!g.adjacent(emb.image[u], emb.image[v]))
            throw Error(ErrorCode::InvalidEmbedding, "pattern edge missing in host");
    for (size_t i = 0; i < emb.boundary.size(); ++i) {
        if (img.count(emb.boundary[i]))
            throw Error(ErrorCode::InvalidEmbedding, "boundary vertex inside the image");
        auto [u, v] = g.endpoints(emb.boundary_edges[i]);
        int a = emb.image[pat.attachments[i]];
        if (!((u == a && v == emb.boundary[i]) || (v == a && u == emb.boundary[i])))
            throw Error(ErrorCode::InvalidEmbedding, "boundary edge mismatch");
    }
}

/// Shared assembly: host edges outside the image survive with their ids;
/// tagged extra edges get ids resolved after canonical sorting (added copies
/// take the later ids within an equal-endpoint group).
ReductionResult build_reduced(const CubicGraph& g, const Embedding& emb, PatternKind kind,
                              const std::vector<std::pair<int, int>>& extra_host_pairs,
                              bool add_new_vertex) {
    std::vector<char> in_image(g.vertex_count(), 0);
    for (int h : emb.image) in_image[h] = 1;
    std::vector<int> relabel(g.vertex_count(), -1);
    std::vector<int> reduced_vertex;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_image[v]) {
            relabel[v] = static_cast<int>(reduced_vertex.size());
            reduced_vertex.push_back(v);
        }
    int new_vertex = -1;
    if (add_new_vertex) {
        new_vertex = static_cast<int>(reduced_vertex.size());
        reduced_vertex.push_back(-1);
    }

    // entries: endpoints in reduced labels, tag = host edge id or -(marker+1)
    struct Entry {
        std::pair<int, int> e;
        int tag;
    };
    std::vector<Entry> entries;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        if (in_image[u] || in_image[v]) continue;
        int a = relabel[u], b = relabel[v];
        if (a > b) std::swap(a, b);
        entries.push_back({{a, b}, e});
    }
    for (size_t i = 0; i < extra_host_pairs.size(); ++i) {
        auto [hu, hv] = extra_host_pairs[i];
        int a = hu == -1 ? new_vertex : relabel[hu];
        int b = hv == -1 ? new_vertex : relabel[hv];
        if (a == b) throw Error(ErrorCode::InvalidEmbedding, "reduction would create a loop");
        if (a > b) std::swap(a, b);
        entries.push_back({{a, b}, -static_cast<int>(i) - 1});
    }
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
        if (x.e != y.e) return x.e < y.e;
        // host edges first, then markers ascending
        bool xh = x.tag >= 0, yh = y.tag >= 0;
        if (xh != yh) return xh;
        return xh ? x.tag < y.tag : x.tag > y.tag;
    });

    std::vector<std::pair<int, int>> edge_list;
    edge_list.reserve(entries.size());
    for (const auto& en : entries) edge_list.push_back(en.e);
    CubicGraph reduced(static_cast<int>(reduced_vertex.size()), edge_list);

    // the constructor sorts by endpoint pair; entries are already in that
    // order, so ids line up positionally
    ReductionResult res{kind, std::move(reduced), {}, {}, std::move(reduced_vertex), emb};
    res.back_edge.assign(entries.size(), -1);
    res.added_edges.assign(extra_host_pairs.size(), -1);
    for (size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].tag >= 0)
            res.back_edge[i] = entries[i].tag;
        else
            res.added_edges[-entries[i].tag - 1] = static_cast<EdgeId>(i);
    }
    return res;
}

} // namespace

ReductionResult reduce_g8(const CubicGraph& g, const Embedding& emb) {
    check_embedding(g, g8_pattern(), emb);
    int a1 = emb.boundary[0], b1 = emb.boundary[1], c1 = emb.boundary[2], d1 = emb.boundary[3];
    if (a1 == c1 || b1 == d1)
        throw Error(ErrorCode::InvalidEmbedding, "replacement edge would be a loop");
    return build_reduced(g, emb, PatternKind::G8, {{a1, c1}, {b1, d1}}, false);
}

ReductionResult reduce_pmv(const CubicGraph& g, const Embedding& emb) {
    check_embedding(g, petersen_minus_vertex_pattern(), emb);
    int x1 = emb.boundary[0], b1 = emb.boundary[1], e1 = emb.boundary[2];
    return build_reduced(g, emb, PatternKind::PetersenMinusVertex,
                         {{-1, x1}, {-1, b1}, {-1, e1}}, true);
}

namespace {

EdgeId pattern_host_edge(const CubicGraph& host, const Embedding& emb, int p, int q) {
    auto ids = host.edges_between(emb.image[p], emb.image[q]);
    if (ids.empty()) throw Error(ErrorCode::InvalidEmbedding, "pattern edge vanished from host");
    return ids[0];
}

std::vector<EdgeId> map_pattern_edges(const CubicGraph& host, const Embedding& emb,
                                      const std::vector<std::pair<int, int>>& pairs) {
    std::vector<EdgeId> out;
    for (auto [p, q] : pairs) out.push_back(pattern_host_edge(host, emb, p, q));
    return out;
}

std::vector<EdgeId> outside_part(const ReductionResult& red, const PerfectMatching& p) {
    std::vector<EdgeId> out;
    for (EdgeId e : p.edges)
        if (red.back_edge[e] != -1) out.push_back(red.back_edge[e]);
    return out;
}

PerfectMatching assemble(const CubicGraph& host, std::vector<EdgeId> edges) {
    std::sort(edges.begin(), edges.end());
    return PerfectMatching{std::move(edges), host.id()};
}

bool empty_triple_intersection(const std::array<PerfectMatching, 3>& ms) {
    for (EdgeId e : ms[0].edges)
        if (ms[1].contains(e) && ms[2].contains(e)) return false;
    return true;
}

} // namespace

std::array<PerfectMatching, 3> lift_g8(const CubicGraph& host, const ReductionResult& red,
                                       const PerfectMatching& p1, const PerfectMatching& p2,
                                       const PerfectMatching& p3) {
    if (red.kind != PatternKind::G8)
        throw Error(ErrorCode::PreconditionFailed, "reduction result is not a G8 reduction");
    const Embedding& emb = red.emb;
    const std::array<const PerfectMatching*, 3> ps{&p1, &p2, &p3};
    for (const auto* p : ps)
        if (!is_perfect_matching(red.reduced, *p))
            throw Error(ErrorCode::PreconditionFailed, "input is not a perfect matching of the reduction");
    {
        EdgeId shared = -1;
        for (EdgeId e : p1.edges)
            if (p2.contains(e) && p3.contains(e)) shared = e;
        if (shared != -1)
            throw Error(ErrorCode::PreconditionFailed, "reduced matchings intersect");
    }

    // pattern labels: a=0 b=1 c=2 d=3 x=4 y=5 z=6 t=7
    auto full_a = map_pattern_edges(host, emb, {{0, 4}, {1, 7}, {2, 6}, {3, 5}}); // ax bt cz dy
    auto full_b = map_pattern_edges(host, emb, {{0, 5}, {1, 4}, {2, 7}, {3, 6}}); // ay bx ct dz
    auto l1 = map_pattern_edges(host, emb, {{1, 4}, {5, 7}, {3, 6}});             // bx yt dz
    auto l2 = map_pattern_edges(host, emb, {{1, 7}, {3, 5}, {4, 6}});             // bt dy xz
    auto r1 = map_pattern_edges(host, emb, {{0, 5}, {2, 7}, {4, 6}});             // ay ct xz
    auto r2 = map_pattern_edges(host, emb, {{0, 4}, {2, 6}, {5, 7}});             // ax cz yt
    auto z = map_pattern_edges(host, emb, {{4, 6}, {5, 7}});                      // xz yt

    EdgeId ac = red.added_edges[0], bd = red.added_edges[1];
    auto options_for = [&](const PerfectMatching& p, int slot) {
        bool has_ac = p.contains(ac), has_bd = p.contains(bd);
        std::vector<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>> opts; // fixes, completion
        std::vector<EdgeId> fixes;
        if (has_ac) {
            fixes.push_back(emb.boundary_edges[0]);
            fixes.push_back(emb.boundary_edges[2]);
        }
        if (has_bd) {
            fixes.push_back(emb.boundary_edges[1]);
            fixes.push_back(emb.boundary_edges[3]);
        }
        if (has_ac && has_bd) {
            opts.push_back({fixes, z});
        } else if (has_ac) {
            opts.push_back({fixes, l1});
            opts.push_back({fixes, l2});
        } else if (has_bd) {
            opts.push_back({fixes, r1});
            opts.push_back({fixes, r2});
        } else if (slot == 1) {
            opts.push_back({fixes, full_b});
            opts.push_back({fixes, full_a});
        } else {
            opts.push_back({fixes, full_a});
            opts.push_back({fixes, full_b});
        }
        return opts;
    };

    std::array<std::vector<std::pair<std::vector<EdgeId>, std::vector<EdgeId>>>, 3> opts{
        options_for(p1, 0), options_for(p2, 1), options_for(p3, 2)};
    for (const auto& o1 : opts[0])
        for (const auto& o2 : opts[1])
            for (const auto& o3 : opts[2]) {
                std::array<PerfectMatching, 3> ms;
                const std::array<const std::pair<std::vector<EdgeId>, std::vector<EdgeId>>*, 3>
                    chosen{&o1, &o2, &o3};
                bool ok = true;
                for (int i = 0; i < 3 && ok; ++i) {
                    auto edges = outside_part(red, *ps[i]);
                    edges.insert(edges.end(), chosen[i]->first.begin(), chosen[i]->first.end());
                    edges.insert(edges.end(), chosen[i]->second.begin(), chosen[i]->second.end());
                    ms[i] = assemble(host, std::move(edges));
                    ok = is_perfect_matching(host, ms[i]);
                }
                if (ok && empty_triple_intersection(ms)) return ms;
            }
    throw Error(ErrorCode::CaseTableMiss, "no substitution combination lifted to a valid triple");
}

std::array<PerfectMatching, 3> lift_pmv(const CubicGraph& host, const ReductionResult& red,
                                        const PerfectMatching& p1, const PerfectMatching& p2,
                                        const PerfectMatching& p3) {
    if (red.kind != PatternKind::PetersenMinusVertex)
        throw Error(ErrorCode::PreconditionFailed, "reduction result is not a P-v reduction");
    const Embedding& emb = red.emb;
    const std::array<const PerfectMatching*, 3> ps{&p1, &p2, &p3};
    std::array<int, 3> which{-1, -1, -1}; // boundary index of the v-edge each P uses
    for (int i = 0; i < 3; ++i) {
        if (!is_perfect_matching(red.reduced, *ps[i]))
            throw Error(ErrorCode::PreconditionFailed, "input is not a perfect matching of the reduction");
        int cnt = 0;
        for (int j = 0; j < 3; ++j)
            if (ps[i]->contains(red.added_edges[j])) {
                which[i] = j;
                ++cnt;
            }
        if (cnt != 1)
            throw Error(ErrorCode::PreconditionFailed,
                        "reduced matching must use exactly one edge at the new vertex");
    }
    {
        for (EdgeId e : p1.edges)
            if (p2.contains(e) && p3.contains(e))
                throw Error(ErrorCode::PreconditionFailed, "reduced matchings intersect");
    }

    // pattern labels: b=0 c=1 d=2 e=3 x=4 y=5 z=6 t=7 u=8
    std::array<std::vector<EdgeId>, 3> plain, primed;
    plain[0] = map_pattern_edges(host, emb, {{0, 7}, {1, 5}, {2, 8}, {3, 6}});  // bt cy du ez
    primed[0] = map_pattern_edges(host, emb, {{7, 8}, {0, 1}, {5, 6}, {2, 3}}); // tu bc yz ed
    plain[1] = map_pattern_edges(host, emb, {{1, 5}, {4, 8}, {2, 3}, {6, 7}});  // cy xu de zt
    primed[1] = map_pattern_edges(host, emb, {{1, 2}, {7, 8}, {3, 6}, {4, 5}}); // cd ut ez xy
    plain[2] = map_pattern_edges(host, emb, {{1, 2}, {0, 7}, {5, 6}, {4, 8}});  // cd bt zy xu
    primed[2] = map_pattern_edges(host, emb, {{2, 8}, {4, 5}, {6, 7}, {0, 1}}); // du xy zt bc

    auto build = [&](int i, bool use_primed) {
        auto edges = outside_part(red, *ps[i]);
        edges.push_back(emb.boundary_edges[which[i]]);
        const auto& tab = use_primed ? primed[which[i]] : plain[which[i]];
        edges.insert(edges.end(), tab.begin(), tab.end());
        return assemble(host, std::move(edges));
    };

    // preferred selection per the case analysis: a shared v-edge makes the
    // second of the sharing pair take the primed variant
    std::array<bool, 3> primed_flag{false, false, false};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (which[i] == which[j]) primed_flag[j] = true;

    std::vector<std::array<bool, 3>> combos{primed_flag};
    for (int mask = 0; mask < 8; ++mask)
        combos.push_back({(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0});
    for (const auto& c : combos) {
        std::array<PerfectMatching, 3> ms{build(0, c[0]), build(1, c[1]), build(2, c[2])};
        bool ok = true;
        for (const auto& m : ms) ok = ok && is_perfect_matching(host, m);
        if (ok && empty_triple_intersection(ms)) return ms;
    }
    throw Error(ErrorCode::CaseTableMiss, "no variant combination lifted to a valid triple");
}

MinimalityReport minimality_report(const CubicGraph& g) {
    MinimalityReport rep;
    rep.n = g.vertex_count();
    rep.girth_value = girth(g);
    if (rep.girth_value < 5) {
        // recover a shortest cycle: per-edge removal BFS with parents
        for (EdgeId banned = 0; banned < g.edge_count() && rep.short_cycle.empty(); ++banned) {
            auto [s, t] = g.endpoints(banned);
            std::vector<int> parent(g.vertex_count(), -2);
            std::deque<int> q{s};
            parent[s] = -1;
            while (!q.empty()) {
                int v = q.front();
                q.pop_front();
                if (v == t) break;
                for (EdgeId e : g.incident(v)) {
                    if (e == banned) continue;
                    int w = g.other_end(e, v);
                    if (parent[w] == -2) {
                        parent[w] = v;
                        q.push_back(w);
                    }
                }
            }
            if (parent[t] == -2) continue;
            std::vector<int> path;
            for (int v = t; v != -1; v = parent[v]) path.push_back(v);
            if (static_cast<int>(path.size()) == rep.girth_value) rep.short_cycle = path;
        }
    }
    rep.g8 = find_g8(g);
    rep.pmv = find_petersen_minus_vertex(g);
    return rep;
}

} // namespace fr
