#include "fr/solver.hpp"

#include <algorithm>
#include <deque>
#include <fstream>

#include "fr/reductions.hpp"

namespace fr {

using nlohmann::json;

bool verify_certificate(const CubicGraph& g, const FRCertificate& cert) {
    for (const auto* m : {&cert.m1, &cert.m2, &cert.m3})
        if (m->graph_id != g.id() || !is_perfect_matching(g, *m)) return false;
    for (EdgeId e : cert.m1.edges)
        if (cert.m2.contains(e) && cert.m3.contains(e)) return false;
    return true;
}

FRCertificate from_balanced_pair(const CubicGraph& g, const PerfectMatching& m,
                                 const BalancedMatching& a, const BalancedMatching& b) {
    if (a.m != m || b.m != m)
        throw Error(ErrorCode::PreconditionFailed, "balanced matchings belong to different M");
    for (EdgeId e : a.a)
        if (std::binary_search(b.a.begin(), b.a.end(), e))
            throw Error(ErrorCode::NotDisjoint, "balanced pick sets intersect");
    FRCertificate cert{m, a.witness, b.witness, "balanced-pair", json::object()};
    cert.trail["a_picks"] = a.a;
    cert.trail["b_picks"] = b.a;
    if (!verify_certificate(g, cert))
        throw Error(ErrorCode::LemmaViolation, "balanced pair did not yield a valid certificate");
    return cert;
}

namespace {

json edge_list_json(const CubicGraph& g, const std::vector<EdgeId>& edges) {
    json out = json::array();
    for (EdgeId e : edges) {
        auto [u, v] = g.endpoints(e);
        out.push_back(json::array({u, v}));
    }
    return out;
}

/// Certificate from a pick set A: witness M2 for A plus a matching avoiding A.
std::optional<FRCertificate> certificate_from_picks(const CubicGraph& g, const PerfectMatching& m,
                                                    const std::vector<EdgeId>& picks,
                                                    const std::string& strategy, json trail,
                                                    const Limits* limits) {
    auto witness = is_balanced(g, m, picks, limits);
    if (!witness)
        throw Error(ErrorCode::LemmaViolation,
                    "pick set expected to be balanced has no witness (strategy " + strategy + ")");
    PerfectMatching m3 = pm_avoiding(g, picks, limits);
    FRCertificate cert{m, *witness, m3, strategy, std::move(trail)};
    cert.trail["picks"] = edge_list_json(g, picks);
    if (!verify_certificate(g, cert))
        throw Error(ErrorCode::LemmaViolation, "strategy " + strategy + " produced an invalid triple");
    return cert;
}

/// Deterministic shortest path between two cycles: multi-source BFS, queue
/// processed in insertion order, neighbours by edge id.
std::vector<int> shortest_path_between(const CubicGraph& g, const std::vector<int>& from,
                                       const std::vector<int>& to) {
    std::vector<int> parent(g.vertex_count(), -2);
    std::vector<char> target(g.vertex_count(), 0);
    for (int t : to) target[t] = 1;
    std::deque<int> q;
    for (int s : from) {
        if (parent[s] != -2) continue;
        parent[s] = -1;
        q.push_back(s);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (target[v]) {
            std::vector<int> path;
            for (int w = v; w != -1; w = parent[w]) path.push_back(w);
            std::reverse(path.begin(), path.end());
            return path;
        }
        for (EdgeId e : g.incident(v)) {
            int w = g.other_end(e, v);
            if (parent[w] == -2) {
                parent[w] = v;
                q.push_back(w);
            }
        }
    }
    throw Error(ErrorCode::Disconnected, "cycles are in different components");
}

} // namespace

std::optional<FRCertificate> strategy_oddness2_close(const CubicGraph& g, const PerfectMatching& m,
                                                     const TwoFactor& f, const Limits* limits) {
    if (f.odd_count() != 2)
        throw Error(ErrorCode::WrongOddness, "strategy needs exactly two odd cycles");
    FactorContext ctx = make_factor_context(g, m, f);
    const Cycle& c1 = f.cycles[f.odd_cycle_ids[0]];
    const Cycle& c2 = f.cycles[f.odd_cycle_ids[1]];
    int d = set_distance(g, c1.vertices, c2.vertices);
    json trail{{"distance", d}};
    if (d == 1) {
        EdgeId best = -1;
        for (EdgeId e : m.edges) {
            auto [u, v] = g.endpoints(e);
            int cu = ctx.cycle_of[u], cv = ctx.cycle_of[v];
            if ((cu == f.odd_cycle_ids[0] && cv == f.odd_cycle_ids[1]) ||
                (cv == f.odd_cycle_ids[0] && cu == f.odd_cycle_ids[1])) {
                best = e;
                break;
            }
        }
        if (best == -1)
            throw Error(ErrorCode::LemmaViolation, "distance 1 without a joining matching edge");
        return certificate_from_picks(g, m, {best}, "oddness2-close", trail, limits);
    }
    if (d == 2)
        throw Error(ErrorCode::LemmaViolation,
                    "two odd cycles at distance 2: the middle vertex would need two matching edges");
    if (d == 3) {
        auto path = shortest_path_between(g, c1.vertices, c2.vertices);
        std::vector<EdgeId> picks{ctx.m_edge_at[path.front()], ctx.m_edge_at[path.back()]};
        return certificate_from_picks(g, m, picks, "oddness2-close", trail, limits);
    }
    return std::nullopt;
}

std::optional<FRCertificate> strategy_oddness2_near_bipartite(const CubicGraph& g,
                                                              const PerfectMatching& m,
                                                              const TwoFactor& f,
                                                              const Limits* limits) {
    if (f.cycles.size() != 3 || f.odd_count() != 2)
        throw Error(ErrorCode::WrongShape, "strategy needs cycles {odd, odd, even}");
    FactorContext ctx = make_factor_context(g, m, f);
    int even_idx = -1;
    for (size_t i = 0; i < f.cycles.size(); ++i)
        if (!f.cycles[i].odd()) even_idx = static_cast<int>(i);
    const Cycle& c3 = f.cycles[even_idx];

    // induced subgraph on the even cycle: its cycle edges plus matching chords
    std::vector<std::pair<int, int>> chords; // positions on c3
    for (int v : c3.vertices) {
        EdgeId e = ctx.m_edge_at[v];
        int w = g.other_end(e, v);
        if (ctx.cycle_of[w] == even_idx && v < w)
            chords.emplace_back(ctx.pos_on_cycle[v], ctx.pos_on_cycle[w]);
    }
    int L = c3.length();
    auto bipartite_without = [&](int skip_kind, int skip_idx) {
        // 2-colour via BFS over cycle edges + chords, minus one edge
        std::vector<int> col(L, -1);
        for (int s = 0; s < L; ++s) {
            if (col[s] != -1) continue;
            col[s] = 0;
            std::deque<int> q{s};
            while (!q.empty()) {
                int v = q.front();
                q.pop_front();
                auto visit = [&](int w) {
                    if (col[w] == -1) {
                        col[w] = col[v] ^ 1;
                        q.push_back(w);
                        return true;
                    }
                    return col[w] != col[v];
                };
                for (int dir : {-1, 1}) {
                    int w = (v + dir + L) % L;
                    int edge_idx = dir == 1 ? v : w;
                    if (skip_kind == 0 && edge_idx == skip_idx) continue;
                    if (!visit(w)) return false;
                }
                for (size_t ci = 0; ci < chords.size(); ++ci) {
                    if (skip_kind == 1 && static_cast<int>(ci) == skip_idx) continue;
                    auto [a, b] = chords[ci];
                    if (a == v && !visit(b)) return false;
                    if (b == v && !visit(a)) return false;
                }
            }
        }
        return true;
    };
    bool near_bipartite = false;
    for (int i = 0; i < L && !near_bipartite; ++i) near_bipartite = bipartite_without(0, i);
    for (size_t i = 0; i < chords.size() && !near_bipartite; ++i)
        near_bipartite = bipartite_without(1, static_cast<int>(i));
    if (!near_bipartite) return std::nullopt;

    int o1 = f.odd_cycle_ids[0], o2 = f.odd_cycle_ids[1];
    std::vector<int> n1, n2; // positions on c3 attached to each odd cycle
    for (int v : c3.vertices) {
        int w = g.other_end(ctx.m_edge_at[v], v);
        if (ctx.cycle_of[w] == o1) n1.push_back(ctx.pos_on_cycle[v]);
        if (ctx.cycle_of[w] == o2) n2.push_back(ctx.pos_on_cycle[v]);
    }
    for (int a : n1)
        for (int b : n2)
            if ((a - b) % 2 != 0) {
                std::vector<EdgeId> picks{ctx.m_edge_at[c3.vertices[a]],
                                          ctx.m_edge_at[c3.vertices[b]]};
                std::sort(picks.begin(), picks.end());
                return certificate_from_picks(g, m, picks, "oddness2-near-bipartite",
                                              json{{"attachments", {a, b}}}, limits);
            }
    return std::nullopt;
}

std::optional<FRCertificate> strategy_oddness4_paired(const CubicGraph& g,
                                                      const PerfectMatching& m, const TwoFactor& f,
                                                      const Limits* limits) {
    if (f.odd_count() != 4)
        throw Error(ErrorCode::WrongOddness, "strategy needs exactly four odd cycles");
    FactorContext ctx = make_factor_context(g, m, f);
    const auto& o = f.odd_cycle_ids;
    auto direct_edge = [&](int a, int b) -> EdgeId {
        for (EdgeId e : m.edges) {
            auto [u, v] = g.endpoints(e);
            int cu = ctx.cycle_of[u], cv = ctx.cycle_of[v];
            if ((cu == a && cv == b) || (cv == a && cu == b)) return e;
        }
        return -1;
    };
    const int pairings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& p : pairings) {
        EdgeId e1 = direct_edge(o[p[0]], o[p[1]]);
        EdgeId e2 = direct_edge(o[p[2]], o[p[3]]);
        if (e1 == -1 || e2 == -1) continue;
        std::vector<EdgeId> picks{e1, e2};
        std::sort(picks.begin(), picks.end());
        return certificate_from_picks(g, m, picks, "oddness4-paired",
                                      json{{"pairing", {o[p[0]], o[p[1]], o[p[2]], o[p[3]]}}},
                                      limits);
    }
    return std::nullopt;
}

std::optional<FRCertificate> strategy_four_chordless(const CubicGraph& g, const PerfectMatching& m,
                                                     const TwoFactor& f, const Limits* limits) {
    if (f.cycles.size() != 4 || f.odd_count() != 4)
        throw Error(ErrorCode::WrongShape, "strategy needs exactly four odd cycles and nothing else");
    FactorContext ctx = make_factor_context(g, m, f);
    for (size_t ci = 0; ci < f.cycles.size(); ++ci)
        for (int v : f.cycles[ci].vertices)
            if (ctx.cycle_of[g.other_end(ctx.m_edge_at[v], v)] == static_cast<int>(ci))
                throw Error(ErrorCode::WrongShape, "strategy needs chordless cycles");

    for (int center = 0; center < 4; ++center) {
        const Cycle& z = f.cycles[center];
        if (z.length() < 7) continue;
        std::array<int, 3> leaves{};
        int k = 0;
        for (int ci = 0; ci < 4; ++ci)
            if (ci != center) leaves[k++] = ci;
        ColouredCycle colouring;
        for (int v : z.vertices) {
            int leaf = ctx.cycle_of[g.other_end(ctx.m_edge_at[v], v)];
            int slot = static_cast<int>(std::find(leaves.begin(), leaves.end(), leaf) -
                                        leaves.begin());
            colouring.colour.push_back(slot + 1);
        }
        if (!is_good_odd_cycle(colouring)) continue;
        auto [t1, t2] = find_disjoint_balanced_triples(colouring);
        std::vector<EdgeId> a_set, b_set;
        for (int pos : t1) a_set.push_back(ctx.m_edge_at[z.vertices[pos]]);
        for (int pos : t2) b_set.push_back(ctx.m_edge_at[z.vertices[pos]]);
        auto wa = is_balanced(g, m, a_set, limits);
        auto wb = is_balanced(g, m, b_set, limits);
        if (!wa || !wb)
            throw Error(ErrorCode::LemmaViolation, "rainbow triple picks lost their witness");
        std::sort(a_set.begin(), a_set.end());
        std::sort(b_set.begin(), b_set.end());
        auto cert = from_balanced_pair(g, m, BalancedMatching{m, a_set, *wa},
                                       BalancedMatching{m, b_set, *wb});
        cert.strategy = "four-chordless-cycles";
        cert.trail["center"] = center;
        return cert;
    }
    return std::nullopt;
}

std::optional<FRCertificate> strategy_rings_stars(const CubicGraph& g, const PerfectMatching& m,
                                                  const TwoFactor& f,
                                                  std::uint64_t partition_budget,
                                                  const Limits* limits) {
    if (f.odd_count() == 0) return std::nullopt; // nothing to balance
    auto part = find_partition(g, m, f, partition_budget);
    if (!part) return std::nullopt;
    auto [a, b] = balanced_pair_from_partition(g, m, f, *part, limits);
    auto cert = from_balanced_pair(g, m, a, b);
    cert.strategy = "rings-and-stars";
    cert.trail["rings"] = part->rings.size();
    cert.trail["stars"] = part->stars.size();
    return cert;
}

namespace {

/// Component split of a (possibly disconnected) cubic graph, with edge maps
/// back to the parent.
struct Component {
    CubicGraph graph;
    std::vector<EdgeId> edge_to_parent; // component edge id -> parent edge id
};

std::vector<Component> split_components(const CubicGraph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::deque<int> q{s};
        comp[s] = ncomp;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (EdgeId e : g.incident(v)) {
                int w = g.other_end(e, v);
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    q.push_back(w);
                }
            }
        }
        ++ncomp;
    }
    std::vector<Component> out;
    for (int c = 0; c < ncomp; ++c) {
        std::vector<int> relabel(n, -1);
        int k = 0;
        for (int v = 0; v < n; ++v)
            if (comp[v] == c) relabel[v] = k++;
        std::vector<std::pair<int, int>> edges;
        std::vector<EdgeId> backmap;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            if (comp[u] != c) continue;
            edges.emplace_back(relabel[u], relabel[v]);
            backmap.push_back(e);
        }
        // the component graph re-sorts identical pairs; ids line up because
        // parent edges are already lexicographic in the relabelled order?
        // not necessarily -- rebuild the map positionally
        std::vector<size_t> idx(edges.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            auto na = edges[a], nb = edges[b];
            if (na.first > na.second) std::swap(na.first, na.second);
            if (nb.first > nb.second) std::swap(nb.first, nb.second);
            return na < nb;
        });
        std::vector<std::pair<int, int>> sorted_edges;
        std::vector<EdgeId> sorted_back;
        for (size_t i : idx) {
            sorted_edges.push_back(edges[i]);
            sorted_back.push_back(backmap[i]);
        }
        out.push_back(Component{CubicGraph(k, sorted_edges), std::move(sorted_back)});
    }
    return out;
}

Limits limits_from_config(const SolveConfig& config) {
    Limits l;
    if (config.timeout_ms) l = Limits::with_timeout_ms(*config.timeout_ms);
    l.enumeration_cap = config.enumeration_cap;
    return l;
}

std::optional<FRCertificate> try_reduction(const CubicGraph& g, const SolveConfig& config,
                                           PatternKind kind, const Limits& limits);

FRCertificate colour_certificate(const CubicGraph& g, const std::vector<int>& colouring) {
    std::array<std::vector<EdgeId>, 3> classes;
    for (EdgeId e = 0; e < g.edge_count(); ++e) classes[colouring[e]].push_back(e);
    FRCertificate cert{PerfectMatching{classes[0], g.id()}, PerfectMatching{classes[1], g.id()},
                       PerfectMatching{classes[2], g.id()}, "3-edge-colouring", json::object()};
    if (!verify_certificate(g, cert))
        throw Error(ErrorCode::LemmaViolation, "colour classes failed to verify");
    return cert;
}

void persist_exhausted(const CubicGraph& g, const SolveConfig& config, std::uint64_t pm_count) {
    json report;
    report["graph"] = encode_sparse6(g.raw());
    report["n"] = g.vertex_count();
    report["perfect_matchings"] = pm_count;
    report["note"] = "no three perfect matchings with empty intersection";
    std::string path = config.exhausted_report_dir + "/fr-counterexample-" +
                       std::to_string(g.id()) + ".json";
    std::ofstream out(path);
    out << report.dump(2) << "\n";
}

FRCertificate solve_impl(const CubicGraph& g, const SolveConfig& config) {
    if (!is_connected(g))
        throw Error(ErrorCode::PreconditionFailed, "input graph is disconnected");
    auto bridges = find_bridges(g);
    if (!bridges.empty()) {
        auto [u, v] = g.endpoints(bridges[0]);
        throw Error(ErrorCode::PreconditionFailed,
                    "input graph has a bridge: " + std::to_string(u) + "-" + std::to_string(v));
    }
    Limits limits = limits_from_config(config);

    if (config.mode == SolveConfig::Mode::Reduction) {
        if (auto cert = try_reduction(g, config, PatternKind::G8, limits)) return *cert;
        if (auto cert = try_reduction(g, config, PatternKind::PetersenMinusVertex, limits))
            return *cert;
    }

    if (config.mode != SolveConfig::Mode::Brute) {
        if (auto colouring = chromatic_index_is_3(g, &limits)) return colour_certificate(g, *colouring);

        std::uint64_t max_pms = config.max_pms ? config.max_pms : config.enumeration_cap;
        Limits enum_limits = limits;
        enum_limits.enumeration_cap = config.enumeration_cap + 1; // soft-capped via max_pms
        auto pms = enumerate_perfect_matchings(g, max_pms, &enum_limits);
        for (size_t mi = 0; mi < pms.size(); ++mi) {
            limits.check_deadline();
            const auto& m = pms[mi];
            auto f = two_factor(g, m);
            auto attach_index = [&](std::optional<FRCertificate> cert) {
                if (cert) cert->trail["matching_index"] = mi;
                return cert;
            };
            if (f.odd_count() == 2) {
                if (auto cert = attach_index(strategy_oddness2_close(g, m, f, &limits))) return *cert;
                if (f.cycles.size() == 3)
                    if (auto cert = attach_index(strategy_oddness2_near_bipartite(g, m, f, &limits)))
                        return *cert;
            }
            if (f.odd_count() == 4) {
                if (auto cert = attach_index(strategy_oddness4_paired(g, m, f, &limits))) return *cert;
                bool chordless_four = f.cycles.size() == 4;
                if (chordless_four) {
                    FactorContext ctx = make_factor_context(g, m, f);
                    for (size_t ci = 0; ci < f.cycles.size() && chordless_four; ++ci)
                        for (int v : f.cycles[ci].vertices)
                            if (ctx.cycle_of[g.other_end(ctx.m_edge_at[v], v)] ==
                                static_cast<int>(ci))
                                chordless_four = false;
                }
                if (chordless_four)
                    if (auto cert = attach_index(strategy_four_chordless(g, m, f, &limits)))
                        return *cert;
            }
            try {
                if (auto cert = attach_index(
                        strategy_rings_stars(g, m, f, config.partition_budget, &limits)))
                    return *cert;
            } catch (const Error& err) {
                if (err.code() != ErrorCode::BudgetExceeded) throw;
            }
        }
        if (config.mode == SolveConfig::Mode::Balanced)
            throw Error(ErrorCode::BudgetExceeded,
                        "balanced strategies found no certificate for this graph");

        if (config.mode == SolveConfig::Mode::Auto) {
            if (auto cert = try_reduction(g, config, PatternKind::G8, limits)) return *cert;
            if (auto cert = try_reduction(g, config, PatternKind::PetersenMinusVertex, limits))
                return *cert;
        }
    }

    auto brute = solve_bruteforce(g, &limits);
    if (brute) return *brute;

    std::uint64_t pm_count = enumerate_perfect_matchings(g, &limits).size();
    persist_exhausted(g, config, pm_count);
    throw Error(ErrorCode::Exhausted,
                "no non-intersecting triple exists; counterexample report persisted");
}

std::optional<FRCertificate> try_reduction(const CubicGraph& g, const SolveConfig& config,
                                           PatternKind kind, const Limits& limits) {
    if (config.depth > 8) return std::nullopt;
    std::optional<Embedding> emb =
        kind == PatternKind::G8 ? find_g8(g) : find_petersen_minus_vertex(g);
    if (!emb) return std::nullopt;
    std::optional<ReductionResult> red_opt;
    try {
        red_opt = kind == PatternKind::G8 ? reduce_g8(g, *emb) : reduce_pmv(g, *emb);
    } catch (const Error&) {
        return std::nullopt;
    }
    const ReductionResult& red = *red_opt;

    auto comps = split_components(red.reduced);
    std::array<std::vector<EdgeId>, 3> merged;
    for (const auto& comp : comps) {
        if (comp.graph.vertex_count() < 2) return std::nullopt;
        if (!is_bridgeless(comp.graph)) return std::nullopt;
        SolveConfig sub = config;
        sub.mode = SolveConfig::Mode::Auto;
        sub.depth = config.depth + 1;
        FRCertificate sub_cert;
        try {
            sub_cert = solve_impl(comp.graph, sub);
        } catch (const Error& err) {
            if (err.code() == ErrorCode::Timeout) throw;
            return std::nullopt;
        }
        for (int i = 0; i < 3; ++i) {
            const auto& pm = i == 0 ? sub_cert.m1 : i == 1 ? sub_cert.m2 : sub_cert.m3;
            for (EdgeId e : pm.edges) merged[i].push_back(comp.edge_to_parent[e]);
        }
    }
    std::array<PerfectMatching, 3> ps;
    for (int i = 0; i < 3; ++i) {
        std::sort(merged[i].begin(), merged[i].end());
        ps[i] = PerfectMatching{merged[i], red.reduced.id()};
    }
    auto lifted = kind == PatternKind::G8 ? lift_g8(g, red, ps[0], ps[1], ps[2])
                                          : lift_pmv(g, red, ps[0], ps[1], ps[2]);
    FRCertificate cert{lifted[0], lifted[1], lifted[2],
                       kind == PatternKind::G8 ? "g8-reduction" : "petersen-minus-vertex-reduction",
                       json::object()};
    cert.trail["image"] = red.emb.image;
    cert.trail["boundary"] = red.emb.boundary;
    cert.trail["reduced_graph"] = encode_sparse6(red.reduced.raw());
    // edge ids are canonical for the sparse6 above, and unambiguous under
    // parallel edges
    for (int i = 0; i < 3; ++i) cert.trail["reduced_matchings"].push_back(ps[i].edges);
    if (!verify_certificate(g, cert))
        throw Error(ErrorCode::LemmaViolation, "lifted triple failed verification");
    (void)limits;
    return cert;
}

} // namespace

FRCertificate solve(const CubicGraph& g, const SolveConfig& config) { return solve_impl(g, config); }

std::optional<FRCertificate> solve_bruteforce(const CubicGraph& g, const Limits* limits) {
    auto pms = enumerate_perfect_matchings(g, limits);
    size_t n = pms.size();
    int words = (g.edge_count() + 63) / 64;
    std::vector<std::uint64_t> bits(n * words, 0);
    for (size_t i = 0; i < n; ++i)
        for (EdgeId e : pms[i].edges) bits[i * words + e / 64] |= 1ull << (e % 64);

    for (size_t i = 0; i < n; ++i) {
        if (limits) limits->check_deadline();
        for (size_t j = i + 1; j < n; ++j) {
            bool pair_empty = true;
            for (int w = 0; w < words; ++w)
                if (bits[i * words + w] & bits[j * words + w]) pair_empty = false;
            for (size_t k = j + 1; k < n; ++k) {
                if (!pair_empty) {
                    bool empty = true;
                    for (int w = 0; w < words && empty; ++w)
                        if (bits[i * words + w] & bits[j * words + w] & bits[k * words + w])
                            empty = false;
                    if (!empty) continue;
                }
                FRCertificate cert{pms[i], pms[j], pms[k], "brute-force",
                                   json{{"indices", {i, j, k}}}};
                return cert;
            }
        }
    }
    return std::nullopt;
}

json certificate_to_json(const CubicGraph& g, const FRCertificate& cert) {
    json j;
    j["graph"] = encode_sparse6(g.raw());
    j["n"] = g.vertex_count();
    j["matchings"] = json::array();
    j["matching_edge_ids"] = json::array(); // canonical ids; exact under parallel edges
    for (const auto* m : {&cert.m1, &cert.m2, &cert.m3}) {
        j["matchings"].push_back(edge_list_json(g, m->edges));
        j["matching_edge_ids"].push_back(m->edges);
    }
    j["strategy"] = cert.strategy;
    j["verified"] = true;
    j["trail"] = cert.trail;
    return j;
}

std::pair<CubicGraph, FRCertificate> certificate_from_json(const json& j) {
    CubicGraph g = parse_graph6(j.at("graph").get<std::string>());
    FRCertificate cert;
    cert.strategy = j.at("strategy").get<std::string>();
    cert.trail = j.value("trail", json::object());
    std::array<PerfectMatching*, 3> ms{&cert.m1, &cert.m2, &cert.m3};
    for (int i = 0; i < 3; ++i) {
        std::vector<EdgeId> edges;
        if (j.contains("matching_edge_ids")) {
            edges = j.at("matching_edge_ids").at(i).get<std::vector<EdgeId>>();
        } else {
            std::vector<char> used(g.edge_count(), 0);
            for (const auto& pair : j.at("matchings").at(i)) {
                int u = pair.at(0).get<int>(), v = pair.at(1).get<int>();
                EdgeId pick = -1;
                for (EdgeId e : g.edges_between(u, v))
                    if (!used[e]) {
                        pick = e;
                        break;
                    }
                if (pick == -1)
                    throw Error(ErrorCode::MalformedEncoding, "certificate names a missing edge");
                used[pick] = 1;
                edges.push_back(pick);
            }
        }
        std::sort(edges.begin(), edges.end());
        *ms[i] = PerfectMatching{edges, g.id()};
    }
    return {std::move(g), std::move(cert)};
}

} // namespace fr
