#include "fr/structures.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fr {

FactorContext make_factor_context(const CubicGraph& g, const PerfectMatching& m,
                                  const TwoFactor& f) {
    FactorContext ctx;
    ctx.cycle_of.assign(g.vertex_count(), -1);
    ctx.pos_on_cycle.assign(g.vertex_count(), -1);
    ctx.m_edge_at.assign(g.vertex_count(), -1);
    for (size_t ci = 0; ci < f.cycles.size(); ++ci)
        for (int pos = 0; pos < f.cycles[ci].length(); ++pos) {
            int v = f.cycles[ci].vertices[pos];
            ctx.cycle_of[v] = static_cast<int>(ci);
            ctx.pos_on_cycle[v] = pos;
        }
    for (EdgeId e : m.edges) {
        auto [u, v] = g.endpoints(e);
        ctx.m_edge_at[u] = e;
        ctx.m_edge_at[v] = e;
    }
    return ctx;
}

namespace {

void fail(const std::string& why) { throw Error(ErrorCode::PreconditionFailed, why); }

bool has_chord(const CubicGraph& g, const FactorContext& ctx, const Cycle& cyc,
               int cycle_index) {
    for (int v : cyc.vertices) {
        EdgeId e = ctx.m_edge_at[v];
        if (ctx.cycle_of[g.other_end(e, v)] == cycle_index) return true;
    }
    return false;
}

/// Matching edges from cycle a to cycle b, ascending ids.
std::vector<EdgeId> m_edges_between_cycles(const CubicGraph& g, const PerfectMatching& m,
                                           const FactorContext& ctx, int a, int b) {
    std::vector<EdgeId> out;
    for (EdgeId e : m.edges) {
        auto [u, v] = g.endpoints(e);
        int cu = ctx.cycle_of[u], cv = ctx.cycle_of[v];
        if ((cu == a && cv == b) || (cu == b && cv == a)) out.push_back(e);
    }
    return out;
}

} // namespace

void validate_partition(const CubicGraph& g, const PerfectMatching& m, const TwoFactor& f,
                        const FactorPartition& part) {
    FactorContext ctx = make_factor_context(g, m, f);
    std::vector<int> used(f.cycles.size(), 0);
    auto claim = [&](int c, const char* what) {
        if (c < 0 || c >= static_cast<int>(f.cycles.size())) fail("cycle index out of range");
        if (used[c]++) fail(std::string("cycle claimed twice by ") + what);
    };

    std::set<EdgeId> junctions_seen;
    for (const auto& ring : part.rings) {
        size_t k = ring.paths.size();
        if (k < 2 || k % 2 != 0) fail("ring needs an even number (>= 2) of odd cycles");
        for (size_t i = 0; i < k; ++i) {
            const GoodPath& p = ring.paths[i];
            if (p.cycles.size() < 2 || p.junctions.size() != p.cycles.size() - 1)
                fail("malformed good path");
            if (p.cycles.back() != ring.paths[(i + 1) % k].cycles.front())
                fail("ring paths do not chain");
            if (!f.cycles[p.cycles.front()].odd() || !f.cycles[p.cycles.back()].odd())
                fail("good path endpoints must be odd cycles");
            claim(p.cycles.front(), "ring");
            for (size_t j = 1; j + 1 < p.cycles.size(); ++j) {
                if (f.cycles[p.cycles[j]].odd()) fail("good path interior must be even cycles");
                claim(p.cycles[j], "ring path");
            }
            for (size_t j = 0; j < p.junctions.size(); ++j) {
                EdgeId e = p.junctions[j];
                if (!m.contains(e)) fail("junction edge not in the perfect matching");
                if (!junctions_seen.insert(e).second) fail("junction edge reused");
                auto [u, v] = g.endpoints(e);
                int cu = ctx.cycle_of[u], cv = ctx.cycle_of[v];
                if (!((cu == p.cycles[j] && cv == p.cycles[j + 1]) ||
                      (cv == p.cycles[j] && cu == p.cycles[j + 1])))
                    fail("junction edge does not join consecutive path cycles");
            }
            // interior parity: the two attachment vertices cut two odd arcs
            for (size_t j = 1; j + 1 < p.cycles.size(); ++j) {
                const Cycle& cyc = f.cycles[p.cycles[j]];
                auto on_cycle = [&](EdgeId e) {
                    auto [u, v] = g.endpoints(e);
                    return ctx.cycle_of[u] == p.cycles[j] ? u : v;
                };
                int a = ctx.pos_on_cycle[on_cycle(p.junctions[j - 1])];
                int b = ctx.pos_on_cycle[on_cycle(p.junctions[j])];
                if ((a - b) % 2 == 0) fail("junction attachments cut even arcs on an interior cycle");
                (void)cyc;
            }
        }
    }

    for (const auto& star : part.stars) {
        const Cycle& center = f.cycles[star.center];
        if (center.length() < 7) fail("star centre shorter than 7");
        if (has_chord(g, ctx, center, star.center)) fail("star centre has a chord");
        claim(star.center, "star centre");
        std::array<int, 3> count{0, 0, 0};
        for (int v : center.vertices) {
            int leaf_cycle = ctx.cycle_of[g.other_end(ctx.m_edge_at[v], v)];
            int slot = -1;
            for (int s = 0; s < 3; ++s)
                if (star.leaves[s] == leaf_cycle) slot = s;
            if (slot == -1) fail("star centre has a neighbour outside the star");
            ++count[slot];
        }
        for (int s = 0; s < 3; ++s) {
            if (count[s] < 2) fail("star leaf joined to the centre by fewer than 2 edges");
            claim(star.leaves[s], "star leaf");
        }
        for (int s = 0; s < 3; ++s)
            for (int t = s + 1; t < 3; ++t)
                if (!m_edges_between_cycles(g, m, ctx, star.leaves[s], star.leaves[t]).empty())
                    fail("star leaves are adjacent");
    }

    for (int c : part.free_even_cycles) {
        if (f.cycles[c].odd()) fail("free cycle is odd");
        claim(c, "free even cycle");
    }
    for (size_t c = 0; c < f.cycles.size(); ++c)
        if (used[c] != 1) fail("partition does not cover every cycle exactly once");
}

std::optional<FactorPartition> rings_of_length_two(const CubicGraph& g, const PerfectMatching& m,
                                                   const TwoFactor& f) {
    FactorContext ctx = make_factor_context(g, m, f);
    std::vector<int> odd = f.odd_cycle_ids;
    std::map<std::pair<int, int>, std::vector<EdgeId>> link;
    for (size_t i = 0; i < odd.size(); ++i)
        for (size_t j = i + 1; j < odd.size(); ++j) {
            auto edges = m_edges_between_cycles(g, m, ctx, odd[i], odd[j]);
            if (edges.size() >= 2) link[{odd[i], odd[j]}] = edges;
        }

    std::vector<std::pair<int, int>> pairing;
    std::set<int> taken;
    std::function<bool()> rec = [&]() {
        int c = -1;
        for (int o : odd)
            if (!taken.count(o)) {
                c = o;
                break;
            }
        if (c == -1) return true;
        for (int o : odd) {
            if (o <= c || taken.count(o)) continue;
            auto it = link.find({c, o});
            if (it == link.end()) continue;
            taken.insert(c);
            taken.insert(o);
            pairing.emplace_back(c, o);
            if (rec()) return true;
            pairing.pop_back();
            taken.erase(c);
            taken.erase(o);
        }
        return false;
    };
    if (!rec()) return std::nullopt;

    FactorPartition part;
    for (auto [a, b] : pairing) {
        const auto& edges = link[{a, b}];
        GoodRing ring;
        ring.paths.push_back(GoodPath{{a, b}, {edges[0]}});
        ring.paths.push_back(GoodPath{{b, a}, {edges[1]}});
        part.rings.push_back(std::move(ring));
    }
    for (size_t c = 0; c < f.cycles.size(); ++c)
        if (!f.cycles[c].odd()) part.free_even_cycles.push_back(static_cast<int>(c));
    validate_partition(g, m, f, part);
    return part;
}

namespace {

struct PartitionSearch {
    const CubicGraph& g;
    const PerfectMatching& m;
    const TwoFactor& f;
    FactorContext ctx;
    std::uint64_t budget, nodes = 0;

    std::vector<char> assigned;      // per cycle
    std::vector<char> junction_used; // per edge
    std::vector<GoodRing> rings;
    std::vector<GoodStar> stars;

    PartitionSearch(const CubicGraph& g_, const PerfectMatching& m_, const TwoFactor& f_,
                    std::uint64_t budget_)
        : g(g_), m(m_), f(f_), ctx(make_factor_context(g_, m_, f_)), budget(budget_),
          assigned(f_.cycles.size(), 0), junction_used(g_.edge_count(), 0) {}

    void tick() {
        if (++nodes > budget)
            throw Error(ErrorCode::BudgetExceeded, "partition search budget exhausted");
    }

    /// The unique star centred at c, if the axioms hold and leaves are odd
    /// and unassigned.
    std::optional<GoodStar> star_at(int c) {
        const Cycle& center = f.cycles[c];
        if (!center.odd() || center.length() < 7) return std::nullopt;
        std::vector<int> leaves;
        for (int v : center.vertices) {
            int other = ctx.cycle_of[g.other_end(ctx.m_edge_at[v], v)];
            if (other == c) return std::nullopt; // chord
            if (std::find(leaves.begin(), leaves.end(), other) == leaves.end())
                leaves.push_back(other);
        }
        if (leaves.size() != 3) return std::nullopt;
        std::sort(leaves.begin(), leaves.end());
        std::array<int, 3> count{0, 0, 0};
        for (int v : center.vertices) {
            int other = ctx.cycle_of[g.other_end(ctx.m_edge_at[v], v)];
            for (int s = 0; s < 3; ++s)
                if (leaves[s] == other) ++count[s];
        }
        for (int s = 0; s < 3; ++s) {
            if (count[s] < 2) return std::nullopt;
            if (assigned[leaves[s]] || !f.cycles[leaves[s]].odd()) return std::nullopt;
        }
        for (int s = 0; s < 3; ++s)
            for (int t = s + 1; t < 3; ++t)
                if (!m_edges_between_cycles(g, m, ctx, leaves[s], leaves[t]).empty())
                    return std::nullopt;
        return GoodStar{c, {leaves[0], leaves[1], leaves[2]}};
    }

    bool try_star(const GoodStar& star) {
        assigned[star.center] = 1;
        for (int l : star.leaves) assigned[l] = 1;
        stars.push_back(star);
        if (search()) return true;
        stars.pop_back();
        assigned[star.center] = 0;
        for (int l : star.leaves) assigned[l] = 0;
        return false;
    }

    /// Enumerate good paths from odd cycle `from`, invoking sink(path, target
    /// odd cycle). Interior even cycles and junction edges are taken from the
    /// shared state and must be free.
    bool paths_from(int from, const std::function<bool(const GoodPath&)>& sink) {
        GoodPath path;
        path.cycles.push_back(from);
        std::function<bool(int, int)> extend = [&](int cur, int entry_vertex) -> bool {
            tick();
            const Cycle& cyc = f.cycles[cur];
            for (int v : cyc.vertices) {
                EdgeId e = ctx.m_edge_at[v];
                if (junction_used[e]) continue;
                int w = g.other_end(e, v);
                if (ctx.cycle_of[w] == cur) continue;
                if (entry_vertex != -1) {
                    // interior even cycle: exit must cut two odd arcs
                    int pa = ctx.pos_on_cycle[entry_vertex], pb = ctx.pos_on_cycle[v];
                    if ((pa - pb) % 2 == 0) continue;
                }
                int next = ctx.cycle_of[w];
                if (std::find(path.cycles.begin(), path.cycles.end(), next) != path.cycles.end())
                    continue;
                path.junctions.push_back(e);
                path.cycles.push_back(next);
                junction_used[e] = 1;
                bool stop = false;
                if (f.cycles[next].odd()) {
                    if (!sink(path)) stop = true;
                } else if (!assigned[next]) {
                    assigned[next] = 1;
                    if (!extend(next, w)) stop = true;
                    assigned[next] = 0;
                }
                junction_used[e] = 0;
                path.cycles.pop_back();
                path.junctions.pop_back();
                if (stop) return false;
            }
            return true;
        };
        return extend(from, -1);
    }

    bool try_ring_from(int c) {
        GoodRing ring;
        std::vector<int> odds{c};
        assigned[c] = 1;
        bool found = ring_extend(ring, odds);
        if (!found) assigned[c] = 0;
        return found;
    }

    // Path-internal state (junction edges, interior even cycles) is already
    // held by the enumeration DFS while the sink runs, so the ring layer only
    // tracks the odd endpoints.
    bool ring_extend(GoodRing& ring, std::vector<int>& odds) {
        tick();
        int last = odds.back();
        bool found = false;
        paths_from(last, [&](const GoodPath& p) -> bool {
            int target = p.cycles.back();
            if (target == odds.front()) {
                if (odds.size() >= 2 && odds.size() % 2 == 0) {
                    ring.paths.push_back(p);
                    rings.push_back(ring);
                    if (search()) found = true;
                    if (!found) rings.pop_back();
                    ring.paths.pop_back();
                }
            } else if (!assigned[target]) {
                ring.paths.push_back(p);
                assigned[target] = 1;
                odds.push_back(target);
                if (ring_extend(ring, odds)) found = true;
                odds.pop_back();
                if (!found) assigned[target] = 0;
                ring.paths.pop_back();
            }
            return !found; // stop path enumeration once a full partition exists
        });
        return found;
    }

    bool search() {
        tick();
        int c = -1;
        for (int o : f.odd_cycle_ids)
            if (!assigned[o]) {
                c = o;
                break;
            }
        if (c == -1) return true;
        if (auto star = star_at(c))
            if (try_star(*star)) return true;
        // c as a leaf of a star centred elsewhere
        for (int c2 : f.odd_cycle_ids) {
            if (c2 == c || assigned[c2]) continue;
            if (auto star = star_at(c2)) {
                bool leaf = std::find(star->leaves.begin(), star->leaves.end(), c) !=
                            star->leaves.end();
                if (leaf && try_star(*star)) return true;
            }
        }
        return try_ring_from(c);
    }
};

} // namespace

std::optional<FactorPartition> find_partition(const CubicGraph& g, const PerfectMatching& m,
                                              const TwoFactor& f, std::uint64_t node_budget) {
    if (auto quick = rings_of_length_two(g, m, f)) return quick;

    PartitionSearch search(g, m, f, node_budget);
    if (!search.search()) return std::nullopt;
    FactorPartition part;
    part.rings = search.rings;
    part.stars = search.stars;
    // derive free evens from the structures themselves; DFS flags unwind
    std::vector<char> used(f.cycles.size(), 0);
    for (const auto& ring : part.rings)
        for (const auto& p : ring.paths)
            for (size_t j = 0; j + 1 < p.cycles.size(); ++j) used[p.cycles[j]] = 1;
    for (const auto& star : part.stars) {
        used[star.center] = 1;
        for (int l : star.leaves) used[l] = 1;
    }
    for (size_t c = 0; c < f.cycles.size(); ++c)
        if (!f.cycles[c].odd() && !used[c]) part.free_even_cycles.push_back(static_cast<int>(c));
    validate_partition(g, m, f, part);
    return part;
}

std::pair<BalancedMatching, BalancedMatching> balanced_pair_from_partition(
    const CubicGraph& g, const PerfectMatching& m, const TwoFactor& f,
    const FactorPartition& part, const Limits* limits) {
    if (part.rings.empty() && part.stars.empty())
        throw Error(ErrorCode::PreconditionFailed,
                    "partition has no rings or stars; nothing to balance");
    validate_partition(g, m, f, part);
    FactorContext ctx = make_factor_context(g, m, f);

    std::vector<EdgeId> a_set, b_set;
    for (const auto& ring : part.rings)
        for (size_t i = 0; i < ring.paths.size(); ++i) {
            auto& dst = (i % 2 == 0) ? a_set : b_set;
            for (EdgeId e : ring.paths[i].junctions) dst.push_back(e);
        }
    for (const auto& star : part.stars) {
        const Cycle& center = f.cycles[star.center];
        ColouredCycle colouring;
        for (int v : center.vertices) {
            int leaf = ctx.cycle_of[g.other_end(ctx.m_edge_at[v], v)];
            int slot = static_cast<int>(std::find(star.leaves.begin(), star.leaves.end(), leaf) -
                                        star.leaves.begin());
            colouring.colour.push_back(slot + 1);
        }
        auto [t1, t2] = find_disjoint_balanced_triples(colouring);
        for (int pos : t1) a_set.push_back(ctx.m_edge_at[center.vertices[pos]]);
        for (int pos : t2) b_set.push_back(ctx.m_edge_at[center.vertices[pos]]);
    }

    std::sort(a_set.begin(), a_set.end());
    std::sort(b_set.begin(), b_set.end());
    for (EdgeId e : a_set)
        if (std::binary_search(b_set.begin(), b_set.end(), e))
            throw Error(ErrorCode::WitnessSearchFailed, "pick sets are not disjoint");

    auto wa = is_balanced(g, m, a_set, limits);
    if (!wa) throw Error(ErrorCode::WitnessSearchFailed, "no witness for the even-index picks");
    auto wb = is_balanced(g, m, b_set, limits);
    if (!wb) throw Error(ErrorCode::WitnessSearchFailed, "no witness for the odd-index picks");
    return {BalancedMatching{m, a_set, *wa}, BalancedMatching{m, b_set, *wb}};
}

} // namespace fr
