#include "fr/matching.hpp"

#include <algorithm>

namespace fr {

bool PerfectMatching::contains(EdgeId e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
}

bool is_perfect_matching(const CubicGraph& g, const PerfectMatching& m) {
    if (static_cast<int>(m.edges.size()) != g.vertex_count() / 2) return false;
    std::vector<char> cov(g.vertex_count(), 0);
    for (EdgeId e : m.edges) {
        if (e < 0 || e >= g.edge_count()) return false;
        auto [u, v] = g.endpoints(e);
        if (cov[u] || cov[v]) return false;
        cov[u] = cov[v] = 1;
    }
    return true;
}

namespace {

struct Enumerator {
    const CubicGraph& g;
    const Limits* limits;
    std::vector<char> covered;
    std::vector<char> banned;   // per edge
    std::vector<EdgeId> current;
    std::uint64_t found = 0, max_count, nodes = 0;
    const std::function<bool(const std::vector<EdgeId>&)>& sink; // false = stop

    Enumerator(const CubicGraph& g_, const Limits* lim, std::uint64_t maxc,
               const std::function<bool(const std::vector<EdgeId>&)>& s)
        : g(g_), limits(lim), covered(g_.vertex_count(), 0), banned(g_.edge_count(), 0),
          max_count(maxc), sink(s) {}

    bool rec() {
        if (limits && (++nodes & 2047) == 0) limits->check_deadline();
        int v = -1;
        for (int i = 0; i < g.vertex_count(); ++i)
            if (!covered[i]) {
                v = i;
                break;
            }
        if (v == -1) {
            ++found;
            if (!sink(current)) return false;
            if (limits && found >= limits->enumeration_cap)
                throw Error(ErrorCode::EnumerationCapExceeded,
                            "more than " + std::to_string(limits->enumeration_cap) +
                                " perfect matchings");
            return !(max_count && found >= max_count);
        }
        for (EdgeId e : g.incident(v)) {
            if (banned[e]) continue;
            int w = g.other_end(e, v);
            if (covered[w]) continue;
            covered[v] = covered[w] = 1;
            current.push_back(e);
            bool go = rec();
            current.pop_back();
            covered[v] = covered[w] = 0;
            if (!go) return false;
        }
        return true;
    }
};

PerfectMatching make_pm(const CubicGraph& g, std::vector<EdgeId> edges) {
    std::sort(edges.begin(), edges.end());
    return PerfectMatching{std::move(edges), g.id()};
}

} // namespace

std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g,
                                                         std::uint64_t max_count,
                                                         const Limits* limits) {
    std::vector<PerfectMatching> out;
    std::function<bool(const std::vector<EdgeId>&)> sink = [&](const std::vector<EdgeId>& m) {
        out.push_back(make_pm(g, m));
        return true;
    };
    Enumerator en(g, limits, max_count, sink);
    en.rec();
    return out;
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g, const Limits* limits) {
    return enumerate_perfect_matchings(g, 0, limits);
}

std::optional<PerfectMatching> constrained_pm(const CubicGraph& g,
                                              const std::vector<EdgeId>& forced_in,
                                              const std::vector<EdgeId>& forced_out,
                                              const Limits* limits) {
    for (EdgeId e : forced_in)
        for (EdgeId f : forced_out)
            if (e == f)
                throw Error(ErrorCode::ConflictingConstraints, "edge forced both in and out");
    std::vector<char> cov(g.vertex_count(), 0);
    for (EdgeId e : forced_in) {
        auto [u, v] = g.endpoints(e);
        if (cov[u] || cov[v])
            throw Error(ErrorCode::ConflictingConstraints, "forced_in is not a matching");
        cov[u] = cov[v] = 1;
    }

    std::optional<PerfectMatching> result;
    std::function<bool(const std::vector<EdgeId>&)> sink = [&](const std::vector<EdgeId>& m) {
        std::vector<EdgeId> all = m;
        all.insert(all.end(), forced_in.begin(), forced_in.end());
        result = make_pm(g, std::move(all));
        return false; // first hit wins
    };
    Enumerator en(g, limits, 0, sink);
    en.covered = cov;
    for (EdgeId e : forced_out) en.banned[e] = 1;
    // edges touching a forced vertex can never be used again
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        bool in = std::find(forced_in.begin(), forced_in.end(), e) != forced_in.end();
        if (!in && (cov[u] || cov[v])) en.banned[e] = 1;
    }
    en.rec();
    return result;
}

TwoFactor two_factor(const CubicGraph& g, const PerfectMatching& m) {
    if (m.graph_id != g.id() || !is_perfect_matching(g, m))
        throw Error(ErrorCode::NotAPerfectMatching, "two_factor needs a perfect matching of g");
    std::vector<char> in_m(g.edge_count(), 0);
    for (EdgeId e : m.edges) in_m[e] = 1;

    TwoFactor f;
    std::vector<char> used_edge(g.edge_count(), 0);
    std::vector<char> visited(g.vertex_count(), 0);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (visited[start]) continue;
        Cycle cyc;
        int v = start;
        while (true) {
            visited[v] = 1;
            cyc.vertices.push_back(v);
            EdgeId next = -1;
            for (EdgeId e : g.incident(v))
                if (!in_m[e] && !used_edge[e]) {
                    next = e;
                    break;
                }
            if (next == -1) break;
            used_edge[next] = 1;
            cyc.edge_ids.push_back(next);
            v = g.other_end(next, v);
            if (v == start) break;
        }
        if (cyc.odd()) f.odd_cycle_ids.push_back(static_cast<int>(f.cycles.size()));
        f.cycles.push_back(std::move(cyc));
    }
    return f;
}

OddnessResult oddness(const CubicGraph& g, const Limits* limits) {
    if (auto colouring = chromatic_index_is_3(g, limits)) {
        // complement of one colour class is all even cycles
        std::vector<EdgeId> cls;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if ((*colouring)[e] == 0) cls.push_back(e);
        PerfectMatching m{cls, g.id()};
        return OddnessResult{0, m, two_factor(g, m)};
    }
    auto pms = enumerate_perfect_matchings(g, limits);
    if (pms.empty()) throw Error(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
    OddnessResult best;
    best.oddness = g.vertex_count() + 1;
    for (const auto& m : pms) {
        auto f = two_factor(g, m);
        if (f.odd_count() < best.oddness) {
            best = OddnessResult{f.odd_count(), m, std::move(f)};
            if (best.oddness == 2) break; // class 4: cannot go lower
        }
    }
    return best;
}

PerfectMatching pm_avoiding(const CubicGraph& g, const std::vector<EdgeId>& avoid,
                            const Limits* limits) {
    if (avoid.size() > 2)
        throw Error(ErrorCode::PreconditionFailed, "pm_avoiding takes at most two edges");
    auto m = constrained_pm(g, {}, avoid, limits);
    if (!m)
        throw Error(ErrorCode::LemmaViolation,
                    "no perfect matching avoids the given edges; input not bridgeless cubic?");
    return *m;
}

bool three_cut_obstruction(const CubicGraph& g, const std::vector<EdgeId>& cut,
                           const Limits* limits) {
    if (cut.size() != 3) throw Error(ErrorCode::NotACut, "cut must have exactly 3 edges");
    // removal must disconnect
    {
        std::vector<char> banned(g.edge_count(), 0);
        for (EdgeId e : cut) banned[e] = 1;
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(v)) {
                if (banned[e]) continue;
                int w = g.other_end(e, v);
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack.push_back(w);
                }
            }
        }
        if (cnt == g.vertex_count())
            throw Error(ErrorCode::NotACut, "removing the three edges keeps the graph connected");
    }
    return !constrained_pm(g, {}, cut, limits).has_value();
}

} // namespace fr
