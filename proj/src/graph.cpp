#include "fr/graph.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <functional>

namespace fr {

const char* to_string(ErrorCode c) {
    switch (c) {
        case ErrorCode::MalformedEncoding: return "MalformedEncoding";
        case ErrorCode::NotCubic: return "NotCubic";
        case ErrorCode::LoopPresent: return "LoopPresent";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::EmptySet: return "EmptySet";
        case ErrorCode::ConflictingConstraints: return "ConflictingConstraints";
        case ErrorCode::NotAPerfectMatching: return "NotAPerfectMatching";
        case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
        case ErrorCode::LemmaViolation: return "LemmaViolation";
        case ErrorCode::EnumerationCapExceeded: return "EnumerationCapExceeded";
        case ErrorCode::NotACut: return "NotACut";
        case ErrorCode::NotASubset: return "NotASubset";
        case ErrorCode::EvenCycle: return "EvenCycle";
        case ErrorCode::OddCycle: return "OddCycle";
        case ErrorCode::NotGoodOddCycle: return "NotGoodOddCycle";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::WitnessSearchFailed: return "WitnessSearchFailed";
        case ErrorCode::NotDisjoint: return "NotDisjoint";
        case ErrorCode::WrongOddness: return "WrongOddness";
        case ErrorCode::WrongShape: return "WrongShape";
        case ErrorCode::InvalidEmbedding: return "InvalidEmbedding";
        case ErrorCode::CaseTableMiss: return "CaseTableMiss";
        case ErrorCode::Timeout: return "Timeout";
        case ErrorCode::Exhausted: return "Exhausted";
    }
    return "UnknownError";
}

void Limits::check_deadline() const {
    if (deadline_ns < 0) return;
    auto now = std::chrono::steady_clock::now().time_since_epoch();
    if (std::chrono::duration_cast<std::chrono::nanoseconds>(now).count() >= deadline_ns)
        throw Error(ErrorCode::Timeout, "wall-clock budget exhausted");
}

Limits Limits::with_timeout_ms(std::int64_t ms) {
    Limits l;
    auto now = std::chrono::steady_clock::now().time_since_epoch();
    l.deadline_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(now).count() + ms * 1'000'000;
    return l;
}

CubicGraph::CubicGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0 || n % 2 != 0)
        throw Error(ErrorCode::NotCubic, "vertex count must be even and non-negative");
    for (auto& [u, v] : edges) {
        if (u == v) throw Error(ErrorCode::LoopPresent, "loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorCode::MalformedEncoding, "edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
    if (static_cast<int>(edges_.size()) * 2 != 3 * n)
        throw Error(ErrorCode::NotCubic, "edge count is not 3n/2");

    incidence_.assign(n, {-1, -1, -1});
    std::vector<int> deg(n, 0);
    for (EdgeId e = 0; e < static_cast<int>(edges_.size()); ++e) {
        for (int v : {edges_[e].first, edges_[e].second}) {
            if (deg[v] == 3)
                throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has degree > 3");
            incidence_[v][deg[v]++] = e;
        }
    }
    for (int v = 0; v < n; ++v)
        if (deg[v] != 3)
            throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " has degree " +
                                                 std::to_string(deg[v]));

    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    mix(static_cast<std::uint64_t>(n));
    for (auto& [u, v] : edges_) {
        mix(static_cast<std::uint64_t>(u));
        mix(static_cast<std::uint64_t>(v));
    }
    id_ = h;
}

std::vector<EdgeId> CubicGraph::edges_between(int u, int v) const {
    std::vector<EdgeId> out;
    for (EdgeId e : incidence_[u])
        if (other_end(e, u) == v) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

bool CubicGraph::adjacent(int u, int v) const {
    for (EdgeId e : incidence_[u])
        if (other_end(e, u) == v) return true;
    return false;
}

bool is_connected(const CubicGraph& g) {
    int n = g.vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (EdgeId e : g.incident(v)) {
            int w = g.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push_back(w);
            }
        }
    }
    return cnt == n;
}

std::vector<EdgeId> find_bridges(const CubicGraph& g) {
    if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "bridge search needs a connected graph");
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeId> bridges;
    int timer = 0;
    // iterative lowpoint DFS keyed by edge id, so parallel edges are handled
    struct Frame {
        int v;
        EdgeId via;
        int next;
    };
    std::vector<Frame> stack;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        stack.push_back({root, -1, 0});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < 3) {
                EdgeId e = g.incident(f.v)[f.next++];
                if (e == f.via) continue;
                int w = g.other_end(e, f.v);
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back({w, e, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (!stack.empty()) {
                    Frame& parent = stack.back();
                    low[parent.v] = std::min(low[parent.v], low[done.v]);
                    if (low[done.v] > disc[parent.v]) bridges.push_back(done.via);
                }
            }
        }
    }
    std::sort(bridges.begin(), bridges.end());
    return bridges;
}

bool is_bridgeless(const CubicGraph& g) { return find_bridges(g).empty(); }

int girth(const CubicGraph& g) {
    // shortest cycle through each edge: remove the edge, BFS between its ends
    int n = g.vertex_count();
    int best = n + 1;
    std::vector<int> dist(n);
    for (EdgeId banned = 0; banned < g.edge_count(); ++banned) {
        auto [s, t] = g.endpoints(banned);
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> q{s};
        dist[s] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            if (v == t) break;
            if (dist[v] + 1 >= best) continue;
            for (EdgeId e : g.incident(v)) {
                if (e == banned) continue;
                int w = g.other_end(e, v);
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
            }
        }
        if (dist[t] != -1) best = std::min(best, dist[t] + 1);
    }
    return best;
}

int set_distance(const CubicGraph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
    if (xs.empty() || ys.empty()) throw Error(ErrorCode::EmptySet, "set_distance needs non-empty sets");
    int n = g.vertex_count();
    std::vector<char> target(n, 0);
    for (int y : ys) target[y] = 1;
    std::vector<int> dist(n, -1);
    std::deque<int> q;
    for (int x : xs) {
        if (dist[x] == 0) continue;
        dist[x] = 0;
        q.push_back(x);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        if (target[v]) return dist[v];
        for (EdgeId e : g.incident(v)) {
            int w = g.other_end(e, v);
            if (dist[w] == -1) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    throw Error(ErrorCode::Disconnected, "no path between the two sets");
}

namespace {

bool colour_edges(const CubicGraph& g, std::vector<int>& colour, const Limits* limits,
                  std::uint64_t& nodes) {
    // most-constrained-edge-first backtracking
    int m = g.edge_count();
    int pick = -1, best_avail = 4;
    for (EdgeId e = 0; e < m; ++e) {
        if (colour[e] != -1) continue;
        auto [u, v] = g.endpoints(e);
        bool used[3] = {false, false, false};
        for (EdgeId f : g.incident(u))
            if (colour[f] != -1) used[colour[f]] = true;
        for (EdgeId f : g.incident(v))
            if (colour[f] != -1) used[colour[f]] = true;
        int avail = 3 - (used[0] + used[1] + used[2]);
        if (avail == 0) return false;
        if (avail < best_avail) {
            best_avail = avail;
            pick = e;
            if (avail == 1) break;
        }
    }
    if (pick == -1) return true;
    if (limits && (++nodes & 1023) == 0) limits->check_deadline();
    auto [u, v] = g.endpoints(pick);
    bool used[3] = {false, false, false};
    for (EdgeId f : g.incident(u))
        if (colour[f] != -1) used[colour[f]] = true;
    for (EdgeId f : g.incident(v))
        if (colour[f] != -1) used[colour[f]] = true;
    for (int c = 0; c < 3; ++c) {
        if (used[c]) continue;
        colour[pick] = c;
        if (colour_edges(g, colour, limits, nodes)) return true;
        colour[pick] = -1;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> chromatic_index_is_3(const CubicGraph& g, const Limits* limits) {
    std::vector<int> colour(g.edge_count(), -1);
    std::uint64_t nodes = 0;
    if (colour_edges(g, colour, limits, nodes)) return colour;
    return std::nullopt;
}

} // namespace fr
