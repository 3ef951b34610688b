#include "fr/suites.hpp"

#include <algorithm>

#include "fr/balanced.hpp"
#include "fr/generate.hpp"
#include "fr/matching.hpp"

namespace fr {

namespace {

void note_failure(SuiteResult& r, const std::string& what) {
    if (r.failures.size() < 50) r.failures.push_back(what);
}

bool disjoint3(const BalancedTriple& a, const BalancedTriple& b) {
    for (int p : a)
        for (int q : b)
            if (p == q) return false;
    return true;
}

bool rainbow(const ColouredCycle& c, const BalancedTriple& t) {
    std::array<int, 3> seen{0, 0, 0};
    for (int p : t) seen[c.colour[p] - 1]++;
    return seen == std::array<int, 3>{1, 1, 1};
}

/// Independent existence oracle: any two disjoint rainbow balanced triples.
bool oracle_triples_exist(const ColouredCycle& c) {
    int L = c.length();
    std::vector<BalancedTriple> ts;
    for (int a = 0; a < L; ++a)
        for (int b = a + 1; b < L; ++b)
            for (int d = b + 1; d < L; ++d) {
                BalancedTriple t{a, b, d};
                if (is_balanced_triple(L, t) && rainbow(c, t)) ts.push_back(t);
            }
    for (size_t i = 0; i < ts.size(); ++i)
        for (size_t j = i + 1; j < ts.size(); ++j)
            if (disjoint3(ts[i], ts[j])) return true;
    return false;
}

bool oracle_pairs_exist(const ColouredCycle& c, int colour_i) {
    int L = c.length();
    std::vector<BalancedPair> ps;
    for (int a = 0; a < L; ++a)
        for (int b = a + 1; b < L; ++b) {
            BalancedPair p{a, b};
            int hits = (c.colour[a] == colour_i) + (c.colour[b] == colour_i);
            if (hits == 1 && is_balanced_pair(L, p)) ps.push_back(p);
        }
    for (size_t i = 0; i < ps.size(); ++i)
        for (size_t j = i + 1; j < ps.size(); ++j) {
            const auto& a = ps[i];
            const auto& b = ps[j];
            if (a[0] != b[0] && a[0] != b[1] && a[1] != b[0] && a[1] != b[1]) return true;
        }
    return false;
}

template <typename Fn>
void for_all_colourings(int length, Fn&& fn) {
    std::vector<int> digits(length, 1);
    while (true) {
        fn(ColouredCycle{digits});
        int i = length - 1;
        while (i >= 0 && digits[i] == 3) digits[i--] = 1;
        if (i < 0) break;
        digits[i]++;
    }
}

} // namespace

SuiteResult suite_triples(const SuiteOptions& opt) {
    SuiteResult r{"triples", 0, {}};
    // negative-control hook: corrupt one table answer in a local copy
    std::string mutant_key;
    std::pair<BalancedTriple, BalancedTriple> mutant_value;
    if (opt.inject_mutant) {
        const auto& table = triple_table(7);
        auto it = table.begin();
        mutant_key = it->first;
        mutant_value = {BalancedTriple{0, 1, 2}, it->second.second};
    }
    for (int L = 7; L <= opt.max_triple_len; L += 2) {
        for_all_colourings(L, [&](const ColouredCycle& c) {
            if (!is_good_odd_cycle(c)) return;
            ++r.cases;
            std::pair<BalancedTriple, BalancedTriple> got;
            try {
                got = find_disjoint_balanced_triples(c);
            } catch (const Error& e) {
                note_failure(r, "construction failed on " + colour_string(c) + ": " + e.what());
                return;
            }
            if (opt.inject_mutant && colour_string(canonicalize_colours(c)) == mutant_key)
                got = mutant_value;
            bool ok = disjoint3(got.first, got.second) && rainbow(c, got.first) &&
                      rainbow(c, got.second) && is_balanced_triple(L, got.first) &&
                      is_balanced_triple(L, got.second);
            if (!ok) {
                note_failure(r, "invalid triples on colouring " + colour_string(c));
                return;
            }
            if (!oracle_triples_exist(c))
                note_failure(r, "oracle disagrees on colouring " + colour_string(c));
        });
    }
    return r;
}

SuiteResult suite_pairs(const SuiteOptions& opt) {
    SuiteResult r{"pairs", 0, {}};
    for (int L = 4; L <= opt.max_pair_len; L += 2) {
        for_all_colourings(L, [&](const ColouredCycle& c) {
            if (!is_good_even_cycle(c)) return;
            auto sizes = c.class_sizes();
            for (int i = 1; i <= 3; ++i) {
                if (sizes[i - 1] < 2) continue;
                ++r.cases;
                std::pair<BalancedPair, BalancedPair> got;
                try {
                    got = find_disjoint_balanced_pairs(c, i);
                } catch (const Error& e) {
                    note_failure(r, "construction failed on " + colour_string(c) + " colour " +
                                        std::to_string(i) + ": " + e.what());
                    continue;
                }
                auto hits = [&](const BalancedPair& p) {
                    return (c.colour[p[0]] == i) + (c.colour[p[1]] == i);
                };
                bool disjoint = got.first[0] != got.second[0] && got.first[0] != got.second[1] &&
                                got.first[1] != got.second[0] && got.first[1] != got.second[1];
                bool ok = disjoint && hits(got.first) == 1 && hits(got.second) == 1 &&
                          is_balanced_pair(L, got.first) && is_balanced_pair(L, got.second);
                if (!ok) {
                    note_failure(r, "invalid pairs on colouring " + colour_string(c) + " colour " +
                                        std::to_string(i));
                    continue;
                }
                if (!oracle_pairs_exist(c, i))
                    note_failure(r, "oracle disagrees on colouring " + colour_string(c));
            }
        });
    }
    return r;
}

SuiteResult suite_pairs_ab(const SuiteOptions& opt) {
    SuiteResult r{"pairs-ab", 0, {}};
    (void)opt;
    for (int L : {8, 10, 12}) {
        int p = L / 2;
        for (int x = 0; x < L; ++x)
            for (int y = x + 1; y < L; ++y) {
                std::vector<int> rest;
                for (int v = 0; v < L; ++v)
                    if (v != x && v != y) rest.push_back(v);
                int k = static_cast<int>(rest.size());
                for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
                    std::vector<int> a, b;
                    for (int idx = 0; idx < k; ++idx)
                        ((mask >> idx) & 1 ? a : b).push_back(rest[idx]);
                    if (static_cast<int>(a.size()) < p - 2 || static_cast<int>(b.size()) < p - 2)
                        continue;
                    ++r.cases;
                    std::pair<BalancedPair, BalancedPair> got;
                    try {
                        got = find_pairs_AB(L, BalancedPair{x, y}, a, b);
                    } catch (const Error& e) {
                        note_failure(r, "construction failed L=" + std::to_string(L) + " x=" +
                                            std::to_string(x) + " y=" + std::to_string(y) + ": " +
                                            e.what());
                        continue;
                    }
                    auto side = [&](int v) {
                        return std::find(a.begin(), a.end(), v) != a.end() ? 0 : 1;
                    };
                    bool disjoint = got.first[0] != got.second[0] &&
                                    got.first[0] != got.second[1] &&
                                    got.first[1] != got.second[0] && got.first[1] != got.second[1];
                    bool ok = disjoint && is_balanced_pair(L, got.first) &&
                              is_balanced_pair(L, got.second) &&
                              side(got.first[0]) + side(got.first[1]) == 1 &&
                              side(got.second[0]) + side(got.second[1]) == 1;
                    if (!ok)
                        note_failure(r, "invalid A/B pairs L=" + std::to_string(L) + " mask=" +
                                            std::to_string(mask));
                }
            }
    }
    return r;
}

SuiteResult suite_avoidance(const SuiteOptions& opt) {
    SuiteResult r{"avoidance", 0, {}};
    for (int n = 4; n <= opt.max_generated_n; n += 2) {
        auto graphs = generate_cubic_bridgeless(n, false, true);
        for (const auto& g : graphs) {
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
                    ++r.cases;
                    try {
                        auto m = pm_avoiding(g, {e, f});
                        if (m.contains(e) || m.contains(f))
                            note_failure(r, "matching touches an avoided edge, n=" +
                                                std::to_string(n));
                    } catch (const Error& err) {
                        note_failure(r, std::string("avoidance failed on ") +
                                            encode_graph_line(g.raw()) + " edges " +
                                            std::to_string(e) + "," + std::to_string(f) + ": " +
                                            err.what());
                    }
                }
        }
    }
    return r;
}

SuiteResult suite_uniform(const std::vector<std::pair<std::string, CubicGraph>>& corpus) {
    SuiteResult r{"uniform", 0, {}};
    for (const auto& [name, g] : corpus) {
        ++r.cases;
        try {
            auto fam = uniform_pm_family(g);
            std::vector<int> per_edge(g.edge_count(), 0);
            for (const auto& [pm, mult] : fam.members)
                for (EdgeId e : pm.edges) per_edge[e] += mult;
            for (EdgeId e = 0; e < g.edge_count(); ++e)
                if (per_edge[e] != fam.p) {
                    note_failure(r, name + ": edge " + std::to_string(e) + " covered " +
                                        std::to_string(per_edge[e]) + " != p=" +
                                        std::to_string(fam.p));
                    break;
                }
        } catch (const Error& e) {
            note_failure(r, name + ": " + e.what());
        }
    }
    return r;
}

SuiteResult suite_three_cut(const std::vector<std::pair<std::string, CubicGraph>>& corpus) {
    SuiteResult r{"three-cut", 0, {}};
    for (const auto& [name, g] : corpus) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            ++r.cases;
            const auto& inc = g.incident(v);
            try {
                if (!three_cut_obstruction(g, {inc[0], inc[1], inc[2]}))
                    note_failure(r, name + ": a matching avoids the star of vertex " +
                                        std::to_string(v));
            } catch (const Error& e) {
                note_failure(r, name + ": " + e.what());
            }
        }
    }
    return r;
}

} // namespace fr
