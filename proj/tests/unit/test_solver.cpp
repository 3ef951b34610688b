#include <doctest.h>

#include "fr/generate.hpp"
#include "fr/reductions.hpp"
#include "fr/solver.hpp"
#include "support/fixtures.hpp"

using namespace fr;
using namespace fr::tests;

namespace {

TwoFactor factor_of(const Instance& inst) { return two_factor(inst.g, inst.m); }

} // namespace

TEST_CASE("certificate verification") {
    CubicGraph g = petersen();
    auto pms = enumerate_perfect_matchings(g);
    REQUIRE(pms.size() == 6);
    int good = 0;
    for (size_t i = 0; i < 6; ++i)
        for (size_t j = i + 1; j < 6; ++j)
            for (size_t k = j + 1; k < 6; ++k)
                good += verify_certificate(g, {pms[i], pms[j], pms[k], "", {}});
    CHECK(good == 20); // every triple of distinct matchings works here

    // repeated matchings fail: M ∩ M ∩ M' = M ∩ M' is never empty here
    CHECK_FALSE(verify_certificate(g, {pms[0], pms[0], pms[1], "", {}}));

    CubicGraph k = k4();
    auto kms = enumerate_perfect_matchings(k);
    CHECK(verify_certificate(k, {kms[0], kms[1], kms[2], "", {}}));
}

TEST_CASE("certificates from balanced pairs") {
    CubicGraph g = petersen();
    PerfectMatching m = petersen_spokes();
    EdgeId ax = g.edges_between(0, 5).at(0);
    EdgeId cy = g.edges_between(2, 6).at(0);
    auto wa = is_balanced(g, m, {ax});
    auto wb = is_balanced(g, m, {cy});
    REQUIRE(wa.has_value());
    REQUIRE(wb.has_value());
    BalancedMatching a{m, {ax}, *wa}, b{m, {cy}, *wb};
    auto cert = from_balanced_pair(g, m, a, b);
    CHECK(verify_certificate(g, cert));
    CHECK_THROWS_WITH_AS(from_balanced_pair(g, m, a, a), doctest::Contains("NotDisjoint"), Error);
}

TEST_CASE("strategy: two odd cycles at small distance") {
    CubicGraph g = petersen();
    PerfectMatching m = petersen_spokes();
    auto f = two_factor(g, m);
    auto cert = strategy_oddness2_close(g, m, f);
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(g, *cert));
    CHECK(cert->trail["distance"] == 1);

    auto prism = prism_instance();
    auto cp = strategy_oddness2_close(prism.g, prism.m, factor_of(prism));
    REQUIRE(cp.has_value());
    CHECK(verify_certificate(prism.g, *cp));

    auto far = far_odd_cycles26();
    CHECK_FALSE(strategy_oddness2_close(far.g, far.m, factor_of(far)).has_value());

    // the two pentagons of this instance sit at distance exactly 3
    auto nb = near_bipartite18();
    auto cnb = strategy_oddness2_close(nb.g, nb.m, factor_of(nb));
    REQUIRE(cnb.has_value());
    CHECK(cnb->trail["distance"] == 3);
    CHECK(verify_certificate(nb.g, *cnb));
    CHECK(cnb->trail["picks"].size() == 2);

    // wrong shape is an error, not a miss
    CubicGraph k = k4();
    auto km = enumerate_perfect_matchings(k)[0];
    CHECK_THROWS_WITH_AS(strategy_oddness2_close(k, km, two_factor(k, km)),
                         doctest::Contains("WrongOddness"), Error);
}

TEST_CASE("solve handles every constructed instance") {
    for (const auto& inst :
         {far_odd_cycles26(), near_bipartite18(), near_bipartite_neg22(), oddness4_paired24(),
          oddness4_central32(), four_chordless30(), four_chordless_bad22(), six_pentagon_ring30()}) {
        auto cert = solve(inst.g);
        CHECK(verify_certificate(inst.g, cert));
    }
}

TEST_CASE("strategy: odd pair attached to a near-bipartite even cycle") {
    auto inst = near_bipartite18();
    auto f = factor_of(inst);
    REQUIRE(f.cycles.size() == 3);
    auto cert = strategy_oddness2_near_bipartite(inst.g, inst.m, f);
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(inst.g, *cert));

    auto neg = near_bipartite_neg22();
    auto fn = factor_of(neg);
    REQUIRE(fn.cycles.size() == 3);
    CHECK_FALSE(strategy_oddness2_near_bipartite(neg.g, neg.m, fn).has_value());

    auto far = far_odd_cycles26();
    CHECK_THROWS_WITH_AS(strategy_oddness2_near_bipartite(far.g, far.m, factor_of(far)),
                         doctest::Contains("WrongShape"), Error);
}

TEST_CASE("strategy: four odd cycles paired by direct edges") {
    auto inst = oddness4_paired24();
    auto f = factor_of(inst);
    REQUIRE(f.odd_count() == 4);
    auto cert = strategy_oddness4_paired(inst.g, inst.m, f);
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(inst.g, *cert));

    auto central = oddness4_central32();
    CHECK_FALSE(strategy_oddness4_paired(central.g, central.m, factor_of(central)).has_value());

    CubicGraph p = petersen();
    CHECK_THROWS_WITH_AS(
        strategy_oddness4_paired(p, petersen_spokes(), two_factor(p, petersen_spokes())),
        doctest::Contains("WrongOddness"), Error);
}

TEST_CASE("strategy: four chordless odd cycles around a centre") {
    auto inst = four_chordless30();
    auto f = factor_of(inst);
    auto cert = strategy_four_chordless(inst.g, inst.m, f);
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(inst.g, *cert));
    CHECK(cert->strategy == "four-chordless-cycles");

    auto bad = four_chordless_bad22();
    CHECK_FALSE(strategy_four_chordless(bad.g, bad.m, factor_of(bad)).has_value());

    auto central = oddness4_central32();
    CHECK_THROWS_WITH_AS(strategy_four_chordless(central.g, central.m, factor_of(central)),
                         doctest::Contains("WrongShape"), Error);
}

TEST_CASE("strategy: rings and stars") {
    auto prism = prism_instance();
    auto cert = strategy_rings_stars(prism.g, prism.m, factor_of(prism));
    REQUIRE(cert.has_value());
    CHECK(verify_certificate(prism.g, *cert));

    auto ring6 = six_pentagon_ring30();
    auto c6 = strategy_rings_stars(ring6.g, ring6.m, factor_of(ring6));
    REQUIRE(c6.has_value());
    CHECK(verify_certificate(ring6.g, *c6));

    auto star = four_chordless30();
    auto cs = strategy_rings_stars(star.g, star.m, factor_of(star));
    REQUIRE(cs.has_value());
    CHECK(verify_certificate(star.g, *cs));

    auto far = far_odd_cycles26();
    CHECK_FALSE(strategy_rings_stars(far.g, far.m, factor_of(far)).has_value());

    CHECK_THROWS_WITH_AS(strategy_rings_stars(ring6.g, ring6.m, factor_of(ring6), 0),
                         doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("solve: class-1 graphs get colour-class certificates") {
    for (const auto& g : {k4(), k33(), prism5(), dipole3()}) {
        auto cert = solve(g);
        CHECK(cert.strategy == "3-edge-colouring");
        CHECK(verify_certificate(g, cert));
    }
}

TEST_CASE("solve: snark corpus") {
    for (const char* name : {"snarks/petersen.g6", "snarks/blanusa1.g6", "snarks/blanusa2.g6",
                             "snarks/flower_j5.g6", "snarks/flower_j7.g6"}) {
        CubicGraph g = load_data_graph(name);
        auto cert = solve(g);
        CHECK(verify_certificate(g, cert));
        CHECK(cert.strategy != "3-edge-colouring");
    }
}

TEST_CASE("solve agrees with brute force on small graphs") {
    for (int n : {4, 6, 8, 10}) {
        for (bool multi : {false, true}) {
            if (multi && n > 6) continue;
            for (const auto& g : generate_cubic_bridgeless(n, multi, true)) {
                auto cert = solve(g);
                auto brute = solve_bruteforce(g);
                REQUIRE(brute.has_value());
                CHECK(verify_certificate(g, cert));
                CHECK(verify_certificate(g, *brute));
            }
        }
    }
}

TEST_CASE("brute force scans triples deterministically") {
    auto b1 = solve_bruteforce(petersen());
    auto b2 = solve_bruteforce(petersen());
    REQUIRE(b1.has_value());
    CHECK(b1->m1.edges == b2->m1.edges);
    CHECK(b1->trail["indices"] == b2->trail["indices"]);
    CHECK(solve_bruteforce(k33()).has_value());
}

TEST_CASE("solve through the reductions") {
    SolveConfig config;
    config.mode = SolveConfig::Mode::Reduction;

    CubicGraph host = g8_host12();
    auto cert = solve(host, config);
    CHECK(cert.strategy == "g8-reduction");
    CHECK(verify_certificate(host, cert));

    CubicGraph p = petersen();
    auto cp = solve(p, config);
    CHECK(cp.strategy == "petersen-minus-vertex-reduction");
    CHECK(verify_certificate(p, cp));
}

TEST_CASE("reduction trails replay") {
    SolveConfig config;
    config.mode = SolveConfig::Mode::Reduction;
    for (auto [host, kind] :
         {std::pair<CubicGraph, PatternKind>{g8_host12(), PatternKind::G8},
          std::pair<CubicGraph, PatternKind>{petersen(), PatternKind::PetersenMinusVertex}}) {
        auto cert = solve(host, config);
        // rebuild the embedding from the trail and replay the reduction
        Embedding emb;
        emb.image = cert.trail["image"].get<std::vector<int>>();
        emb.boundary = cert.trail["boundary"].get<std::vector<int>>();
        const PatternGraph& pat =
            kind == PatternKind::G8 ? g8_pattern() : petersen_minus_vertex_pattern();
        for (size_t i = 0; i < pat.attachments.size(); ++i) {
            int a = emb.image[pat.attachments[i]];
            for (EdgeId e : host.incident(a))
                if (host.other_end(e, a) == emb.boundary[i]) {
                    bool used = false;
                    for (EdgeId x : emb.boundary_edges) used = used || x == e;
                    if (!used) {
                        emb.boundary_edges.push_back(e);
                        break;
                    }
                }
        }
        auto red = kind == PatternKind::G8 ? reduce_g8(host, emb) : reduce_pmv(host, emb);
        CHECK(encode_sparse6(red.reduced.raw()) == cert.trail["reduced_graph"].get<std::string>());
        std::array<PerfectMatching, 3> ps;
        for (int i = 0; i < 3; ++i) {
            auto edges = cert.trail["reduced_matchings"][i].get<std::vector<EdgeId>>();
            std::sort(edges.begin(), edges.end());
            ps[i] = PerfectMatching{edges, red.reduced.id()};
        }
        auto lifted = kind == PatternKind::G8 ? lift_g8(host, red, ps[0], ps[1], ps[2])
                                              : lift_pmv(host, red, ps[0], ps[1], ps[2]);
        CHECK(lifted[0].edges == cert.m1.edges);
        CHECK(lifted[1].edges == cert.m2.edges);
        CHECK(lifted[2].edges == cert.m3.edges);
    }
}

TEST_CASE("solve rejects bad inputs and honours budgets") {
    CHECK_THROWS_WITH_AS(solve(bridged10()), doctest::Contains("bridge"), Error);

    SolveConfig tiny;
    tiny.timeout_ms = 0;
    CHECK_THROWS_WITH_AS(solve(load_data_graph("snarks/flower_j7.g6"), tiny),
                         doctest::Contains("Timeout"), Error);
}

TEST_CASE("certificate JSON round trip") {
    CubicGraph g = petersen();
    auto cert = solve(g);
    auto j = certificate_to_json(g, cert);
    CHECK(j["verified"] == true);
    CHECK(j["n"] == 10);
    auto [g2, cert2] = certificate_from_json(j);
    CHECK(verify_certificate(g2, cert2));
    CHECK(g2.id() == g.id());

    // a multigraph certificate survives the endpoint-pair encoding
    CubicGraph d = dipole3();
    auto cd = solve(d);
    auto jd = certificate_to_json(d, cd);
    auto [d2, cert_d] = certificate_from_json(jd);
    CHECK(verify_certificate(d2, cert_d));
}

TEST_CASE("strategies fire inside the full cascade") {
    // oddness-2 instances are solved before brute force would run
    auto inst = near_bipartite18();
    SolveConfig config;
    config.mode = SolveConfig::Mode::Balanced;
    if (!chromatic_index_is_3(inst.g).has_value()) {
        auto cert = solve(inst.g, config);
        CHECK(verify_certificate(inst.g, cert));
    }
    // expanded snarks have oddness 2 and must be solvable by strategies alone
    CubicGraph t = triangle_expand(petersen(), 0);
    auto cert = solve(t, config);
    CHECK(verify_certificate(t, cert));
}
