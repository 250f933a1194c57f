#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "immersion/catalog.hpp"
#include "immersion/certificate.hpp"
#include "immersion/constructions.hpp"
#include "testutil.hpp"

using namespace imm;

namespace {

ImmersionCertificate k4_trivial() {
    return complete_witness(4).cert;
}

FactorWitness c_n_arcs(int n, int a, int b, int c) {
    return cycle_arc_witness(n, {a, b, c});
}

}  // namespace

TEST_CASE("verify accepts valid certificates") {
    auto g = generate("complete", {4});
    auto c = k4_trivial();
    auto res = verify(g, c);
    CHECK(res.ok);
    CHECK(res.warnings.empty());
}

TEST_CASE("verify rejects each violated invariant with a reason") {
    auto g = generate("complete", {4});

    auto dup = k4_trivial();
    dup.trails[{2, 3}] = {2, 0, 1, 3};  // reuses edges 0-2 (trail {0,2}) and 0-1
    auto res = verify(g, dup);
    CHECK(!res.ok);
    CHECK(res.message.find("already used") != std::string::npos);

    auto wrong_end = k4_trivial();
    wrong_end.trails[{0, 1}] = {0, 2};
    res = verify(g, wrong_end);
    CHECK(!res.ok);
    CHECK(res.message.find("terminals") != std::string::npos);

    auto missing = k4_trivial();
    missing.trails.erase({0, 1});
    res = verify(g, missing);
    CHECK(!res.ok);
    CHECK(res.message.find("trails") != std::string::npos);

    auto nonedge = k4_trivial();
    nonedge.host_edges_hash.clear();
    res = verify(generate("path", {4}), nonedge);  // K_4 trails are not P_4 edges
    CHECK(!res.ok);
    CHECK(res.message.find("not a host edge") != std::string::npos);

    auto twice = k4_trivial();
    twice.terminals = {0, 1, 2, 2};
    res = verify(g, twice);
    CHECK(!res.ok);
    CHECK(res.message.find("distinct") != std::string::npos);

    auto self_repeat = k4_trivial();
    self_repeat.trails[{0, 1}] = {0, 1, 0, 1};
    res = verify(g, self_repeat);
    CHECK(!res.ok);
    CHECK(res.message.find("repeated within") != std::string::npos);

    auto bad_host = k4_trivial();
    bad_host.host_order = 5;
    res = verify(g, bad_host);
    CHECK(!res.ok);
    CHECK(res.message.find("host order") != std::string::npos);

    auto bad_hash = k4_trivial();
    bad_hash.host_edges_hash = "0000000000000000";
    res = verify(g, bad_hash);
    CHECK(!res.ok);
    CHECK(res.message.find("hash") != std::string::npos);
}

TEST_CASE("verify warns on vertex-repeating trails") {
    Graph g(4, {{0, 1}, {1, 2}, {0, 2}, {1, 3}});
    ImmersionCertificate simple;
    simple.order = 2;
    simple.host_order = 4;
    simple.terminals = {0, 3};
    simple.trails[{0, 1}] = {0, 2, 1, 3};
    auto res = verify(g, simple);
    CHECK(res.ok);
    CHECK(res.warnings.empty());

    Graph h(5, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {1, 4}});
    ImmersionCertificate wander;
    wander.order = 2;
    wander.host_order = 5;
    wander.terminals = {0, 4};
    wander.trails[{0, 1}] = {0, 1, 2, 3, 1, 4};  // visits 1 twice, no repeated edge
    res = verify(h, wander);
    CHECK(res.ok);
    REQUIRE(res.warnings.size() == 1);
    CHECK(res.warnings[0].find("repeats a vertex") != std::string::npos);
}

TEST_CASE("order zero and one certificates") {
    ImmersionCertificate zero;
    zero.host_order = 0;
    CHECK(verify(Graph(), zero).ok);
    ImmersionCertificate one;
    one.order = 1;
    one.terminals = {0};
    one.host_order = 1;
    CHECK(verify(Graph(1, {}), one).ok);
}

TEST_CASE("parity profiles") {
    auto w1 = c_n_arcs(6, 0, 2, 4);
    auto p1 = parity_profile(w1.cert);
    CHECK(p1.summary == ParitySummary::all_odd);
    for (auto& [pair, pegs] : p1.pegs) CHECK(pegs == 1);

    // arcs of lengths 1, 1, 5: peg counts 0, 0, 4 are uniformly even
    auto w2 = c_n_arcs(7, 0, 1, 2);
    auto p2 = parity_profile(w2.cert);
    CHECK(p2.summary == ParitySummary::all_even);
    CHECK(p2.pegs[{0, 1}] == 0);
    CHECK(p2.pegs[{1, 2}] == 0);
    CHECK(p2.pegs[{0, 2}] == 4);

    auto w3 = c_n_arcs(7, 0, 2, 4);
    auto p3 = parity_profile(w3.cert);
    CHECK(p3.summary == ParitySummary::mixed);
    CHECK(p3.pegs[{0, 1}] == 1);
    CHECK(p3.pegs[{1, 2}] == 1);
    CHECK(p3.pegs[{0, 2}] == 2);

    CHECK(parity_profile(complete_witness(1).cert).summary == ParitySummary::all_even);
}

TEST_CASE("split_off") {
    auto p3 = generate("path", {3});
    auto lifted = split_off(p3, 0, 1, 2);
    CHECK(lifted.edges() == std::vector<Edge>{{0, 2}});
    CHECK(lifted.degree(1) == 0);

    auto c4 = generate("cycle", {4});
    auto l2 = split_off(c4, 0, 1, 2);
    CHECK(l2.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {2, 3}});
    CHECK(l2.degree(1) == 0);

    auto tri = generate("cycle", {3});
    CHECK_THROWS_AS(split_off(tri, 0, 1, 2), std::invalid_argument);  // 0-2 already present
    CHECK_THROWS_AS(split_off(p3, 0, 1, 0), std::invalid_argument);   // u == w
    CHECK_THROWS_AS(split_off(p3, 0, 2, 1), std::invalid_argument);   // 0-2 not an edge
}

TEST_CASE("certificate json golden bytes") {
    auto w = complete_witness(2);
    std::string expected =
        "{\n"
        "  \"order\": 2,\n"
        "  \"terminals\": [\n    0,\n    1\n  ],\n"
        "  \"trails\": [\n"
        "    {\n"
        "      \"pair\": [\n        0,\n        1\n      ],\n"
        "      \"walk\": [\n        0,\n        1\n      ]\n"
        "    }\n"
        "  ],\n"
        "  \"host_order\": 2,\n"
        "  \"host_edges_hash\": \"08cd4c29d1e47d34\"\n"
        "}";
    CHECK(write_certificate(w.cert) == expected);
}

TEST_CASE("certificate json round trip") {
    auto w = cycle_arc_witness(7, {0, 2, 5});
    auto text = write_certificate(w.cert);
    auto back = read_certificate(text);
    CHECK(back.order == w.cert.order);
    CHECK(back.terminals == w.cert.terminals);
    CHECK(back.trails == w.cert.trails);
    CHECK(back.host_edges_hash == w.cert.host_edges_hash);
    CHECK(write_certificate(back) == text);
    CHECK(verify(w.graph, back).ok == verify(w.graph, w.cert).ok);
}

TEST_CASE("certificate json schema errors carry document paths") {
    CHECK_THROWS_WITH_AS(read_certificate("{"), doctest::Contains("parse error"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(read_certificate("[]"), doctest::Contains("$"), std::runtime_error);
    CHECK_THROWS_WITH_AS(read_certificate(R"({"order": 1, "terminals": [0], "trails": []})"),
                         doctest::Contains("host_order"), std::runtime_error);
    // trail referencing a vertex >= host order
    std::string bad = R"({"order": 2, "terminals": [0, 1],
        "trails": [{"pair": [0, 1], "walk": [0, 7]}], "host_order": 2})";
    CHECK_THROWS_WITH_AS(read_certificate(bad), doctest::Contains("$.trails[0].walk[1]"),
                         std::runtime_error);
    std::string badpair = R"({"order": 2, "terminals": [0, 1],
        "trails": [{"pair": [1, 0], "walk": [0, 1]}], "host_order": 2})";
    CHECK_THROWS_WITH_AS(read_certificate(badpair), doctest::Contains("pair"), std::runtime_error);
    std::string duppair = R"({"order": 2, "terminals": [0, 1],
        "trails": [{"pair": [0, 1], "walk": [0, 1]}, {"pair": [0, 1], "walk": [1, 0]}],
        "host_order": 2})";
    CHECK_THROWS_WITH_AS(read_certificate(duppair), doctest::Contains("duplicate"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(read_certificate(R"({"order": 2, "terminals": [0, 9],
        "trails": [], "host_order": 2})"),
                         doctest::Contains("$.terminals[1]"), std::runtime_error);
}

TEST_CASE("single random mutations never crash the verifier") {
    std::mt19937 rng(4242);
    auto base = catalog_certificate("cm_kr", {5, 3});
    for (int trial = 0; trial < 120; ++trial) {
        auto c = base.cert;
        switch (rng() % 4) {
            case 0: {  // perturb one interior walk vertex
                auto it = std::next(c.trails.begin(), rng() % c.trails.size());
                if (it->second.size() > 2)
                    it->second[1 + rng() % (it->second.size() - 2)] = rng() % c.host_order;
                break;
            }
            case 1:  // swap two terminals (trails now end at the wrong places)
                std::swap(c.terminals[rng() % c.order], c.terminals[rng() % c.order]);
                break;
            case 2:  // drop a trail
                c.trails.erase(std::next(c.trails.begin(), rng() % c.trails.size()));
                break;
            default:  // clone one trail's walk onto another pair
                c.trails.begin()->second = std::next(c.trails.begin(), 1)->second;
                break;
        }
        auto res = verify(base.graph, c);
        if (res.ok) {
            // a mutation may cancel out; acceptance is only legitimate if the
            // certificate still has full structure
            CHECK(c.trails.size() == base.cert.trails.size());
            CHECK(c.order == base.cert.order);
        } else {
            CHECK(!res.message.empty());
        }
    }
}

TEST_CASE("map_certificate and oriented_trail") {
    auto w = cycle_arc_witness(5, {0, 1, 3});
    auto fwd = oriented_trail(w.cert, 0, 2);
    auto rev = oriented_trail(w.cert, 2, 0);
    CHECK(fwd.front() == w.cert.terminals[0]);
    CHECK(fwd.back() == w.cert.terminals[2]);
    auto flipped = rev;
    std::reverse(flipped.begin(), flipped.end());
    CHECK(flipped == fwd);

    // relabel C_5 by rotation; the image must verify on the same graph
    std::vector<int> rot(5);
    for (int v = 0; v < 5; ++v) rot[v] = (v + 1) % 5;
    auto mapped = map_certificate(w.cert, rot, w.graph);
    CHECK(verify(w.graph, mapped).ok);
}
