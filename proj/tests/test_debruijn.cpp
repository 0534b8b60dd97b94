#include <catch2/catch_amalgamated.hpp>

#include <regex>
#include <set>

#include "negaseq/dot.hpp"
#include "negaseq/excluded_edges.hpp"
#include "negaseq/verifier.hpp"
#include "oracles.hpp"

using namespace negaseq;

namespace {

oracle::Word symbols_of(const Tuple& t) { return {t.symbols().begin(), t.symbols().end()}; }

bool oracle_left_sns(const oracle::Word& v, unsigned k) {
    return oracle::negasymmetric(oracle::Word(v.begin(), v.end() - 1), k);
}
bool oracle_right_sns(const oracle::Word& v, unsigned k) {
    return oracle::negasymmetric(oracle::Word(v.begin() + 1, v.end()), k);
}
bool all_half(const oracle::Word& v, unsigned k) {
    return std::all_of(v.begin(), v.end(), [&](unsigned x) { return oracle::half(x, k); });
}
bool uniform(const oracle::Word& v) { return std::adjacent_find(v.begin(), v.end(), std::not_equal_to<>()) == v.end(); }
bool alternating(const oracle::Word& v) {
    if (v.size() < 2 || v[0] == v[1]) return false;
    for (std::size_t i = 2; i < v.size(); ++i) {
        if (v[i] != v[i - 2]) return false;
    }
    return true;
}
bool uniform_alternating(const oracle::Word& v, unsigned k) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] != oracle::neg(v[i - 1], k)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("reduced graph sizes") {
    const ReducedGraph g23(2, 3), g33(3, 3), g44(4, 4);
    CHECK(g23.vertex_count() == 3);
    CHECK(g23.count_edges() == 6);
    CHECK(g33.vertex_count() == 9);
    CHECK(g33.count_edges() == 24);
    CHECK(g44.vertex_count() == 64);
    CHECK(g44.count_edges() == 240);

    CHECK(edge_count_formula(5, 3) == 234);
    CHECK(edge_count_formula(3, 4) == 56);
    CHECK(edge_count_formula(2, 6) == 30);

    CHECK_THROWS_AS(ReducedGraph(1, 3), precondition_error);
    CHECK_THROWS_AS(ReducedGraph(3, 2), precondition_error);
    CHECK_THROWS_AS(ReducedGraph(10, 9, GraphMode::Explicit, 1000), budget_error);
    CHECK_THROWS_AS(ReducedGraph(40, 9), precondition_error);  // 9^40 overflows the encoding
}

TEST_CASE("edges are exactly the non-negasymmetric tuples, in both modes") {
    for (unsigned k = 3; k <= 6; ++k) {
        for (unsigned n = 2; n <= 5; ++n) {
            CAPTURE(n, k);
            const ReducedGraph imp(n, k, GraphMode::Implicit), exp(n, k, GraphMode::Explicit);
            const auto words = oracle::all_words(n, k);
            REQUIRE(words.size() == imp.edge_space());
            std::uint64_t expected = 0;
            for (Code e = 0; e < words.size(); ++e) {
                const bool edge = !oracle::negasymmetric(words[e], k);
                expected += edge;
                REQUIRE(imp.has_edge(e) == edge);
                REQUIRE(exp.has_edge(e) == edge);
                REQUIRE(imp.nega_reverse_code(e) == exp.nega_reverse_code(e));
                REQUIRE(symbols_of(decode(imp.nega_reverse_code(e), n, k)) == oracle::nega_reverse(words[e], k));
                // tail and head are the (n-1)-prefix and (n-1)-suffix
                REQUIRE(symbols_of(imp.vertex_label(imp.tail(e))) == oracle::Word(words[e].begin(), words[e].end() - 1));
                REQUIRE(symbols_of(imp.vertex_label(imp.head(e))) == oracle::Word(words[e].begin() + 1, words[e].end()));
            }
            CHECK(imp.count_edges() == expected);
            CHECK(exp.count_edges() == expected);
            CHECK(edge_count_formula(n, k) == expected);
            CHECK(imp.content_hash() == exp.content_hash());

            std::uint64_t in_sum = 0, out_sum = 0;
            for (Code v = 0; v < imp.vertex_count(); ++v) {
                in_sum += imp.in_degree(v);
                out_sum += imp.out_degree(v);
                REQUIRE(imp.in_degree(v) == exp.in_degree(v));
                REQUIRE(imp.out_degree(v) == exp.out_degree(v));
            }
            CHECK(in_sum == expected);
            CHECK(out_sum == expected);
        }
    }
}

TEST_CASE("content hash separates graphs") {
    CHECK(ReducedGraph(3, 3).content_hash() != ReducedGraph(3, 4).content_hash());
    CHECK(ReducedGraph(3, 3).content_hash() != ReducedGraph(2, 3).content_hash());
    CHECK(ReducedGraph(3, 3).content_hash() == ReducedGraph(3, 3).content_hash());
}

TEST_CASE("degree rule holds vertex by vertex") {
    for (unsigned k = 3; k <= 6; ++k) {
        for (unsigned n = 2; n <= 5; ++n) {
            CAPTURE(n, k);
            const ReducedGraph g(n, k);
            for (const auto& v : oracle::all_words(n - 1, k)) {
                // probe all k candidate edges on each side
                unsigned in = 0, out = 0;
                for (unsigned x = 0; x < k; ++x) {
                    oracle::Word before{x}, after = v;
                    before.insert(before.end(), v.begin(), v.end());
                    after.push_back(x);
                    in += !oracle::negasymmetric(before, k);
                    out += !oracle::negasymmetric(after, k);
                }
                const VertexProfile p = vertex_profile(g, Tuple(v, k));
                REQUIRE(p.in_degree == in);
                REQUIRE(p.out_degree == out);
                REQUIRE(in == k - (oracle_left_sns(v, k) ? 1 : 0));
                REQUIRE(out == k - (oracle_right_sns(v, k) ? 1 : 0));
                REQUIRE(p.flags.left_sns == oracle_left_sns(v, k));
                REQUIRE(p.flags.right_sns == oracle_right_sns(v, k));
            }
        }
    }
}

TEST_CASE("vertex_profile examples") {
    const ReducedGraph g43(4, 3);
    const VertexProfile a = vertex_profile(g43, Tuple({0, 0, 1}, 3));
    CHECK(a.in_degree == 2);
    CHECK(a.out_degree == 3);
    CHECK(a.flags.left_sns);
    CHECK_FALSE(a.flags.right_sns);
    CHECK_FALSE(g43.has_edge(encode(Tuple({2, 0, 0, 1}, 3))));

    const VertexProfile b = vertex_profile(g43, Tuple({1, 0, 2}, 3));
    CHECK(b.in_degree == 3);
    CHECK(b.out_degree == 3);
    CHECK(b.flags.negasymmetric);
    CHECK_FALSE(b.flags.left_sns);
    CHECK_FALSE(b.flags.right_sns);
    CHECK(b.in_odd());

    const VertexProfile c = vertex_profile(ReducedGraph(2, 4), Tuple({2}, 4));
    CHECK(c.in_degree == 3);
    CHECK(c.out_degree == 3);

    CHECK_THROWS_AS(vertex_profile(g43, Tuple({0, 1}, 3)), precondition_error);
    CHECK_THROWS_AS(vertex_profile(g43, Tuple({0, 1, 2}, 4)), precondition_error);
}

TEST_CASE("vertices both left-sns and right-sns") {
    for (unsigned k = 3; k <= 6; ++k) {
        for (unsigned n = 4; n <= 7; ++n) {
            CAPTURE(n, k);
            for (const auto& v : oracle::all_words(n - 1, k)) {
                const bool both = oracle_left_sns(v, k) && oracle_right_sns(v, k);
                bool described;
                if (n % 2 == 1 && k % 2 == 1) described = std::all_of(v.begin(), v.end(), [](unsigned x) { return x == 0; });
                else if (n % 2 == 1) described = (uniform(v) || alternating(v)) && all_half(v, k);
                else described = uniform_alternating(v, k);
                REQUIRE(both == described);
            }
        }
    }
}

TEST_CASE("vertices with odd in- and out-degree") {
    for (unsigned k = 3; k <= 6; ++k) {
        for (unsigned n = 2; n <= 7; ++n) {
            CAPTURE(n, k);
            const ReducedGraph g(n, k);
            for (const auto& v : oracle::all_words(n - 1, k)) {
                bool listed = false;
                if (k % 2 == 1) listed = oracle::negasymmetric(v, k) && !uniform(v);
                else if (n % 2 == 1) listed = (uniform(v) || alternating(v)) && all_half(v, k);
                else listed = uniform_alternating(v, k);
                if (!listed) continue;
                const Code code = encode(Tuple(v, k));
                REQUIRE(g.in_degree(code) % 2 == 1);
                REQUIRE(g.out_degree(code) % 2 == 1);
            }
        }
    }
}

TEST_CASE("edges joining constrained vertices have periodic structure") {
    auto neg = [](unsigned x, unsigned k) { return oracle::neg(x, k); };
    for (unsigned k = 3; k <= 4; ++k) {
        for (unsigned n = 3; n <= 6; ++n) {
            CAPTURE(n, k);
            for (const auto& e : oracle::all_words(n, k)) {
                const oracle::Word a(e.begin(), e.end() - 1), b(e.begin() + 1, e.end());
                const bool a_neg = oracle::negasymmetric(a, k), b_neg = oracle::negasymmetric(b, k);
                const bool a_left = oracle_left_sns(a, k), b_right = oracle_right_sns(b, k);
                auto periodic = [&](std::size_t p) {
                    for (std::size_t i = p; i < n; ++i) {
                        if (e[i] != e[i - p]) return false;
                    }
                    return true;
                };
                // entries a_0 .. a_{n-1} read as c_{i mod p}
                auto c = [&](std::size_t j) { return e[j]; };

                if (a_neg && b_neg) {
                    if (n % 2 == 0) {
                        REQUIRE(((uniform(a) || alternating(a)) && all_half(a, k)));
                        REQUIRE(((uniform(b) || alternating(b)) && all_half(b, k)));
                    } else {
                        REQUIRE(uniform_alternating(a, k));
                        REQUIRE(uniform_alternating(b, k));
                    }
                }
                if (n < 5) continue;
                if (a_neg && b_right) {
                    REQUIRE(periodic(3));
                    if (n % 3 == 0) REQUIRE((oracle::half(c(2), k) && c(0) == neg(c(1), k)));
                    if (n % 3 == 1) REQUIRE((oracle::half(c(1), k) && c(0) == neg(c(2), k)));
                    if (n % 3 == 2) REQUIRE((oracle::half(c(0), k) && c(1) == neg(c(2), k)));
                }
                if (a_left && b_neg) {
                    REQUIRE(periodic(3));
                    if (n % 3 == 0) REQUIRE((oracle::half(c(0), k) && c(1) == neg(c(2), k)));
                    if (n % 3 == 1) REQUIRE((oracle::half(c(2), k) && c(0) == neg(c(1), k)));
                    if (n % 3 == 2) REQUIRE((oracle::half(c(1), k) && c(0) == neg(c(2), k)));
                }
                if (a_left && b_right) {
                    REQUIRE(periodic(4));
                    if (n % 4 == 0) REQUIRE((c(0) == neg(c(1), k) && c(2) == neg(c(3), k)));
                    if (n % 4 == 1) REQUIRE((c(0) == neg(c(2), k) && oracle::half(c(1), k) && oracle::half(c(3), k)));
                    if (n % 4 == 2) REQUIRE((c(0) == neg(c(3), k) && c(1) == neg(c(2), k)));
                    if (n % 4 == 3) REQUIRE((c(1) == neg(c(3), k) && oracle::half(c(0), k) && oracle::half(c(2), k)));
                }
            }
        }
    }
}

TEST_CASE("excluded-edge budget examples") {
    const BoundBreakdown a = excluded_edge_budget(5, 3);
    CHECK(a.edges == 234);
    CHECK(a.u_out == 8);
    CHECK(a.u_in == 8);
    CHECK(a.p_out == 8);
    CHECK(a.p_in == 8);
    CHECK(a.ix_up == 2);
    CHECK(a.ix_pu == 2);
    CHECK(a.ix_uu == 2);
    CHECK(a.ix_pp == 2);
    CHECK(a.resulting_edge_cap == 210);
    CHECK(a.resulting_period_bound == 105);

    const BoundBreakdown b = excluded_edge_budget(2, 4);
    CHECK(b.edges == 12);
    CHECK(b.p_out == 2);
    CHECK(b.resulting_edge_cap == 10);
    CHECK(b.resulting_period_bound == 5);

    const BoundBreakdown c = excluded_edge_budget(3, 3);
    CHECK(c.edges == 24);
    CHECK(c.p_out == 2);
    CHECK(c.p_in == 2);
    CHECK(c.ix_pp == 2);
    CHECK(c.resulting_edge_cap == 22);
    CHECK(c.resulting_period_bound == 11);
}

TEST_CASE("excluded out-edge sets match degree imbalances in the graph") {
    // One out-edge is lost at every vertex with in < out, and one at every
    // negasymmetric vertex of odd out-degree. For even k the parity sets are
    // counted over all uniform or alternating {0, k/2}-tuples, which includes
    // some that are not negasymmetric, so there they only contain the measured set.
    for (unsigned k = 3; k <= 6; ++k) {
        for (unsigned n = 4; n <= 7; ++n) {
            if (*checked_pow(k, n) > 300'000) continue;
            CAPTURE(n, k);
            const ReducedGraph g(n, k);
            std::uint64_t surplus = 0, odd_negasymmetric = 0;
            for (Code v = 0; v < g.vertex_count(); ++v) {
                surplus += g.in_degree(v) < g.out_degree(v);
                odd_negasymmetric += g.out_degree(v) % 2 == 1 && is_negasymmetric(g.vertex_label(v));
            }
            const BoundBreakdown b = excluded_edge_budget(n, k);
            CHECK(b.u_out == surplus);
            if (n > 4) CHECK(b.u_in == surplus);
            if (k % 2 == 1) {
                CHECK(b.p_out == odd_negasymmetric);
                if (n > 4) CHECK(b.p_in == odd_negasymmetric);
            } else {
                CHECK(b.p_out >= odd_negasymmetric);
            }
        }
    }
}

TEST_CASE("sequence subgraph examples") {
    const PeriodicSequence s({0, 1, 1}, 3);
    const SequenceSubgraph sg = sequence_subgraph(s, 2);
    REQUIRE(sg.edge_count() == 6);
    std::set<Code> codes;
    for (const auto& e : sg.edges()) codes.insert(e.code);
    const std::set<Code> expected{encode(Tuple({0, 1}, 3)), encode(Tuple({1, 1}, 3)), encode(Tuple({1, 0}, 3)),
                                  encode(Tuple({2, 0}, 3)), encode(Tuple({2, 2}, 3)), encode(Tuple({0, 2}, 3))};
    CHECK(codes == expected);
    // edges 10, 20 enter (0) and 01, 02 leave it
    CHECK(sg.in_degree(0) == 2);
    CHECK(sg.out_degree(0) == 2);
    CHECK(sg.in_degree(1) == 2);
    CHECK(sg.out_degree(1) == 2);
    CHECK(sg.in_degree(2) == 2);
    CHECK(sg.out_degree(2) == 2);
    CHECK(sg.is_balanced());
    CHECK_FALSE(sg.has_negasymmetric_edge());
    CHECK(sg.closed_under_nega_reverse());

    try {
        (void)sequence_subgraph(PeriodicSequence({0, 1, 2}, 3), 2);
        FAIL("expected a collision");
    } catch (const subgraph_collision_error& e) {
        const Code edge20 = encode(Tuple({2, 0}, 3));
        const auto& cs = e.collisions();
        CHECK(std::any_of(cs.begin(), cs.end(), [&](const WindowCollision& c) {
            return c.edge == edge20 && c.first.source == EdgeSource::Sequence && c.first.index == 2 &&
                   c.second.source == EdgeSource::NegaReverse;
        }));
    }
}

TEST_CASE("sequence subgraph invariants for every short NOS") {
    for (unsigned k = 3; k <= 4; ++k) {
        for (unsigned n = 2; n <= 3; ++n) {
            for (std::size_t m = 1; m <= 6; ++m) {
                for (const auto& w : oracle::all_words(static_cast<unsigned>(m), k)) {
                    if (oracle::naive_nos(w, n, k)) continue;
                    CAPTURE(n, k, w);
                    const SequenceSubgraph sg = sequence_subgraph(PeriodicSequence(w, k), n);
                    REQUIRE(sg.edge_count() == 2 * m);
                    REQUIRE(sg.is_balanced());
                    REQUIRE_FALSE(sg.has_negasymmetric_edge());
                    REQUIRE(sg.closed_under_nega_reverse());
                    for (const auto& [v, in, out] : sg.balance()) {
                        if (is_negasymmetric(decode(v, n - 1, k))) REQUIRE(in % 2 == 0);
                    }
                }
            }
        }
    }
}

TEST_CASE("DOT export") {
    const std::string dot = export_dot(ReducedGraph(2, 3));
    const auto count = [&](const std::regex& re) {
        return std::distance(std::sregex_iterator(dot.begin(), dot.end(), re), std::sregex_iterator());
    };
    CHECK(dot.rfind("digraph \"reduced_n2_k3\" {\n", 0) == 0);
    CHECK(count(std::regex(R"(\n  "\d+" \[label=)")) == 3);
    CHECK(count(std::regex(R"(\n  "\d+" -> "\d+")")) == 6);
    CHECK(dot.find("\"0\" [label=\"0\", shape=doublecircle, fillcolor=\"plum\"]") != std::string::npos);
    CHECK(dot.find(" \n") == std::string::npos);
    CHECK(dot.back() == '\n');
    CHECK(dot == export_dot(ReducedGraph(2, 3)));

    // vertex 1 = (1) in B-_4(1): 1-tuple (1) is not negasymmetric
    const std::string d4 = export_dot(ReducedGraph(2, 4), {1000, false});
    CHECK(d4.find("\"1\" [label=\"1\", shape=circle, fillcolor=\"plum\"]") != std::string::npos);
    CHECK(d4.find("label=\"01\"") == std::string::npos);

    const std::string sub = export_dot(sequence_subgraph(PeriodicSequence({0, 1, 1}, 3), 2));
    CHECK(sub.find("\"0\" -> \"1\" [label=\"01\", style=solid];") != std::string::npos);
    CHECK(sub.find("\"2\" -> \"0\" [label=\"20\", style=dashed];") != std::string::npos);

    const std::string empty = export_dot(SequenceSubgraph(3, 3, {}));
    CHECK(empty.find("->") == std::string::npos);
    CHECK(std::count(empty.begin(), empty.end(), '\n') == 9 + 3);

    CHECK_THROWS_AS(export_dot(ReducedGraph(4, 4), {100, true}), budget_error);
    const std::string wide = export_dot(ReducedGraph(2, 11));
    CHECK(wide.find("\"10\" -> \"0\" [label=\"10.0\"];") != std::string::npos);
}
