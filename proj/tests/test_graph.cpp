#include "doctest.h"

#include <algorithm>
#include <set>

#include "graph.hpp"
#include "test_rng.hpp"

using namespace biplanar;

namespace {

VertexLabel L(const char* s) { return VertexLabel::parse(s); }

Graph cycle(const std::vector<const char*>& labels) {
    std::vector<VertexLabel> vs;
    for (auto* s : labels) vs.push_back(L(s));
    std::vector<Edge> es;
    for (std::size_t i = 0; i < vs.size(); ++i) es.emplace_back(vs[i], vs[(i + 1) % vs.size()]);
    return Graph(vs, es);
}

Graph path(const std::vector<const char*>& labels) {
    std::vector<VertexLabel> vs;
    for (auto* s : labels) vs.push_back(L(s));
    std::vector<Edge> es;
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) es.emplace_back(vs[i], vs[i + 1]);
    return Graph(vs, es);
}

Graph random_graph(TestRng& rng, int n, int m, int width) {
    std::vector<VertexLabel> vs;
    for (int i = 0; i < n; ++i) vs.emplace_back(width, static_cast<std::uint32_t>(i));
    std::set<Edge> es;
    while (static_cast<int>(es.size()) < m) {
        auto i = rng.below(static_cast<std::uint64_t>(n));
        auto j = rng.below(static_cast<std::uint64_t>(n));
        if (i == j) continue;
        es.insert(Edge(vs[i], vs[j]));
    }
    return Graph(vs, std::vector<Edge>(es.begin(), es.end()));
}

} // namespace

TEST_CASE("vertex labels parse, format and compare") {
    CHECK(L("0000").str() == "0000");
    CHECK(L("10100101").str() == "10100101");
    CHECK(L("0001") < L("0010"));
    CHECK(L("0111") < L("1000")); // lexicographic == numeric at equal width
    CHECK(L("0000") != L("00000"));
    CHECK(L("1").bit(1));
    CHECK_FALSE(L("01").bit(1));
    CHECK_THROWS_AS(VertexLabel::parse("01x0"), domain_error);
    CHECK_THROWS_AS(VertexLabel::parse(""), domain_error);
    CHECK_THROWS_AS(VertexLabel::parse(std::string(40, '0')), domain_error);
}

TEST_CASE("hamming distance") {
    CHECK(hamming_distance(L("0000"), L("0000")) == 0);
    CHECK(hamming_distance(L("0000"), L("1000")) == 1);
    CHECK(hamming_distance(L("00000000"), L("00010000")) == 1);
    CHECK(hamming_distance(L("0101"), L("1010")) == 4);
    CHECK_THROWS_AS(hamming_distance(L("000"), L("0000")), domain_error);
}

TEST_CASE("hypercube counts") {
    Graph q1 = hypercube(1);
    CHECK(q1.vertex_count() == 2);
    CHECK(q1.edge_count() == 1);
    Graph q4 = hypercube(4);
    CHECK(q4.vertex_count() == 16);
    CHECK(q4.edge_count() == 32);
    Graph q8 = hypercube(8);
    CHECK(q8.vertex_count() == 256);
    CHECK(q8.edge_count() == 1024);
    CHECK_THROWS_AS(hypercube(0), domain_error);
    CHECK_THROWS_AS(hypercube(17), domain_error);
}

TEST_CASE("hypercube structure for d in 1..10") {
    for (int d = 1; d <= 10; ++d) {
        Graph q = hypercube(d);
        CHECK(q.vertex_count() == (std::size_t(1) << d));
        CHECK(q.edge_count() == std::size_t(d) * (std::size_t(1) << (d - 1)));
        for (const Edge& e : q.edges()) CHECK(hamming_distance(e.a, e.b) == 1);
    }
    // Every distance-1 pair is an edge (exhaustive for small d).
    for (int d = 1; d <= 6; ++d) {
        Graph q = hypercube(d);
        const auto& vs = q.vertices();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                CHECK(q.has_edge(vs[i], vs[j]) == (hamming_distance(vs[i], vs[j]) == 1));
    }
}

TEST_CASE("connected components") {
    CHECK(connected_components(Graph()).empty());

    Graph q2 = hypercube(2);
    auto comps = connected_components(q2);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == q2);

    // Two disjoint paths; components come back sorted by smallest label.
    Graph g({L("000"), L("001"), L("100"), L("101")},
            {Edge(L("100"), L("101")), Edge(L("000"), L("001"))});
    comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].vertices().front() == L("000"));
    CHECK(comps[1].vertices().front() == L("100"));
}

TEST_CASE("components partition the vertex set") {
    TestRng rng(1234);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 12, 10, 4);
        auto comps = connected_components(g);
        std::vector<VertexLabel> all;
        for (const Graph& c : comps)
            all.insert(all.end(), c.vertices().begin(), c.vertices().end());
        std::sort(all.begin(), all.end());
        CHECK(all == g.vertices());
        std::size_t edge_sum = 0;
        for (const Graph& c : comps) edge_sum += c.edge_count();
        CHECK(edge_sum == g.edge_count());
    }
}

TEST_CASE("apply_vertex_map basics") {
    Graph q3 = hypercube(3);

    VertexMap id = VertexMap::identity_on(q3.vertices());
    CHECK(apply_vertex_map(q3, id) == q3);

    // Bitwise complement is an automorphism of the cube.
    std::map<VertexLabel, VertexLabel> cm;
    for (const VertexLabel& v : q3.vertices())
        cm.emplace(v, VertexLabel(3, ~v.bits() & 0x7u));
    Graph mapped = apply_vertex_map(q3, VertexMap(cm));
    CHECK(mapped == q3);

    // Not total -> domain error.
    std::map<VertexLabel, VertexLabel> partial;
    partial.emplace(L("000"), L("111"));
    CHECK_THROWS_AS(apply_vertex_map(q3, VertexMap(partial)), domain_error);

    // Not injective -> domain error at construction.
    std::map<VertexLabel, VertexLabel> squash;
    squash.emplace(L("000"), L("111"));
    squash.emplace(L("001"), L("111"));
    CHECK_THROWS_AS(VertexMap(squash), domain_error);
}

TEST_CASE("apply_vertex_map preserves counts and degrees") {
    TestRng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_graph(rng, 10, 14, 4);
        // Random relabeling onto fresh width-5 labels.
        std::vector<std::uint32_t> codes;
        for (std::uint32_t i = 0; i < 32; ++i) codes.push_back(i);
        rng.shuffle(codes);
        std::map<VertexLabel, VertexLabel> m;
        int i = 0;
        for (const VertexLabel& v : g.vertices()) m.emplace(v, VertexLabel(5, codes[i++]));
        Graph h = apply_vertex_map(g, VertexMap(m));
        CHECK(h.vertex_count() == g.vertex_count());
        CHECK(h.edge_count() == g.edge_count());
        CHECK(h.degree_sequence() == g.degree_sequence());
    }
}

TEST_CASE("isomorphism: identical and trivially different graphs") {
    Graph c4 = cycle({"00", "01", "11", "10"});
    auto w = are_isomorphic(c4, c4);
    REQUIRE(w.has_value());
    CHECK(is_isomorphism_witness(c4, c4, *w));

    Graph p4 = path({"00", "01", "11", "10"});
    CHECK_FALSE(are_isomorphic(c4, p4).has_value());

    // Same counts, different degree structure: triangle+isolated vs path.
    Graph tri({L("00"), L("01"), L("10"), L("11")},
              {Edge(L("00"), L("01")), Edge(L("01"), L("10")), Edge(L("00"), L("10"))});
    Graph p3x({L("00"), L("01"), L("10"), L("11")},
              {Edge(L("00"), L("01")), Edge(L("01"), L("10")), Edge(L("10"), L("11"))});
    CHECK_FALSE(are_isomorphic(tri, p3x).has_value());
}

TEST_CASE("isomorphism found under random relabeling") {
    TestRng rng(2024);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = random_graph(rng, 9, 13, 4);
        std::vector<std::uint32_t> codes;
        for (std::uint32_t i = 0; i < 16; ++i) codes.push_back(i);
        rng.shuffle(codes);
        std::map<VertexLabel, VertexLabel> m;
        int i = 0;
        for (const VertexLabel& v : g.vertices()) m.emplace(v, VertexLabel(4, codes[i++]));
        Graph h = apply_vertex_map(g, VertexMap(m));

        auto w1 = are_isomorphic(g, h);
        auto w2 = are_isomorphic(h, g);
        REQUIRE(w1.has_value());
        REQUIRE(w2.has_value());
        CHECK(is_isomorphism_witness(g, h, *w1));
        CHECK(is_isomorphism_witness(h, g, *w2));
    }
}

TEST_CASE("graph text format round-trips") {
    Graph q3 = hypercube(3);
    std::string text = write_graph_text(q3);
    Graph back = read_graph_text(text);
    CHECK(back == q3);
    CHECK(write_graph_text(back) == text);

    // Comments and blank lines are tolerated on read.
    Graph g = read_graph_text("# a comment\ngraph width=2\n\n00 01\n# another\n01 11\n");
    CHECK(g.edge_count() == 2);

    CHECK_THROWS_AS(read_graph_text("width=2\n00 01\n"), parse_error);
    CHECK_THROWS_AS(read_graph_text("graph width=2\n00\n"), parse_error);
    CHECK_THROWS_AS(read_graph_text("graph width=2\n00 01 11\n"), parse_error);
    CHECK_THROWS_AS(read_graph_text("graph width=2\n00 011\n"), parse_error);
    CHECK_THROWS_AS(read_graph_text("graph width=2\n00 00\n"), parse_error);
    CHECK_THROWS_AS(read_graph_text("graph width=2\n00 01\n01 00\n"), parse_error);

    try {
        read_graph_text("graph width=2\n00 01\n01 00\n");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.line == 3);
    }
}
