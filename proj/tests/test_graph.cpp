#include <doctest.h>

#include <optional>
#include <random>
#include <sstream>

#include "homg/graph.hpp"

using namespace homg;

namespace {

Graph random_graph(int n, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// shortest induced odd cycle by subset enumeration: an independent oracle
// for the walk-based odd girth computation
std::optional<int> brute_odd_girth(const Graph& g) {
    std::optional<int> best;
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << g.n()); ++s) {
        int k = __builtin_popcount(s);
        if (k < 3 || k % 2 == 0) continue;
        if (best && k >= *best) continue;
        Graph sub = induced(g, VertexSet(s));
        if (sub.edge_count() != k) continue;
        bool cyclic = is_connected(sub);
        for (int v = 0; v < k && cyclic; ++v)
            if (sub.degree(v) != 2) cyclic = false;
        if (cyclic) best = k;
    }
    return best;
}

}  // namespace

TEST_CASE("graph construction and edge bookkeeping") {
    Graph g(4);
    CHECK(g.n() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    CHECK(g.has_edge(2, 0));
    CHECK(!g.has_edge(0, 1));
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(2) == 2);
    CHECK(g.degree(1) == 0);
    // re-adding is a no-op
    g.add_edge(3, 2);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 2}, {2, 3}});

    CHECK_THROWS_AS(Graph(17), std::invalid_argument);
    CHECK_THROWS_AS(Graph(-1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
}

TEST_CASE("clique cycle complement constructions") {
    CHECK(clique(5).edge_count() == 10);
    CHECK(clique(1).edge_count() == 0);
    CHECK(cycle(5).edge_count() == 5);
    CHECK(cycle(3) == clique(3));
    CHECK_THROWS_AS(cycle(2), std::invalid_argument);

    Graph co5 = complement(cycle(5));
    CHECK(co5.edge_count() == 5);
    // C5 is self-complementary
    CHECK(co5.has_edge(0, 2));
    CHECK(!co5.has_edge(0, 1));
    CHECK(complement(clique(4)).edge_count() == 0);
}

TEST_CASE("universal vertices and disjoint unions") {
    Graph c51 = add_universal(cycle(5), 1);
    CHECK(c51.n() == 6);
    CHECK(c51.edge_count() == 10);
    CHECK(c51.degree(5) == 5);

    Graph c52 = add_universal(cycle(5), 2);
    CHECK(c52.n() == 7);
    CHECK(c52.edge_count() == 16);
    CHECK(c52.has_edge(5, 6));
    CHECK(c52.degree(5) == 6);
    CHECK(c52.degree(0) == 4);
    CHECK(c52.min_degree() == 4);
    CHECK(c52.max_degree() == 6);

    Graph u = disjoint_union(clique(3), cycle(5));
    CHECK(u.n() == 8);
    CHECK(u.edge_count() == 8);
    CHECK(!is_connected(u));
    CHECK(is_connected(cycle(5)));
    CHECK(set_size(component_of(u, 0)) == 3);
    CHECK(set_size(component_of(u, 4)) == 5);
}

TEST_CASE("bundled named graphs") {
    Graph gr = named("grotzsch");
    CHECK(gr.n() == 11);
    CHECK(gr.edge_count() == 20);
    CHECK(gr.min_degree() == 3);
    CHECK(gr.max_degree() == 5);

    Graph pe = named("petersen");
    CHECK(pe.n() == 10);
    CHECK(pe.edge_count() == 15);
    CHECK(pe.min_degree() == 3);
    CHECK(pe.max_degree() == 3);

    // the six seven-vertex sporadic cores: one with 11 edges, three with
    // 12, two with 13
    CHECK(named("g1").edge_count() == 11);
    CHECK(named("g2").edge_count() == 12);
    CHECK(named("g3").edge_count() == 13);
    CHECK(named("g4").edge_count() == 12);
    CHECK(named("g5").edge_count() == 12);
    CHECK(named("g6").edge_count() == 13);
    for (const auto& name : named_graph_list()) {
        Graph g = named(name);
        CHECK(g.n() >= 6);
        CHECK(g.min_degree() >= 2);
    }
    CHECK_THROWS_AS(named("no-such-graph"), std::invalid_argument);
}

TEST_CASE("odd girth by parity-labelled search") {
    CHECK(odd_girth(cycle(5)) == 5);
    CHECK(odd_girth(cycle(7)) == 7);
    CHECK(odd_girth(clique(4)) == 3);
    CHECK(odd_girth(named("petersen")) == 5);
    CHECK(odd_girth(named("grotzsch")) == 5);
    CHECK(odd_girth(add_universal(cycle(5), 2)) == 3);
    CHECK(!odd_girth(cycle(6)));
    CHECK(!odd_girth(clique(2)));
    CHECK(!odd_girth(Graph(3)));
    // odd cycle hidden in one component
    CHECK(odd_girth(disjoint_union(cycle(4), cycle(5))) == 5);
}

TEST_CASE("induced subgraphs relabel downwards") {
    Graph c5 = cycle(5);
    Graph path = induced(c5, VertexSet(0b00111));
    CHECK(path.n() == 3);
    CHECK(path.edge_count() == 2);
    CHECK(path.has_edge(0, 1));
    CHECK(path.has_edge(1, 2));

    Graph sub = induced(c5, VertexSet(0b11001));
    CHECK(sub.n() == 3);
    // kept vertices 0, 3, 4 become 0, 1, 2
    CHECK(sub.has_edge(1, 2));
    CHECK(sub.has_edge(2, 0));
    CHECK(!sub.has_edge(0, 1));

    CHECK_THROWS_AS(induced(c5, VertexSet(1 << 5)), std::invalid_argument);
}

TEST_CASE("graph6 encoding of small graphs") {
    CHECK(graph6_encode(clique(3)) == "Bw");
    CHECK(graph6_encode(Graph(0)) == "?");
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_encode(clique(2)) == "A_");

    for (const auto& name : named_graph_list()) {
        Graph g = named(name);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
    for (int n = 0; n <= 8; ++n) {
        CHECK(graph6_decode(graph6_encode(clique(n))) == clique(n));
        if (n >= 3) CHECK(graph6_decode(graph6_encode(cycle(n))) == cycle(n));
    }
}

TEST_CASE("graph6 decoding rejects malformed input") {
    CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("Bw "), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("B"), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("\x01w"), std::invalid_argument);
    // padding bits past the last pair must be zero ('{' sets one)
    CHECK_THROWS_AS(graph6_decode("B{"), std::invalid_argument);
}

TEST_CASE("edge list io round trip") {
    Graph g = named("g3");
    std::stringstream buf;
    write_edge_list(buf, g);
    CHECK(read_edge_list(buf) == g);

    std::stringstream bad1("3 1\n0 0\n");
    CHECK_THROWS_AS(read_edge_list(bad1), std::invalid_argument);
    std::stringstream bad2("3 1\n0 7\n");
    CHECK_THROWS_AS(read_edge_list(bad2), std::invalid_argument);
    std::stringstream bad3("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad3), std::invalid_argument);
    std::stringstream empty_ok("4 0\n");
    CHECK(read_edge_list(empty_ok) == Graph(4));
}

TEST_CASE("complement is an involution") {
    std::mt19937 rng(5150);
    for (const auto& name : named_graph_list()) {
        Graph g = named(name);
        CHECK(complement(complement(g)) == g);
    }
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(1 + trial % 9, rng);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("odd girth agrees with induced-cycle enumeration") {
    // the shortest closed odd walk always shrinks to an induced odd cycle,
    // so the walk-based value must equal the subset-enumeration value
    for (int n = 0; n <= 6; ++n) {
        int pairs = n * (n - 1) / 2;
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << pairs); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask & (std::uint32_t(1) << bit)) g.add_edge(u, v);
            CHECK(odd_girth(g) == brute_odd_girth(g));
        }
    }
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 2000; ++trial) {
        Graph g = random_graph(7 + trial % 2, rng);
        CHECK(odd_girth(g) == brute_odd_girth(g));
    }
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> size(0, 12);
    for (int trial = 0; trial < 10000; ++trial) {
        Graph g = random_graph(size(rng), rng);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}
