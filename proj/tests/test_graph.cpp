#include <doctest.h>

#include <ppower/graph.hpp>

#include <random>
#include <sstream>

using namespace ppower;

namespace {

Graph random_graph(std::mt19937& rng, std::size_t n, double density) {
    Graph g(n);
    std::bernoulli_distribution coin(density);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("basic construction and adjacency") {
    Graph g(4);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 0);
    g.add_edge(0, 1);
    g.add_edge(2, 1);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(3, 3));
    CHECK(g.degree(1) == 2);
    CHECK(g.degree(3) == 0);
    // Adding an edge twice keeps the edge count stable.
    g.add_edge(1, 0);
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(g.add_edge(2, 2), GraphError);
    CHECK_THROWS_AS(g.add_edge(0, 4), GraphError);
    CHECK_THROWS_AS(Graph(0), GraphError);
}

TEST_CASE("named families") {
    Graph k5 = Graph::complete(5);
    CHECK(k5.edge_count() == 10);
    CHECK(k5.is_complete());
    CHECK(k5.regularity() == 4u);

    Graph c5 = Graph::cycle(5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5.regularity() == 2u);
    CHECK_FALSE(c5.is_complete());

    Graph p3 = Graph::path(3);
    CHECK(p3.edge_count() == 2);
    CHECK_FALSE(p3.regularity().has_value());

    Graph pet = Graph::petersen();
    CHECK(pet.vertex_count() == 10);
    CHECK(pet.edge_count() == 15);
    CHECK(pet.regularity() == 3u);
    // Petersen is triangle-free: an edge's endpoints share no neighbour.
    for (std::size_t u = 0; u < 10; ++u)
        for (std::size_t v = u + 1; v < 10; ++v)
            if (pet.adjacent(u, v))
                for (std::size_t w = 0; w < 10; ++w)
                    CHECK_FALSE((pet.adjacent(u, w) && pet.adjacent(v, w)));

    Graph e3 = Graph::edgeless(3);
    CHECK(e3.edge_count() == 0);
    CHECK(e3.regularity() == 0u);
    CHECK_FALSE(e3.has_edge());
    CHECK(p3.has_edge());
}

TEST_CASE("complement involution") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(rng, 1 + trial % 12, 0.4);
        Graph gc = g.complement();
        std::size_t n = g.vertex_count();
        CHECK(g.edge_count() + gc.edge_count() == n * (n - 1) / 2);
        CHECK(gc.complement() == g);
    }
    CHECK(Graph::complete(6).complement().edge_count() == 0);
    // Complement handles vertex counts around the 64-bit word boundary.
    for (std::size_t n : {63u, 64u, 65u, 130u}) {
        Graph g = random_graph(rng, n, 0.3);
        Graph gc = g.complement();
        CHECK(g.edge_count() + gc.edge_count() == n * (n - 1) / 2);
        CHECK(gc.complement() == g);
        for (std::size_t u = 0; u < n; ++u) CHECK_FALSE(gc.adjacent(u, u));
    }
}

TEST_CASE("induced subgraph and permutation") {
    Graph pet = Graph::petersen();
    Graph ring = pet.induced({0, 1, 2, 3, 4});
    CHECK(ring.vertex_count() == 5);
    CHECK(ring.edge_count() == 5);
    CHECK(ring.regularity() == 2u);

    CHECK_THROWS_AS(pet.induced({0, 10}), GraphError);
    CHECK_THROWS_AS(pet.induced({3, 3}), GraphError);

    std::mt19937 rng(21);
    Graph g = random_graph(rng, 9, 0.5);
    std::vector<std::size_t> perm{3, 1, 4, 0, 5, 8, 2, 7, 6};
    Graph h = g.permuted(perm);
    CHECK(h.edge_count() == g.edge_count());
    CHECK(h.degree_sequence_sorted() == g.degree_sequence_sorted());
    for (std::size_t u = 0; u < 9; ++u)
        for (std::size_t v = u + 1; v < 9; ++v)
            CHECK(g.adjacent(u, v) == h.adjacent(perm[u], perm[v]));
    CHECK_THROWS_AS(g.permuted({0, 1}), GraphError);
    CHECK_THROWS_AS(g.permuted({0, 0, 1, 2, 3, 4, 5, 6, 7}), GraphError);
}

TEST_CASE("text format round trip") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(rng, 1 + trial % 15, 0.5);
        std::ostringstream os;
        g.write_text(os);
        std::istringstream is(os.str());
        CHECK(Graph::read_text(is) == g);
    }
}

TEST_CASE("text format tolerates comments and blank lines") {
    std::istringstream is(
        "# a triangle\n"
        "\n"
        "3\n"
        "0 1\n"
        "   # interior comment\n"
        "1 2\n"
        "\n"
        "0 2\n");
    Graph g = Graph::read_text(is);
    CHECK(g.vertex_count() == 3);
    CHECK(g.is_complete());
}

TEST_CASE("text format rejects malformed input") {
    auto reject = [](const std::string& text) {
        std::istringstream is(text);
        CHECK_THROWS_AS(Graph::read_text(is), GraphError);
    };
    reject("");                    // no vertex count
    reject("# only a comment\n");  // no vertex count
    reject("0\n");                 // empty graph
    reject("3 9\n");               // trailing token after count
    reject("3\n0\n");              // endpoint missing
    reject("3\n0 1 2\n");          // trailing token on edge line
    reject("3\n0 3\n");            // endpoint out of range
    reject("3\n1 1\n");            // self-loop
    reject("3\n-1 2\n");           // negative vertex
    reject("-3\n");                // negative count
}
