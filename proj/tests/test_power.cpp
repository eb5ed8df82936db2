#include <doctest.h>

#include <ppower/power.hpp>

#include <cstdlib>
#include <random>

using namespace ppower;

TEST_CASE("tuple codec round trip and ordering") {
    TupleCodec codec(3, 2);
    CHECK(codec.size() == 9);
    CHECK(codec.base() == 3);
    CHECK(codec.length() == 2);
    // Coordinate 1 is most significant, so indices run in lexicographic order.
    CHECK(codec.encode({0, 0}) == 0);
    CHECK(codec.encode({0, 1}) == 1);
    CHECK(codec.encode({1, 0}) == 3);
    CHECK(codec.encode({2, 2}) == 8);
    CHECK(codec.decode(5) == VertexTuple{1, 2});

    for (std::size_t n : {1u, 2u, 4u, 5u}) {
        for (unsigned k = 1; k <= 4; ++k) {
            TupleCodec c(n, k);
            std::uint64_t expect = 1;
            for (unsigned i = 0; i < k; ++i) expect *= n;
            CHECK(c.size() == expect);
            VertexTuple prev;
            for (std::uint64_t idx = 0; idx < c.size(); ++idx) {
                VertexTuple t = c.decode(idx);
                CHECK(c.encode(t) == idx);
                if (idx > 0) CHECK(prev < t);  // strictly increasing lex order
                prev = t;
            }
        }
    }

    CHECK_THROWS_AS(codec.encode({0, 3}), InvalidInput);
    CHECK_THROWS_AS(codec.encode({0}), InvalidInput);
    CHECK_THROWS_AS(codec.decode(9), InvalidInput);
    CHECK_THROWS_AS(TupleCodec(3, 0), InvalidInput);
}

TEST_CASE("adjacent coordinate count") {
    Graph p3 = Graph::path(3);  // edges 0-1, 1-2
    CHECK(adjacent_coordinate_count(p3, {0, 1, 2}, {1, 2, 0}) == 2);
    CHECK(adjacent_coordinate_count(p3, {0, 0}, {0, 0}) == 0);
    CHECK(adjacent_coordinate_count(p3, {0, 1}, {2, 1}) == 0);
    CHECK_THROWS_AS(adjacent_coordinate_count(p3, {0, 1}, {0}), InvalidInput);
    CHECK_THROWS_AS(adjacent_coordinate_count(p3, {3}, {0}), InvalidInput);
}

TEST_CASE("modular power of a small complete graph") {
    Graph k3 = Graph::complete(3);
    Graph power = p_power(k3, {2, 2});
    CHECK(power.vertex_count() == 9);
    // Degree n^k - sum_{j even} C(k,j) (n-d)^{k-j} d^j = 9 - 5 = 4.
    CHECK(power.regularity() == 4u);

    // Spot check against the adjacency predicate on every pair.
    TupleCodec codec(3, 2);
    for (std::uint64_t a = 0; a < 9; ++a)
        for (std::uint64_t b = 0; b < 9; ++b)
            CHECK(power.adjacent(a, b) ==
                  p_power_adjacent(k3, {2, 2}, codec.decode(a), codec.decode(b)));
}

TEST_CASE("parity power of an edge is a four-cycle") {
    Graph k2 = Graph::complete(2);
    Graph power = p_power(k2, {2, 2});
    CHECK(power.vertex_count() == 4);
    CHECK(power.edge_count() == 4);
    CHECK(power.regularity() == 2u);
    // 00-01-11-10-00: adjacency iff Hamming distance is odd.
    CHECK(power.adjacent(0, 1));
    CHECK(power.adjacent(1, 3));
    CHECK_FALSE(power.adjacent(0, 3));
}

TEST_CASE("identical tuples are never adjacent") {
    Graph k4 = Graph::complete(4);
    Graph power = p_power(k4, {2, 3});
    for (std::uint64_t v = 0; v < power.vertex_count(); ++v)
        CHECK_FALSE(power.adjacent(v, v));
}

TEST_CASE("strong power of a cycle") {
    Graph c5 = Graph::cycle(5);
    Graph sq = strong_power(c5, 2);
    CHECK(sq.vertex_count() == 25);
    // Strong product of 2-regular graphs: degree (2+1)^2 - 1 = 8.
    CHECK(sq.regularity() == 8u);

    TupleCodec codec(5, 2);
    for (std::uint64_t a = 0; a < 25; ++a)
        for (std::uint64_t b = a + 1; b < 25; ++b) {
            VertexTuple u = codec.decode(a), v = codec.decode(b);
            bool expect = true;
            for (int i = 0; i < 2; ++i)
                if (u[i] != v[i] && !c5.adjacent(u[i], v[i])) expect = false;
            CHECK(sq.adjacent(a, b) == expect);
        }
}

TEST_CASE("power parameter validation") {
    Graph k3 = Graph::complete(3);
    CHECK_THROWS_AS(p_power(k3, {0, 2}), InvalidInput);
    CHECK_THROWS_AS(p_power(k3, {2, 1}), InvalidInput);
    CHECK_THROWS_AS(p_power(k3, {2, 0}), InvalidInput);
    CHECK_THROWS_AS(strong_power(k3, 0), InvalidInput);
}

TEST_CASE("materialization cap") {
    CHECK(materialization_cap() == (std::uint64_t{1} << 20));
    // 3^13 = 1594323 > 2^20.
    CHECK_THROWS_AS(p_power(Graph::complete(3), {13, 3}), SizeError);

    setenv("PPOWER_MAX_VERTICES", "8", 1);
    CHECK(materialization_cap() == 8);
    CHECK_THROWS_AS(p_power(Graph::complete(3), {2, 2}), SizeError);
    CHECK(p_power(Graph::complete(2), {3, 2}).vertex_count() == 8);
    unsetenv("PPOWER_MAX_VERTICES");
    CHECK(p_power(Graph::complete(3), {2, 2}).vertex_count() == 9);
}

TEST_CASE("power adjacency is invariant under base relabeling") {
    std::mt19937 rng(5);
    Graph pet = Graph::petersen();
    std::vector<std::size_t> perm{7, 2, 9, 0, 4, 1, 8, 3, 6, 5};
    Graph pp = pet.permuted(perm);
    PowerParams params{2, 3};
    TupleCodec codec(10, 2);
    std::uniform_int_distribution<std::uint64_t> pick(0, codec.size() - 1);
    for (int trial = 0; trial < 500; ++trial) {
        VertexTuple u = codec.decode(pick(rng)), v = codec.decode(pick(rng));
        VertexTuple pu = u, pv = v;
        for (int i = 0; i < 2; ++i) {
            pu[i] = static_cast<unsigned>(perm[u[i]]);
            pv[i] = static_cast<unsigned>(perm[v[i]]);
        }
        CHECK(p_power_adjacent(pet, params, u, v) == p_power_adjacent(pp, params, pu, pv));
    }
}
