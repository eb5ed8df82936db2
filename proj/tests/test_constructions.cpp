#include <doctest.h>

#include <ppower/constructions.hpp>
#include <ppower/power.hpp>
#include <ppower/search.hpp>

using namespace ppower;

namespace {

// All pairwise Hamming distances of a code, for small codes.
std::vector<unsigned> pairwise_distances(const Code& code) {
    std::vector<unsigned> out;
    for (std::size_t i = 0; i < code.words.size(); ++i)
        for (std::size_t j = i + 1; j < code.words.size(); ++j)
            out.push_back(hamming_distance(code.words[i], code.words[j]));
    return out;
}

}  // namespace

TEST_CASE("primality helper") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(11));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(4));
    CHECK_FALSE(is_prime(91));  // 7 * 13
}

TEST_CASE("diagonal sets") {
    auto diag = diagonal_set(3, 3);
    CHECK(diag.k == 3);
    CHECK(diag.p == 3);
    CHECK(diag.code.size() == 3);
    diag.code.validate();
    for (unsigned d : pairwise_distances(diag.code)) CHECK(d == 3);

    // The words are independent in the materialized power.
    Graph power = p_power(Graph::complete(3), {3, 3});
    TupleCodec codec(3, 3);
    std::vector<std::uint64_t> verts;
    for (const Word& w : diag.code.words) verts.push_back(codec.encode(w));
    CHECK(verify_independent(power, verts));

    auto single = diagonal_set(1, 2);
    CHECK(single.code.size() == 1);
    CHECK(single.code.words[0] == Word{0, 0});

    CHECK_THROWS_AS(diagonal_set(0, 2), InvalidInput);
    CHECK_THROWS_AS(diagonal_set(3, 0), InvalidInput);
}

TEST_CASE("affine line codes") {
    auto lines3 = affine_line_code(3);
    CHECK(lines3.k == 4);
    CHECK(lines3.p == 3);
    CHECK(lines3.code.q == 3);
    CHECK(lines3.code.size() == 9);
    lines3.code.validate();
    for (unsigned d : pairwise_distances(lines3.code)) CHECK(d == 3);
    // Slope-first layout: the line with a = 1, b = 0 reads (1, 0, 1, 2).
    bool found = false;
    for (const Word& w : lines3.code.words) found |= (w == Word{1, 0, 1, 2});
    CHECK(found);

    for (unsigned p : {2u, 5u, 7u}) {
        auto lines = affine_line_code(p);
        CHECK(lines.code.size() == p * p);
        CHECK(lines.code.k == p + 1);
        for (unsigned d : pairwise_distances(lines.code)) CHECK(d == p);
    }

    CHECK_THROWS_AS(affine_line_code(4), InvalidInput);
    CHECK_THROWS_AS(affine_line_code(1), InvalidInput);
}

TEST_CASE("hadamard-derived binary code") {
    auto had = hadamard_paley_code();
    CHECK(had.k == 12);
    CHECK(had.p == 3);
    CHECK(had.code.q == 2);
    CHECK(had.code.size() == 24);
    had.code.validate();
    for (unsigned d : pairwise_distances(had.code)) CHECK((d == 6 || d == 12));

    // Contains the all-zero row, its complement, and the documented
    // quadratic-character row of the order-12 Paley construction.
    auto contains = [&](const Word& w) {
        for (const Word& u : had.code.words)
            if (u == w) return true;
        return false;
    };
    CHECK(contains(Word(12, 0)));
    CHECK(contains(Word(12, 1)));
    CHECK(contains(Word{1, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0, 1}));
}

TEST_CASE("concatenation products") {
    auto lines = affine_line_code(3);
    auto prod = product_concat(lines, lines);
    CHECK(prod.code.size() == 81);
    CHECK(prod.k == 8);
    CHECK(prod.code.k == 8);
    prod.code.validate();
    for (unsigned d : pairwise_distances(prod.code)) {
        CHECK(d % 3 == 0);
        CHECK(d > 0);
    }

    ConstructionWitness singleton{Code{3, 2, {{0, 0}}}, 2, 3, "origin pair"};
    auto padded = product_concat(lines, singleton);
    CHECK(padded.code.size() == 9);
    CHECK(padded.k == 6);

    ConstructionWitness binary{Code{2, 3, {{0, 0, 0}}}, 3, 3, "binary"};
    CHECK_THROWS_AS(product_concat(lines, binary), InvalidInput);
    ConstructionWitness othermod{Code{3, 2, {{0, 0}}}, 2, 2, "mod 2"};
    CHECK_THROWS_AS(product_concat(lines, othermod), InvalidInput);
}

TEST_CASE("self-orthogonality reduction of the affine code") {
    auto red = self_orthogonal_reduction(affine_line_code(3).code);
    CHECK(red.k == 4);
    CHECK(red.class_sizes == std::array<std::size_t, 3>{9, 0, 0});
    CHECK(red.chosen_class == 0);
    CHECK(red.j_words.size() == 9);
    CHECK(red.self_orthogonal);
    CHECK(red.dimension == 2);
    CHECK(red.size_sq_cap == 9 * 81);
    CHECK(Int(red.j_words.size() * red.j_words.size()) <= red.size_sq_cap);

    // J contains the zero word (the class was translated by a member) and is
    // pairwise orthogonal under the standard GF(3) inner product.
    bool has_zero = false;
    for (const Word& w : red.j_words) has_zero |= (w == Word(4, 0));
    CHECK(has_zero);
    for (const Word& u : red.j_words)
        for (const Word& v : red.j_words) {
            unsigned dot = 0;
            for (unsigned c = 0; c < 4; ++c) dot += u[c] * v[c];
            CHECK(dot % 3 == 0);
        }
}

TEST_CASE("self-orthogonality reduction corner cases") {
    SelfOrthogonalReduction single =
        self_orthogonal_reduction(Code{3, 2, {{1, 2}}});
    CHECK(single.j_words == std::vector<Word>{{0, 0}});
    CHECK(single.dimension == 0);
    CHECK(single.self_orthogonal);

    // Ternary alphabet is required.
    CHECK_THROWS_AS(self_orthogonal_reduction(hadamard_paley_code().code), InvalidInput);
    // Pairwise distances must be divisible by 3.
    CHECK_THROWS_AS(self_orthogonal_reduction(Code{3, 2, {{0, 0}, {0, 1}}}), InvalidInput);
    // Empty codes are rejected.
    CHECK_THROWS_AS(self_orthogonal_reduction(Code{3, 2, {}}), InvalidInput);
}
