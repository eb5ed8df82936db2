#include <doctest.h>

#include <ppower/constructions.hpp>
#include <ppower/delsarte.hpp>
#include <ppower/krawtchouk.hpp>
#include <ppower/power.hpp>

#include <random>

using namespace ppower;

namespace {

Code random_code(std::mt19937& rng, unsigned q, unsigned k, std::size_t target) {
    TupleCodec codec(q, k);
    std::uniform_int_distribution<std::uint64_t> pick(0, codec.size() - 1);
    std::set<std::uint64_t> chosen;
    while (chosen.size() < target && chosen.size() < codec.size())
        chosen.insert(pick(rng));
    Code code{q, k, {}};
    for (auto idx : chosen) code.words.push_back(codec.decode(idx));
    return code;
}

}  // namespace

TEST_CASE("distance distribution of the order-12 Hadamard code") {
    Code had = hadamard_paley_code().code;
    auto dist = distance_distribution(had);
    CHECK(dist.k == 12);
    REQUIRE(dist.b.size() == 13);
    for (unsigned d = 0; d <= 12; ++d) {
        Rat expect = 0;
        if (d == 0) expect = 1;
        if (d == 6) expect = 22;
        if (d == 12) expect = 1;
        CHECK(dist.b[d] == expect);
    }
}

TEST_CASE("distance distribution sums to the code size") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 30; ++trial) {
        unsigned q = 2 + trial % 3, k = 2 + trial % 6;
        Code code = random_code(rng, q, k, 3 + trial % 12);
        auto dist = distance_distribution(code);
        Rat total = 0;
        for (const Rat& b : dist.b) total += b;
        CHECK(dist.b[0] == 1);
        CHECK(total == Rat(static_cast<long>(code.size())));
    }
}

TEST_CASE("transform inequalities are nonnegative for genuine codes") {
    std::mt19937 rng(808);
    for (int trial = 0; trial < 30; ++trial) {
        unsigned q = 2 + trial % 4, k = 1 + trial % 8;
        Code code = random_code(rng, q, k, 2 + trial % 20);
        auto values = check_delsarte_inequalities(code);
        REQUIRE(values.size() == k + 1);
        CHECK(values[0] == Rat(static_cast<long>(code.size())));
        for (const Rat& v : values) CHECK(v >= 0);
    }
}

TEST_CASE("macwilliams transform identities") {
    std::mt19937 rng(111);
    for (int trial = 0; trial < 20; ++trial) {
        unsigned q = 2 + trial % 3, k = 1 + trial % 6;
        Code code = random_code(rng, q, k, 2 + trial % 10);
        auto dist = distance_distribution(code);
        Rat size(static_cast<long>(code.size()));
        auto dual = macwilliams(dist, q, size);
        REQUIRE(dual.size() == k + 1);
        CHECK(dual[0] == 1);
        Rat total = 0;
        for (const Rat& v : dual) {
            total += v;
            CHECK(v >= 0);  // Delsarte inequalities, normalized
        }
        CHECK(total == Rat(int_pow(Int(q), k)) / size);

        // The transform is an involution once the dual size is used.
        DistanceDistribution as_dist{k, dual};
        auto back = macwilliams(as_dist, q, total);
        for (unsigned d = 0; d <= k; ++d) CHECK(back[d] == dist.b[d]);
    }
}

TEST_CASE("built-in quartic-length certificate") {
    auto p4 = builtin_P(4);
    CHECK(p4.alpha[0] == 6);  // (2/3) 3^2
    CHECK(p4.allowed == std::set<unsigned>{3});
    CHECK(eval_certificate(p4, 3, 3) == 0);
    CHECK(eval_certificate(p4, 3, 0) == 54);
    CHECK(certificate_bound(p4, 3, 4) == 9);

    auto p8 = builtin_P(8);
    CHECK(certificate_bound(p8, 3, 8) == 81);
    for (unsigned d : p8.allowed) CHECK(eval_certificate(p8, 3, d) <= 0);

    CHECK_THROWS_AS(builtin_P(6), InvalidInput);
    CHECK_THROWS_AS(builtin_P(0), InvalidInput);
}

TEST_CASE("built-in certificate for k = 2 mod 4") {
    auto q6 = builtin_Q(6);
    CHECK(q6.alpha[0] == 19);  // (2/3) 27 + 1
    CHECK(q6.allowed == std::set<unsigned>{3, 6});
    CHECK(eval_certificate(q6, 3, 3) <= 0);
    CHECK(eval_certificate(q6, 3, 6) <= 0);
    Rat bound = certificate_bound(q6, 3, 6);
    CHECK(bound == Rat(729, 57));
    CHECK(floor_rat(bound) == 12);
    CHECK(bound < Rat(27, 2));

    CHECK_THROWS_AS(builtin_Q(4), InvalidInput);
}

TEST_CASE("certificate validation failures") {
    CertificatePolynomial flat{{Rat(1), Rat(0), Rat(0)}, {1}};
    // P(x) = K_0 = 1 > 0 at the allowed distance.
    CHECK_THROWS_AS(certificate_bound(flat, 2, 2), CertificateError);

    CertificatePolynomial negative{{Rat(1), Rat(-1), Rat(0)}, {1}};
    CHECK_THROWS_AS(certificate_bound(negative, 2, 2), CertificateError);

    CertificatePolynomial zero_head{{Rat(0), Rat(1), Rat(0)}, {1}};
    CHECK_THROWS_AS(certificate_bound(zero_head, 2, 2), CertificateError);

    CertificatePolynomial short_alpha{{Rat(1), Rat(1)}, {1}};
    CHECK_THROWS_AS(certificate_bound(short_alpha, 2, 2), CertificateError);

    CertificatePolynomial bad_allowed{{Rat(1), Rat(0), Rat(0)}, {5}};
    CHECK_THROWS_AS(certificate_bound(bad_allowed, 2, 2), CertificateError);
}

TEST_CASE("linear-programming bounds") {
    CHECK(lp_bound(3, 4, {3}) == 9);
    CHECK(lp_bound(3, 6, {3, 6}) == Rat(243, 19));
    CHECK(lp_bound(2, 12, {3, 6, 9, 12}) == 24);
    CHECK(lp_bound(2, 4, {}) == 1);
    CHECK_THROWS_AS(lp_bound(3, 4, {5}), InvalidInput);
    CHECK_THROWS_AS(lp_bound(3, 4, {0}), InvalidInput);
}

TEST_CASE("lp bound dominates explicit codes") {
    // The Hadamard code meets its LP bound with equality.
    Code had = hadamard_paley_code().code;
    CHECK(lp_bound(2, 12, {3, 6, 9, 12}) == Rat(static_cast<long>(had.size())));

    // And the affine-line code meets the quartic-length bound.
    Code lines = affine_line_code(3).code;
    CHECK(lp_bound(3, 4, {3}) == Rat(static_cast<long>(lines.size())));

    // Random divisible-distance codes never exceed the LP optimum.
    std::mt19937 rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        unsigned q = 2 + trial % 2, k = 4 + trial % 3, p = 2;
        TupleCodec codec(q, k);
        std::vector<std::uint64_t> all(codec.size());
        for (std::uint64_t i = 0; i < codec.size(); ++i) all[i] = i;
        std::shuffle(all.begin(), all.end(), rng);
        Code code{q, k, {codec.decode(all[0])}};
        for (std::uint64_t idx : all) {
            Word w = codec.decode(idx);
            bool ok = true;
            for (const Word& u : code.words)
                if (hamming_distance(u, w) % p != 0) {
                    ok = false;
                    break;
                }
            if (ok && w != code.words.front()) code.words.push_back(w);
        }
        std::set<unsigned> allowed;
        for (unsigned d = p; d <= k; d += p) allowed.insert(d);
        CHECK(Rat(static_cast<long>(code.size())) <= lp_bound(q, k, allowed));
    }
}

TEST_CASE("certificate JSON round trip") {
    auto q6 = builtin_Q(6);
    std::string text = certificate_to_json(q6);
    auto parsed = certificate_from_json(text);
    CHECK(parsed.alpha == q6.alpha);
    CHECK(parsed.allowed == q6.allowed);

    CHECK_THROWS_AS(certificate_from_json("{}"), CertificateError);
    CHECK_THROWS(certificate_from_json("not json"));
    CHECK_THROWS_AS(certificate_from_json("{\"alpha\": []}"), CertificateError);
}
