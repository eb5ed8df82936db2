#include <doctest.h>

#include <ppower/rational.hpp>

using namespace ppower;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(14, 2) == 91);
    CHECK(binomial(13, 1) == 13);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(7, -1) == 0);
    CHECK(binomial(52, 26) == Int("495918532948104"));

    // Pascal's rule on a grid.
    for (int n = 1; n <= 40; ++n)
        for (int r = 0; r <= n; ++r)
            CHECK(binomial(n, r) == binomial(n - 1, r - 1) + binomial(n - 1, r));
}

TEST_CASE("integer powers") {
    CHECK(int_pow(Int(3), 0) == 1);
    CHECK(int_pow(Int(3), 4) == 81);
    CHECK(int_pow(Int(2), 64) == Int("18446744073709551616"));
    CHECK(int_pow(Int(0), 3) == 0);
}

TEST_CASE("floor and ceiling of rationals") {
    CHECK(floor_rat(Rat(7, 2)) == 3);
    CHECK(floor_rat(Rat(-7, 2)) == -4);
    CHECK(floor_rat(Rat(6)) == 6);
    CHECK(ceil_rat(Rat(7, 2)) == 4);
    CHECK(ceil_rat(Rat(-7, 2)) == -3);
    CHECK(ceil_rat(Rat(6)) == 6);
    CHECK(floor_rat(Rat(729, 57)) == 12);
}

TEST_CASE("rational string round trip") {
    CHECK(rat_to_string(Rat(729, 57)) == "243/19");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_from_string("243/19") == Rat(243, 19));
    CHECK(rat_from_string("-7/2") == Rat(-7, 2));
    CHECK(rat_from_string("12") == Rat(12));
    for (int num = -20; num <= 20; ++num)
        for (int den = 1; den <= 9; ++den) {
            Rat r(num, den);
            CHECK(rat_from_string(rat_to_string(r)) == r);
        }
}
