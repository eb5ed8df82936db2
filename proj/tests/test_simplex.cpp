#include <doctest.h>

#include <ppower/simplex.hpp>

using namespace ppower;

TEST_CASE("two-variable LP with a known optimum") {
    // max 3x + 5y  s.t.  x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6).
    std::vector<std::vector<Rat>> a{{1, 0}, {0, 2}, {3, 2}};
    std::vector<Rat> b{4, 12, 18};
    std::vector<Rat> c{3, 5};
    auto sol = simplex_maximize(a, b, c);
    CHECK(sol.value == 36);
    CHECK(sol.x == std::vector<Rat>{2, 6});
}

TEST_CASE("fractional optimum stays exact") {
    // max x + y  s.t.  2x + y <= 2, x + 3y <= 3  ->  x = 3/5, y = 4/5.
    std::vector<std::vector<Rat>> a{{2, 1}, {1, 3}};
    std::vector<Rat> b{2, 3};
    std::vector<Rat> c{1, 1};
    auto sol = simplex_maximize(a, b, c);
    CHECK(sol.value == Rat(7, 5));
    CHECK(sol.x == std::vector<Rat>{Rat(3, 5), Rat(4, 5)});
}

TEST_CASE("degenerate constraints do not cycle") {
    // Beale's cycling example; Bland's rule must terminate at 1/20.
    std::vector<std::vector<Rat>> a{
        {Rat(1, 4), -60, Rat(-1, 25), 9},
        {Rat(1, 2), -90, Rat(-1, 50), 3},
        {0, 0, 1, 0},
    };
    std::vector<Rat> b{0, 0, 1};
    std::vector<Rat> c{Rat(3, 4), -150, Rat(1, 50), -6};
    auto sol = simplex_maximize(a, b, c);
    CHECK(sol.value == Rat(1, 20));
}

TEST_CASE("binding none of the constraints") {
    // max -x s.t. x <= 5: optimum 0 at the origin.
    auto sol = simplex_maximize({{1}}, {5}, {-1});
    CHECK(sol.value == 0);
    CHECK(sol.x == std::vector<Rat>{0});
}

TEST_CASE("unbounded and infeasible-basis inputs throw") {
    CHECK_THROWS_AS(simplex_maximize({{-1}}, {1}, {1}), SimplexError);
    CHECK_THROWS_AS(simplex_maximize({{1}}, {-1}, {1}), SimplexError);
    CHECK_THROWS_AS(simplex_maximize({{1, 2}}, {1}, {1}), SimplexError);  // ragged
}
