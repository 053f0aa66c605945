#include <doctest.h>

#include <map>

#include "cubic/errors.hpp"
#include "cubic/formulas.hpp"
#include "cubic/generators.hpp"
#include "cubic/hc_count.hpp"

using cubic::BigInt;

TEST_CASE("fibonacci cache") {
    cubic::FibCache fib;
    CHECK(fib.fib(1) == 1);
    CHECK(fib.fib(2) == 1);
    CHECK(fib.fib(3) == 2);
    CHECK(fib.fib(4) == 3);
    CHECK(fib.fib(5) == 5);
    CHECK(fib.fib(6) == 8);
    CHECK(fib.fib(7) == 13);
    CHECK(fib.fib(10) == 55);
    CHECK(fib.fib(90) == BigInt("2880067194370816120"));
    CHECK_THROWS_AS(fib.fib(0), cubic::BadParameters);
}

TEST_CASE("special generalized-prism counts") {
    const std::map<int, BigInt> expect = {
        {10, 30}, {12, 34}, {14, 56}, {16, 108}, {18, 150}, {22, 418}, {32, 4412},
    };
    for (auto [m, v] : expect) CHECK(cubic::schwenk_count(m) == v);
    CHECK_THROWS_AS(cubic::schwenk_count(11), cubic::BadParameters);
    CHECK_THROWS_AS(cubic::schwenk_count(8), cubic::BadParameters);
}

TEST_CASE("special counts match enumeration") {
    for (int m : {10, 12, 14}) {
        cubic::Graph g = cubic::generalized_petersen(m, 2);
        CHECK(cubic::schwenk_count(m) == cubic::count_hamilton_cycles(g).total);
    }
}

TEST_CASE("rung-ladder counts") {
    CHECK(cubic::rl_count(2, 2) == 6);
    CHECK(cubic::rl_count(3, 3) == 20);
    CHECK(cubic::rl_count(5, 4) == 542);
    CHECK_THROWS_AS(cubic::rl_count(1, 3), cubic::BadParameters);
    CHECK_THROWS_AS(cubic::rl_count(3, 1), cubic::BadParameters);
    for (auto [m, k] : {std::pair{2, 3}, {3, 2}, {4, 2}, {2, 5}}) {
        cubic::Graph g = cubic::ring_of_ladders(m, k);
        CHECK(cubic::rl_count(m, k) == cubic::count_hamilton_cycles(g).total);
    }
}

TEST_CASE("width-5 tube counts") {
    CHECK(cubic::n5_count(1) == 30);
    CHECK(cubic::n5_count(2) == 20);
    CHECK(cubic::n5_count(3) == 280);
    CHECK(cubic::n5_count(4) == 80);
    CHECK(cubic::n5_count(5) == 3040);
    CHECK_THROWS_AS(cubic::n5_count(0), cubic::BadParameters);
    for (int k = 1; k <= 3; ++k) {
        cubic::Graph g = cubic::nanotube(5, k).graph;
        CHECK(cubic::n5_count(k) == cubic::count_hamilton_cycles(g).total);
    }
}

TEST_CASE("width-5 tubes overtake generalized prisms of equal order") {
    CHECK(cubic::n5_count(1) == cubic::schwenk_count(10));
    for (int t = 2; t <= 20; ++t) {
        // both graphs have 10t vertices
        CHECK(cubic::n5_count(2 * t - 1) > cubic::schwenk_count(10 * t));
    }
}
