#include <doctest.h>

#include <cstdint>
#include <map>
#include <vector>

#include "cubic/errors.hpp"
#include "cubic/generators.hpp"
#include "cubic/graph.hpp"
#include "cubic/hc_count.hpp"
#include "oracles.hpp"

using cubic::build_graph;
using cubic::count_hamilton_cycles;
using cubic::Graph;

namespace {

Graph k4() { return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph k5() {
    return build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

Graph prism() {
    return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph cube() {
    return build_graph(8, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3},
                           {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
}

Graph k33() {
    return build_graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

Graph wheel5() {
    return build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
}

Graph cycle(int n) {
    std::vector<cubic::Edge> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return build_graph(n, e);
}

}  // namespace

TEST_CASE("known small counts") {
    CHECK(count_hamilton_cycles(cycle(3)).total == 1);
    CHECK(count_hamilton_cycles(cycle(5)).total == 1);
    CHECK(count_hamilton_cycles(k4()).total == 3);
    CHECK(count_hamilton_cycles(k5()).total == 12);
    CHECK(count_hamilton_cycles(prism()).total == 3);
    CHECK(count_hamilton_cycles(cube()).total == 6);
    CHECK(count_hamilton_cycles(cubic::generalized_petersen(5, 2)).total == 0);
    CHECK(count_hamilton_cycles(cubic::generalized_petersen(10, 2)).total == 30);
    CHECK(count_hamilton_cycles(cubic::fixture("base38")).total == 4);
}

// The permutation oracle fixes a start vertex and halves the directed total,
// which equals enumerating with full direction/start symmetry and dividing
// by 2n. Agreement here pins the undirected counting convention.
TEST_CASE("permutation oracle agreement for n <= 12") {
    std::vector<Graph> corpus = {
        cycle(4),
        k4(),
        cycle(5),
        k5(),
        prism(),
        k33(),
        wheel5(),
        cube(),
        cubic::ring_of_ladders(2, 2),
        cubic::generalized_petersen(5, 2),
        cubic::generalized_petersen(6, 2),
        cubic::ring_of_ladders(3, 2),
        cubic::nanotube(3, 1).graph,
    };
    for (const Graph& g : corpus) {
        REQUIRE(g.vertex_count() <= 12);
        CHECK(count_hamilton_cycles(g).total == oracle::count_hc_permutations(g));
    }
}

TEST_CASE("bitmask oracle agreement for n <= 18") {
    std::vector<Graph> corpus = {
        cubic::generalized_petersen(7, 2),
        cubic::ring_of_ladders(2, 4),
        cubic::nanotube(4, 1).graph,
        cubic::generalized_petersen(9, 2),
    };
    for (const Graph& g : corpus)
        CHECK(count_hamilton_cycles(g).total == oracle::count_hc_bitmask(g));
}

TEST_CASE("per-edge tallies") {
    cubic::CountOptions opts;
    SUBCASE("absent by default") {
        CHECK_FALSE(count_hamilton_cycles(k4()).per_edge.has_value());
    }
    SUBCASE("sum is n times the total and values are even on cubic graphs") {
        opts.per_edge = true;
        Graph g = cubic::generalized_petersen(10, 2);
        cubic::HamiltonCount res = count_hamilton_cycles(g, opts);
        REQUIRE(res.per_edge.has_value());
        CHECK(res.per_edge->size() == static_cast<std::size_t>(g.edge_count()));
        std::uint64_t sum = 0;
        for (const auto& [e, c] : *res.per_edge) {
            CHECK(g.has_edge(e.first, e.second));
            CHECK(c % 2 == 0);
            sum += c;
        }
        CHECK(sum == 20 * res.total);
    }
    SUBCASE("odd per-edge counts happen off the cubic world") {
        opts.per_edge = true;
        cubic::HamiltonCount res = count_hamilton_cycles(cycle(5), opts);
        REQUIRE(res.per_edge.has_value());
        for (const auto& [e, c] : *res.per_edge) CHECK(c == 1);
    }
}

TEST_CASE("is_hamiltonian") {
    CHECK(cubic::is_hamiltonian(k4()));
    CHECK_FALSE(cubic::is_hamiltonian(cubic::generalized_petersen(5, 2)));
    CHECK(cubic::is_hamiltonian(cubic::generalized_petersen(12, 2)));
    Graph g = cubic::fixture("base38");
    CHECK(cubic::is_hamiltonian(g));
    // Dropping the extendable 4-cycle's opposite edge pair kills every
    // Hamilton cycle; that is exactly what makes the extension count-safe.
    CHECK_FALSE(cubic::is_hamiltonian(cubic::remove_edges(g, {{32, 35}, {33, 34}})));
}

TEST_CASE("counting preconditions") {
    CHECK_THROWS_AS(count_hamilton_cycles(build_graph(2, {{0, 1}})), cubic::BadParameters);
    Graph two = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_THROWS_AS(count_hamilton_cycles(two), cubic::Disconnected);
    CHECK_THROWS_AS(cubic::is_hamiltonian(two), cubic::Disconnected);
}

TEST_CASE("budget exhaustion raises Timeout") {
    cubic::CountOptions opts;
    opts.budget_seconds = 0.02;
    CHECK_THROWS_AS(count_hamilton_cycles(cubic::nanotube(6, 14).graph, opts), cubic::Timeout);
    CHECK_THROWS_AS(cubic::count_by_crossing_type(cubic::nanotube(6, 14), 0.02), cubic::Timeout);
}

TEST_CASE("count_by_crossing_type buckets") {
    using Buckets = std::map<int, std::uint64_t>;
    CHECK(cubic::count_by_crossing_type(cubic::nanotube(5, 2)) == Buckets{{2, 20}});
    CHECK(cubic::count_by_crossing_type(cubic::nanotube(5, 3)) == Buckets{{2, 40}, {4, 240}});

    cubic::LayeredGraph lg = cubic::nanotube(6, 4);
    Buckets b = cubic::count_by_crossing_type(lg);
    CHECK(b.at(4) == 1104);
    std::uint64_t sum = 0;
    for (auto [crossings, cnt] : b) {
        CHECK(crossings % 2 == 0);
        CHECK(crossings >= 2);
        sum += cnt;
    }
    CHECK(sum == 1232);
    CHECK(sum == count_hamilton_cycles(lg.graph).total);

    for (auto [w, k] : {std::pair{4, 1}, {4, 2}, {3, 2}}) {
        cubic::LayeredGraph t = cubic::nanotube(w, k);
        Buckets bt = cubic::count_by_crossing_type(t);
        std::uint64_t s = 0;
        for (auto [crossings, cnt] : bt) {
            CHECK(crossings % 2 == 0);
            s += cnt;
        }
        CHECK(s == count_hamilton_cycles(t.graph).total);
    }
}
