#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cubic/errors.hpp"
#include "cubic/generators.hpp"
#include "cubic/graph.hpp"
#include "cubic/hc_count.hpp"
#include "cubic/io.hpp"

using cubic::Graph;
using cubic::SurveyOptions;
using cubic::SurveyRow;

namespace {

Graph k4() { return cubic::build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

Graph prism() {
    return cubic::build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph cube() {
    return cubic::build_graph(8, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3}, {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
}

Graph k33() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) e.push_back({i, j});
    return cubic::build_graph(6, e);
}

bool same_rows(const SurveyRow& a, const SurveyRow& b) {
    return a.n == b.n && a.graph_count == b.graph_count &&
           a.hamiltonian_count == b.hamiltonian_count && a.min_hc == b.min_hc &&
           a.max_hc == b.max_hc && a.argmax_id == b.argmax_id && a.timeouts == b.timeouts;
}

}  // namespace

TEST_CASE("planar code roundtrip") {
    std::vector<Graph> corpus = {k4(), prism(), cubic::fixture("base38"),
                                 cubic::build_graph(1, {})};
    std::stringstream ss;
    cubic::write_planar_code(corpus, ss);
    std::vector<Graph> back = cubic::read_planar_code(ss);
    REQUIRE(back.size() == corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(back[i].vertex_count() == corpus[i].vertex_count());
        CHECK(back[i].edges() == corpus[i].edges());
    }

    std::stringstream bare;
    cubic::write_planar_code({cube()}, bare, /*header=*/false);
    std::vector<Graph> cubes = cubic::read_planar_code(bare);
    REQUIRE(cubes.size() == 1);
    CHECK(cubes[0].edges() == cube().edges());
}

TEST_CASE("planar code exact bytes") {
    std::stringstream ss;
    cubic::write_planar_code({k4()}, ss);
    std::string s = ss.str();
    REQUIRE(s.size() == 15 + 17);
    CHECK(s.substr(0, 15) == ">>planar_code<<");
    const unsigned char body[] = {4, 2, 3, 4, 0, 1, 3, 4, 0, 1, 2, 4, 0, 1, 2, 3, 0};
    for (std::size_t i = 0; i < sizeof(body); ++i)
        CHECK(static_cast<unsigned char>(s[15 + i]) == body[i]);
}

TEST_CASE("planar code stream errors") {
    {
        std::stringstream ss(">>planar_cod3<<xxx");
        CHECK_THROWS_AS(cubic::read_planar_code(ss), cubic::BadHeader);
    }
    {
        std::stringstream ss(std::string("\x00\x01\x02", 3));  // two-byte size marker
        CHECK_THROWS_AS(cubic::read_planar_code(ss), cubic::UnsupportedSize);
    }
    {
        std::stringstream whole;
        cubic::write_planar_code({k4()}, whole);
        std::string chopped = whole.str();
        chopped.pop_back();
        std::stringstream ss(chopped);
        CHECK_THROWS_AS(cubic::read_planar_code(ss), cubic::TruncatedStream);
    }
    {
        std::stringstream ss(std::string("\x02\x02\x00\x00", 4));  // 0->1 claimed once
        CHECK_THROWS_AS(cubic::read_planar_code(ss), cubic::AsymmetricAdjacency);
    }
    {
        std::stringstream ss(std::string("\x02\x03\x00\x00", 4));  // neighbor 3 of 2
        CHECK_THROWS_AS(cubic::read_planar_code(ss), cubic::ParseError);
    }
    {
        std::stringstream ss("");
        CHECK(cubic::read_planar_code(ss).empty());
    }
}

TEST_CASE("planar code write limits") {
    std::vector<std::pair<int, int>> ring;
    for (int i = 0; i < 300; ++i) ring.push_back({i, (i + 1) % 300});
    Graph big = cubic::build_graph(300, ring);
    std::stringstream ss;
    CHECK_THROWS_AS(cubic::write_planar_code({big}, ss), cubic::UnsupportedSize);
    CHECK_THROWS_AS(cubic::write_planar_code({cubic::build_graph(0, {})}, ss),
                    cubic::UnsupportedSize);
}

TEST_CASE("edge list roundtrip and format") {
    std::stringstream ss;
    cubic::write_edge_list(k4(), ss);
    CHECK(ss.str() == "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    Graph back = cubic::read_edge_list(ss);
    CHECK(back.edges() == k4().edges());

    Graph b38 = cubic::fixture("base38");
    std::stringstream big;
    cubic::write_edge_list(b38, big);
    CHECK(cubic::read_edge_list(big).edges() == b38.edges());
}

TEST_CASE("edge list errors") {
    {
        std::stringstream ss("4 six\n");
        CHECK_THROWS_AS(cubic::read_edge_list(ss), cubic::ParseError);
    }
    {
        std::stringstream ss("4 3\n0 1\n1 2\n");
        CHECK_THROWS_AS(cubic::read_edge_list(ss), cubic::InconsistentCounts);
    }
    {
        std::stringstream ss("3 1\n0 5\n");
        CHECK_THROWS_AS(cubic::read_edge_list(ss), cubic::VertexOutOfRange);
    }
    {
        std::stringstream ss("2 1\n1 1\n");
        CHECK_THROWS_AS(cubic::read_edge_list(ss), cubic::LoopEdge);
    }
    {
        std::stringstream ss("-3 0\n");
        CHECK_THROWS_AS(cubic::read_edge_list(ss), cubic::ParseError);
    }
    CHECK_THROWS_AS(cubic::read_edge_list_file("/nonexistent_dir/missing.edges"),
                    cubic::ParseError);
}

TEST_CASE("survey aggregates per vertex count") {
    std::vector<Graph> corpus = {k4(), prism(), k33(), cube(),
                                 cubic::generalized_petersen(5, 2)};
    std::vector<SurveyRow> rows = cubic::survey(corpus);
    REQUIRE(rows.size() == 4);
    CHECK(same_rows(rows[0], SurveyRow{4, 1, 1, 3, 3, 0, 0}));
    CHECK(same_rows(rows[1], SurveyRow{6, 2, 2, 3, 6, 2, 0}));
    CHECK(same_rows(rows[2], SurveyRow{8, 1, 1, 6, 6, 3, 0}));
    // the generalized Petersen graph on 10 vertices has no Hamilton cycle
    CHECK(same_rows(rows[3], SurveyRow{10, 1, 0, 0, 0, -1, 0}));
}

TEST_CASE("survey argmax tie keeps the first index") {
    std::vector<SurveyRow> rows = cubic::survey({k4(), k4()});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].max_hc == 3);
    CHECK(rows[0].argmax_id == 0);
}

TEST_CASE("survey connectivity filter drops graphs entirely") {
    SurveyOptions opts;
    opts.cc_filter = 4;
    std::vector<SurveyRow> rows = cubic::survey({prism(), cube()}, opts);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].n == 8);
    CHECK(rows[0].graph_count == 1);
}

TEST_CASE("survey tallies per-graph timeouts instead of throwing") {
    SurveyOptions opts;
    opts.budget_seconds = 0.05;
    std::vector<SurveyRow> rows = cubic::survey({k4(), cubic::nanotube(6, 12).graph}, opts);
    REQUIRE(rows.size() == 2);
    CHECK(same_rows(rows[0], SurveyRow{4, 1, 1, 3, 3, 0, 0}));
    CHECK(rows[1].n == 156);
    CHECK(rows[1].graph_count == 1);
    CHECK(rows[1].hamiltonian_count == 0);
    CHECK(rows[1].timeouts == 1);
}

TEST_CASE("survey results do not depend on worker count") {
    std::vector<Graph> corpus = {k4(), prism(), k33(), cube(),
                                 cubic::generalized_petersen(5, 2),
                                 cubic::generalized_petersen(7, 2), k4()};
    SurveyOptions one;
    one.workers = 1;
    SurveyOptions many;
    many.workers = 5;
    std::vector<SurveyRow> a = cubic::survey(corpus, one);
    std::vector<SurveyRow> b = cubic::survey(corpus, many);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(same_rows(a[i], b[i]));
}

TEST_CASE("survey csv") {
    std::vector<SurveyRow> rows = cubic::survey({k4(), cubic::generalized_petersen(5, 2)});
    std::stringstream ss;
    cubic::write_survey_csv(rows, ss);
    CHECK(ss.str() ==
          "n,graphs,hamiltonian,min,max,argmax_id\n"
          "4,1,1,3,3,0\n"
          "10,1,0,,,\n");
    std::string table = cubic::survey_table(rows);
    CHECK(table.find("argmax_id") != std::string::npos);
    CHECK(table.find("timeouts") != std::string::npos);
    CHECK(table.find('-') != std::string::npos);
}
