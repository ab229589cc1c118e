#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "likert/annotation_matrix.hpp"
#include "likert/errors.hpp"
#include "support/oracles.hpp"

using likert::AnnotationMatrix;
using likert::LoadOptions;
using likert::load_matrix;
using likert::serialize_matrix;

TEST_CASE("plain numeric csv loads and round-trips") {
    const std::string input = "1,1,2\n1,2,2";
    const AnnotationMatrix m = load_matrix(input, LoadOptions{3, false});
    CHECK(m.annotators() == 2);
    CHECK(m.datapoints() == 3);
    CHECK(m(0, 0) == 1);
    CHECK(m(0, 2) == 2);
    CHECK(m(1, 1) == 2);
    CHECK(m.annotator_ids()[0] == "a1");
    CHECK(m.datapoint_ids()[2] == "d3");

    CHECK(serialize_matrix(m, false) == "1,1,2\n1,2,2\n");
    const AnnotationMatrix again = load_matrix(serialize_matrix(m, true), LoadOptions{3, false});
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            CHECK(again(i, j) == m(i, j));
        }
    }
    CHECK(again.datapoint_ids() == m.datapoint_ids());
}

TEST_CASE("all-missing matrix loads; rejection is deferred downstream") {
    const AnnotationMatrix m = load_matrix("0,0\n0,0", LoadOptions{7, false});
    CHECK(m.annotators() == 2);
    CHECK(m.datapoints() == 2);
    const auto mask = m.missing_mask();
    for (const auto& row : mask) {
        for (bool missing : row) CHECK(missing);
    }
}

TEST_CASE("out-of-scale rating reports file coordinates") {
    try {
        load_matrix("1,8,2", LoadOptions{7, false});
        FAIL("expected ParseError");
    } catch (const likert::ParseError& e) {
        CHECK(e.row == 1);
        CHECK(e.col == 2);
        CHECK(std::string(e.what()).find("8") != std::string::npos);
    }
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(load_matrix("", LoadOptions{7, false}), likert::ParseError);
    CHECK_THROWS_AS(load_matrix("1,2\n1", LoadOptions{7, false}), likert::ParseError);      // ragged
    CHECK_THROWS_AS(load_matrix("1,x\n1,2", LoadOptions{7, false}), likert::ParseError);    // non-int
    CHECK_THROWS_AS(load_matrix("1,\n1,2", LoadOptions{7, false}), likert::ParseError);     // blank cell
    CHECK_THROWS_AS(load_matrix("1.5,2\n1,2", LoadOptions{7, false}), likert::ParseError);  // fraction
    CHECK_THROWS_AS(load_matrix("-1,2\n1,2", LoadOptions{7, false}), likert::ParseError);   // negative
    CHECK_THROWS_AS(load_matrix("1\n2", LoadOptions{7, false}), likert::ParseError);        // 1 column
    CHECK_THROWS_AS(load_matrix("1,2", LoadOptions{1, false}), likert::ValidationError);    // bad K
}

TEST_CASE("header and label auto-detection") {
    SUBCASE("header only") {
        const AnnotationMatrix m = load_matrix("d1,d2,d3\n1,2,3", LoadOptions{3, false});
        CHECK(m.annotators() == 1);
        CHECK(m.datapoint_ids() == std::vector<std::string>{"d1", "d2", "d3"});
        CHECK(m.annotator_ids() == std::vector<std::string>{"a1"});
    }
    SUBCASE("labels only") {
        const AnnotationMatrix m = load_matrix("alice,1,2\nbob,2,3", LoadOptions{3, false});
        CHECK(m.datapoints() == 2);
        CHECK(m.annotator_ids() == std::vector<std::string>{"alice", "bob"});
    }
    SUBCASE("both, empty corner") {
        const AnnotationMatrix m = load_matrix(",p1,p2\nalice,1,2\nbob,2,3", LoadOptions{3, false});
        CHECK(m.annotators() == 2);
        CHECK(m.datapoints() == 2);
        CHECK(m.datapoint_ids() == std::vector<std::string>{"p1", "p2"});
        CHECK(m.annotator_ids() == std::vector<std::string>{"alice", "bob"});
    }
    SUBCASE("crlf and trailing newline") {
        const AnnotationMatrix m = load_matrix("1,2\r\n2,3\r\n", LoadOptions{3, false});
        CHECK(m.annotators() == 2);
        CHECK(m(1, 1) == 3);
    }
    SUBCASE("duplicate labels rejected") {
        CHECK_THROWS_AS(load_matrix("x,1,2\nx,2,3", LoadOptions{3, false}),
                        likert::ValidationError);
    }
}

TEST_CASE("transpose load swaps orientation and labels") {
    // Stored datapoints x annotators: 3 datapoints, 2 annotators.
    const AnnotationMatrix m = load_matrix(",r1,r2\np1,1,1\np2,1,2\np3,2,2", LoadOptions{3, true});
    CHECK(m.annotators() == 2);
    CHECK(m.datapoints() == 3);
    CHECK(m.annotator_ids() == std::vector<std::string>{"r1", "r2"});
    CHECK(m.datapoint_ids() == std::vector<std::string>{"p1", "p2", "p3"});
    CHECK(m(0, 0) == 1);
    CHECK(m(1, 1) == 2);
    CHECK(m(1, 2) == 2);
}

TEST_CASE("column read-back") {
    const AnnotationMatrix m = load_matrix("1,1,2\n1,2,2", LoadOptions{3, false});
    CHECK(m.column(2) == std::vector<int>{2, 2});
    CHECK(m.column(0) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(m.column(3), std::out_of_range);
}

TEST_CASE("missing mask matches the zero pattern") {
    const AnnotationMatrix m = load_matrix("1,0\n2,3", LoadOptions{3, false});
    const auto mask = m.missing_mask();
    CHECK(mask[0][0] == false);
    CHECK(mask[0][1] == true);
    CHECK(mask[1][0] == false);
    CHECK(mask[1][1] == false);

    const AnnotationMatrix full = load_matrix("1,2\n2,3", LoadOptions{3, false});
    for (const auto& row : full.missing_mask()) {
        for (bool missing : row) CHECK_FALSE(missing);
    }
}

TEST_CASE("constructor enforces invariants") {
    CHECK_THROWS_AS(AnnotationMatrix({1, 2}, 2, 1, 7), likert::ValidationError);  // n < 2
    CHECK_THROWS_AS(AnnotationMatrix({1, 9}, 1, 2, 7), likert::ValidationError);  // above K
    CHECK_THROWS_AS(AnnotationMatrix({1, 2, 3}, 1, 2, 7), likert::ValidationError);
    CHECK_THROWS_AS(AnnotationMatrix({1, 2}, 1, 2, 7, {"x"}, {}), likert::ValidationError);
}

TEST_CASE("property: round-trip and mask on random matrices") {
    std::mt19937_64 rng(20240817);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t m = 1 + rng() % 8;
        const std::size_t n = 2 + rng() % 20;
        const int k = 2 + static_cast<int>(rng() % 8);
        const AnnotationMatrix mat = oracles::random_matrix(rng, m, n, k, 0.2);

        const AnnotationMatrix back = load_matrix(serialize_matrix(mat, true), LoadOptions{k, false});
        REQUIRE(back.annotators() == m);
        REQUIRE(back.datapoints() == n);
        const auto mask = mat.missing_mask();
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(back(i, j) == mat(i, j));
                CHECK(mask[i][j] == (mat(i, j) == 0));
            }
        }
    }
}
