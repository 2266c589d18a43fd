#include <algorithm>

#include "doctest.h"
#include "qga/io.hpp"
#include "qga/paths.hpp"
#include "qga/quiver.hpp"
#include "test_support.hpp"

using namespace qga;

TEST_CASE("parse/serialize round-trip is the identity") {
    auto a = fixtures::linear5();
    auto text = serialize_algebra(a);
    auto b = parse_algebra_string(text);
    CHECK(serialize_algebra(b) == text);
    CHECK(b.quiver.num_vertices() == 5);
    CHECK(b.quiver.num_arrows() == 4);
    CHECK(b.relations == a.relations);
}

TEST_CASE("parse rejects malformed documents") {
    CHECK_THROWS_AS(parse_algebra_string("{"), InvalidAlgebraError);
    CHECK_THROWS_AS(parse_algebra_string(R"({"arrows": []})"),
                    InvalidAlgebraError);
    CHECK_THROWS_AS(
        parse_algebra_string(
            R"({"vertices": ["1"], "arrows": [], "relations": [["a","b"]]})"),
        InvalidAlgebraError);
    // Relation between non-composable arrows.
    CHECK_THROWS_AS(
        parse_algebra_string(
            R"({"vertices": ["1","2","3"],
                "arrows": [{"name":"a","source":"1","target":"2","degree":0},
                           {"name":"b","source":"1","target":"3","degree":0}],
                "relations": [["a","b"]]})"),
        InvalidAlgebraError);
}

TEST_CASE("gentleness: genus-1 algebra passes, any grading") {
    for (auto degs : {std::vector<int>{0, 0, 0}, std::vector<int>{1, 0, 1},
                      std::vector<int>{-2, 1, 2}}) {
        auto a = fixtures::a_n(1, degs);
        CHECK(validate_gentle(a).is_gentle);
    }
}

TEST_CASE("gentleness: three arrows out of one vertex violates V1") {
    Algebra a;
    a.quiver.add_vertex("c");
    for (int i = 0; i < 3; ++i) {
        a.quiver.add_vertex("t" + std::to_string(i));
        a.quiver.add_arrow("a" + std::to_string(i), "c",
                           "t" + std::to_string(i), 0);
    }
    auto rep = validate_gentle(a);
    CHECK_FALSE(rep.is_gentle);
    bool saw_v1 = false;
    for (const auto& v : rep.violations)
        if (v.condition == "V1") saw_v1 = true;
    CHECK(saw_v1);
}

TEST_CASE("gentleness: two parallel arrows composing nonzero with one arrow") {
    // 1 => 2 -> 3 with no relations: both parallels compose with c outside I.
    auto a = fixtures::from_json(
        R"({"vertices": ["1","2","3"],
            "arrows": [{"name":"a","source":"1","target":"2","degree":0},
                       {"name":"b","source":"1","target":"2","degree":0},
                       {"name":"c","source":"2","target":"3","degree":0}],
            "relations": []})");
    auto rep = validate_gentle(a);
    CHECK_FALSE(rep.is_gentle);
    bool saw = false;
    for (const auto& v : rep.violations)
        if (v.condition == "V4") saw = true;  // c has two nonzero precursors
    CHECK(saw);
}

namespace {

std::vector<std::string> path_strings(const Algebra& a,
                                      const std::vector<Path>& ps, int from,
                                      int to) {
    std::vector<std::string> out;
    for (const auto& p : ps)
        if (path_source(a, p) == from && path_target(a, p) == to)
            out.push_back(path_to_string(a, p));
    return out;
}

}  // namespace

TEST_CASE("critical paths of the genus-1 algebra from 1 to 2") {
    auto a = fixtures::a_n(1, {0, 0, 0});
    auto en = enumerate_paths(a, /*critical=*/true, 2 * a.quiver.num_arrows());
    CHECK(en.finite);
    auto got = path_strings(a, en.paths, 0, 1);
    CHECK(got == std::vector<std::string>{"a1", "c1", "a1.b1.c1"});
}

TEST_CASE("nonzero paths of the relation loop") {
    auto a = fixtures::dual_numbers();
    auto en = enumerate_paths(a, /*critical=*/false, 16);
    CHECK(en.finite);
    CHECK_FALSE(en.truncated);
    auto got = path_strings(a, en.paths, 0, 0);
    CHECK(got == std::vector<std::string>{"e_1", "x"});
}

TEST_CASE("free loop is infinite in nonzero mode, finite in critical mode") {
    auto a = fixtures::polynomial_loop();
    auto spec = spec_nonzero_paths(a);
    std::optional<Path> wit;
    CHECK(words_infinite(a, spec, &wit));
    REQUIRE(wit.has_value());
    CHECK(wit->arrows == std::vector<int>{0});
    CHECK_FALSE(words_infinite(a, spec_critical_paths(a)));

    auto en = enumerate_paths(a, /*critical=*/false, 5);
    CHECK_FALSE(en.finite);
    CHECK(en.truncated);
    CHECK(en.paths.size() == 6);  // idempotent + y, y^2, ..., y^5
}

TEST_CASE("length-then-declaration order of enumerated words") {
    auto a = fixtures::linear5();
    auto en = enumerate_paths(a, /*critical=*/true, 8);
    // After the 5 idempotents: 4 single arrows, then length-2 words.
    REQUIRE(en.paths.size() >= 9);
    CHECK(en.paths[5].length() == 1);
    CHECK(path_to_string(a, en.paths[5]) == "alpha");
    CHECK(path_to_string(a, en.paths[9]) == "alpha.beta");
}

TEST_CASE("random gentle generator always produces gentle algebras") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 300; ++i) {
        auto a = fixtures::random_gentle(rng);
        CAPTURE(serialize_algebra(a));
        CHECK(validate_gentle(a).is_gentle);
    }
}
