#include "doctest.h"
#include "qga/dg.hpp"
#include "qga/io.hpp"
#include "test_support.hpp"

using namespace qga;

namespace {

RelationSubset J_linear5(const Algebra& a) {
    return relation_subset_from_names(
        a, {{"alpha", "beta"}, {"beta", "delta"}});
}

}  // namespace

TEST_CASE("resolution of the linear algebra at two junctions") {
    auto a = fixtures::linear5();
    auto J = J_linear5(a);
    CHECK(is_AJ_finite(a, J));
    auto dg = build_AJ(a, J, 64);
    CHECK_FALSE(dg.algebra.truncated);

    std::vector<std::string> names;
    for (const auto& ar : dg.algebra.quiver.arrows()) names.push_back(ar.name);
    CHECK(names == std::vector<std::string>{
                       "[alpha]", "[beta]", "[delta]", "[epsilon]",
                       "[alpha.beta]", "[beta.delta]", "[alpha.beta.delta]"});
    CHECK(dg.algebra.quiver.arrow(4).degree == -1);
    CHECK(dg.algebra.quiver.arrow(5).degree == -1);
    CHECK(dg.algebra.quiver.arrow(6).degree == -2);

    // Relations: everything ending in [delta] against [epsilon].
    CHECK(dg.algebra.relations ==
          std::vector<std::pair<int, int>>{{2, 3}, {5, 3}, {6, 3}});

    // d[alpha.beta.delta] = [alpha][beta.delta] - [alpha.beta][delta].
    const auto& d = dg.differential[6];
    REQUIRE(d.size() == 2);
    CHECK(d[0].monomial == std::vector<int>{0, 5});
    CHECK(d[0].coeff == Rational(1));
    CHECK(d[1].monomial == std::vector<int>{4, 2});
    CHECK(d[1].coeff == Rational(-1));

    // Single arrows have zero differential.
    for (int g = 0; g < 4; ++g) CHECK(dg.differential[g].empty());

    CHECK(check_differential(dg).ok);
    CHECK(check_homotopy(a, J, 8).ok);
}

TEST_CASE("resolution of the relation loop is infinite with [x^n] generators") {
    auto a = fixtures::dual_numbers();
    RelationSubset J = {{0, 0}};
    CHECK_FALSE(is_AJ_finite(a, J));
    auto dg = build_AJ(a, J, 6);
    CHECK(dg.algebra.truncated);
    CHECK(dg.algebra.truncation_bound == 6);
    REQUIRE(dg.algebra.quiver.num_arrows() == 6);
    for (int n = 1; n <= 6; ++n)
        CHECK(dg.algebra.quiver.arrow(n - 1).degree == 1 - n);
    // No junction relations: every consecutive pair lies in J.
    CHECK(dg.algebra.relations.empty());

    // d[x^n] = sum_i (-1)^{1-i} [x^i][x^{n-i}]  (|[x^i]| = 1-i with deg 0).
    const auto& d3 = dg.differential[2];
    REQUIRE(d3.size() == 2);
    CHECK(d3[0].monomial == std::vector<int>{0, 1});
    CHECK(d3[0].coeff == Rational(1));  // (-1)^{|[x]|} = (-1)^0
    CHECK(d3[1].monomial == std::vector<int>{1, 0});
    CHECK(d3[1].coeff == Rational(-1));

    CHECK(check_differential(dg).ok);
    CHECK(check_homotopy(a, J, 6).ok);
}

TEST_CASE("empty J gives the algebra itself with zero differential") {
    auto a = fixtures::linear5();
    auto dg = build_AJ(a, {}, 64);
    CHECK(dg.algebra.quiver.num_arrows() == a.quiver.num_arrows());
    CHECK(dg.algebra.relations.size() == a.relations.size());
    for (const auto& d : dg.differential) CHECK(d.empty());
    CHECK(check_differential(dg).ok);
    CHECK(check_homotopy(a, {}, 8).ok);
}

TEST_CASE("differential and homotopy hold on random gentle algebras") {
    std::mt19937 rng(33310);
    int tested = 0;
    for (int i = 0; i < 120 && tested < 40; ++i) {
        auto a = fixtures::random_gentle(rng);
        if (a.relations.empty()) continue;
        // Random subset of the relations.
        RelationSubset J;
        std::uniform_int_distribution<int> coin(0, 1);
        for (const auto& r : a.relations)
            if (coin(rng)) J.push_back(r);
        auto dg = build_AJ(a, J, 7);
        CAPTURE(serialize_algebra(a));
        CHECK(check_differential(dg).ok);
        CHECK(check_homotopy(a, J, 7).ok);
        ++tested;
    }
    CHECK(tested >= 40);
}

TEST_CASE("dg serialization carries the differential with rational coeffs") {
    auto a = fixtures::linear5();
    auto dg = build_AJ(a, J_linear5(a), 64);
    auto doc = dg_to_json(dg);
    REQUIRE(doc.contains("differential"));
    const auto& diff = doc["differential"];
    REQUIRE(diff.size() == 3);  // the three composite generators
    CHECK(diff[2]["generator"] == "[alpha.beta.delta]");
    CHECK(diff[2]["terms"][0]["path"] ==
          nlohmann::ordered_json::array({"[alpha]", "[beta.delta]"}));
    CHECK(diff[2]["terms"][0]["coeff"] == "1");
    CHECK(diff[2]["terms"][1]["coeff"] == "-1");
}
