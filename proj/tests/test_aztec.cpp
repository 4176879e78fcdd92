#include "doctest.h"

#include "dimerforge/aztec.hpp"
#include "dimerforge/checks.hpp"
#include "dimerforge/matchings.hpp"
#include "oracles.hpp"

using namespace dimerforge;

TEST_CASE("product formula") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(aztec_formula(n) == oracle::aztec_counts[n - 1]);
        CHECK(aztec_formula(n) == oracle::aztec_product(n));
    }
    for (int n = 6; n <= 12; ++n) CHECK(aztec_formula(n) == oracle::aztec_product(n));
    CHECK_THROWS_AS(aztec_formula(0), Error);
}

TEST_CASE("regions") {
    for (int n = 1; n <= 5; ++n)
        for (AztecVariant v : {AztecVariant::T, AztecVariant::Tprime}) {
            auto cells = aztec_region(n, v);
            CHECK(cells.size() % 2 == 0);
            CHECK(std::is_sorted(cells.begin(), cells.end()));
        }
    CHECK(parse_aztec_variant("T") == AztecVariant::T);
    CHECK(parse_aztec_variant(to_string(AztecVariant::Tprime)) == AztecVariant::Tprime);
    CHECK_THROWS_AS(parse_aztec_variant("X"), Error);
}

TEST_CASE("tiling counts") {
    for (AztecVariant v : {AztecVariant::T, AztecVariant::Tprime}) {
        CHECK(enumerate_matchings(aztec_graph(1, v).dual).size() == 1);
        CHECK(enumerate_matchings(aztec_graph(2, v).dual).size() == 4);
        CHECK(enumerate_matchings(aztec_graph(3, v).dual).size() == 60);
        CHECK(count_matchings(aztec_graph(4, v).dual) == 3328);
        CHECK(count_matchings(aztec_graph(5, v).dual) == 678912);
    }
}

TEST_CASE("bijection between T and T' tilings") {
    CheckOutcome out = check_aztec(5, 3);
    INFO(out.witness);
    CHECK(out.pass);

    AztecBijection b = make_aztec_bijection(1);
    auto t = enumerate_matchings(b.t.dual);
    auto tp = enumerate_matchings(b.tp.dual);
    REQUIRE(t.size() == 1);
    REQUIRE(tp.size() == 1);
    CHECK(aztec_biject(b, t[0]) == tp[0]);
}

TEST_CASE("svg output") {
    AztecInstance a = aztec_graph(2, AztecVariant::T);
    std::string svg = tiling_svg(a, enumerate_matchings(a.dual)[0]);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
}
