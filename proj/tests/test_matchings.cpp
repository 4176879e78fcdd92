#include "doctest.h"

#include "dimerforge/matchings.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dimerforge;

TEST_CASE("perfect matchings of tiny graphs") {
    PlanarGraph sq = fixture::graph(fixture::square);
    auto all = enumerate_matchings(sq);
    CHECK(all.size() == 2);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& m : all) CHECK(is_perfect(sq, m));
    CHECK(enumerate_matchings(fixture::graph(fixture::path3)).empty());
    CHECK(count_matchings(fixture::graph(fixture::path3)) == 0);
    CHECK(enumerate_matchings(sq, 1).size() == 1);
}

TEST_CASE("weighted 4-cycle") {
    std::vector<Rational> w(4, 1);
    w[0] = Rational(1, 2);
    PlanarGraph sq = fixture::graph(fixture::square).with_weights(w);
    CHECK(count_matchings(sq) == Rational(3, 2));
    Rational total = 0;
    for (const auto& m : enumerate_matchings(sq)) total += matching_weight(sq, m);
    CHECK(total == Rational(3, 2));
}

TEST_CASE("grid counts against the frozen table and the brute force oracle") {
    for (const auto& [mn, expected] : oracle::grid_matchings) {
        auto [m, n] = mn;
        CHECK(kasteleyn_grid_count(m, n) == expected);
        if (m * n <= 9) {
            PlanarGraph g = grid_graph(2 * m, 2 * n);
            CHECK(count_matchings(g) == expected);
            CHECK(enumerate_matchings(g).size() == static_cast<std::size_t>(expected));
            CHECK(oracle::matching_sum(oracle::grid(2 * m, 2 * n)) == expected);
        }
    }
    CHECK(count_matchings(grid_graph(8, 8)) == 12988816);
}

TEST_CASE("weighted counts agree with the oracle") {
    PlanarGraph g = grid_graph(3, 4);
    oracle::SimpleGraph og = oracle::grid(3, 4);
    std::vector<Rational> w;
    for (std::size_t e = 0; e < g.edge_count(); ++e) w.push_back(Rational(static_cast<long>(e % 3 + 1), 2));
    og.weights = w;
    CHECK(count_matchings(g.with_weights(w)) == oracle::matching_sum(og));
}

TEST_CASE("squarish") {
    CHECK(squarish(36).kind == SquarishVerdict::Kind::Square);
    CHECK(squarish(36).witness == 6);
    CHECK(squarish(72).kind == SquarishVerdict::Kind::TwiceSquare);
    CHECK(squarish(72).witness == 6);
    CHECK(squarish(12).kind == SquarishVerdict::Kind::No);
    CHECK(squarish(2).kind == SquarishVerdict::Kind::TwiceSquare);
    CHECK(squarish(0).kind == SquarishVerdict::Kind::Square);
}

TEST_CASE("matching text round trip") {
    PlanarGraph g = grid_graph(2, 3);
    for (const auto& m : enumerate_matchings(g)) CHECK(parse_matching(g, format_matching(m)) == m);
    Matching bad = make_matching(g, {0});
    CHECK_FALSE(is_perfect(g, bad));
    CHECK_THROWS_AS(check_perfect(g, bad), Error);
}
