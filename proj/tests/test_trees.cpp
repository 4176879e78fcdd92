#include "doctest.h"

#include <cmath>
#include <map>

#include "dimerforge/trees.hpp"
#include "dimerforge/matchings.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dimerforge;

TEST_CASE("spanning tree counts") {
    PlanarGraph sq = fixture::graph(fixture::square);
    CHECK(count_spanning_trees(sq) == 4);
    CHECK(enumerate_spanning_trees(sq, 0).size() == 4);
    CHECK(count_spanning_trees(grid_graph(3, 3)) == oracle::grid3_spanning_trees);
    CHECK(enumerate_spanning_trees(grid_graph(3, 3), 4).size() == 192);
    PlanarGraph edge = load_graph("v 0 0 0\nv 1 1 0\ne 0 0 1\n");
    CHECK(count_spanning_trees(edge) == 1);
    CHECK(oracle::spanning_tree_sum(oracle::grid(3, 4)) == count_spanning_trees(grid_graph(3, 4)));
}

TEST_CASE("weighted 4-cycle tree count") {
    // The four trees drop one edge each; three of them keep the heavy edge.
    std::vector<Rational> w(4, 1);
    w[0] = 2;
    PlanarGraph sq = fixture::graph(fixture::square).with_weights(w);
    CHECK(count_spanning_trees(sq) == 7);
    Rational total = 0;
    for (const auto& t : enumerate_spanning_trees(sq, 0)) total += forest_weight(sq, t);
    CHECK(total == 7);
    oracle::SimpleGraph og{4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, w};
    CHECK(oracle::spanning_tree_sum(og) == 7);
}

TEST_CASE("determinant") {
    std::vector<std::vector<Rational>> m = {{2, 1}, {1, 2}};
    CHECK(determinant(m) == 3);
    m = {{0, 1}, {1, 0}};
    CHECK(determinant(m) == -1);
    m = {{1, 2}, {2, 4}};
    CHECK(determinant(m) == 0);
}

TEST_CASE("directed Matrix-Tree with restricted exits") {
    PlanarGraph g = grid_graph(3, 3);
    std::vector<std::vector<std::size_t>> none(9);
    CHECK(count_rooted_trees(g, 0, none) == 192);
    // The centre may only leave through its edge to vertex 1.
    std::vector<std::vector<std::size_t>> only(9);
    only[4] = {*g.edge_between(4, 1)};
    Rational filtered = 0;
    for (const auto& t : enumerate_spanning_trees(g, 0))
        if (t.parent_edge[4] == only[4][0]) filtered += 1;
    CHECK(count_rooted_trees(g, 0, only) == filtered);
}

TEST_CASE("rooted forests") {
    PlanarGraph g = grid_graph(2, 3);
    std::size_t forests = 0;
    for_each_rooted_forest(g, {0, 5}, [&](const RootedForest& f) {
        check_forest(g, f);
        ++forests;
        return true;
    });
    CHECK(forests > 0);
    PlanarGraph sq = fixture::graph(fixture::square);
    std::size_t two = 0;
    for_each_rooted_forest(sq, {0, 2}, [&](const RootedForest&) { return ++two, true; });
    CHECK(two == 4);
}

TEST_CASE("forest text round trip") {
    PlanarGraph g = grid_graph(3, 3);
    for (const auto& t : enumerate_spanning_trees(g, 0)) CHECK(parse_forest(g, format_forest(g, t)) == t);
    CHECK_THROWS_AS(parse_forest(g, "roots 0\n1>0:99\n"), Error);
}

TEST_CASE("rng streams are reproducible") {
    Rng a(7), b(7);
    for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
    Rng c(7);
    Rng child = c.split();
    Rng d(7);
    CHECK(child.next() != d.next());
    for (int i = 0; i < 1000; ++i) {
        double u = a.uniform();
        CHECK(u >= 0);
        CHECK(u < 1);
        CHECK(a.below(5) < 5);
    }
}

TEST_CASE("Wilson's algorithm on the 4-cycle") {
    PlanarGraph sq = fixture::graph(fixture::square);
    CHECK(ust_sample(sq, 0, 11) == ust_sample(sq, 0, 11));
    std::map<std::vector<std::size_t>, int> freq;
    Rng rng(2024);
    const int N = 4000;
    for (int i = 0; i < N; ++i) {
        RootedForest t = ust_sample(sq, 0, rng);
        check_forest(sq, t);
        ++freq[t.parent_edge];
    }
    CHECK(freq.size() == 4);
    const double sigma = std::sqrt(N * 0.25 * 0.75);
    for (const auto& [_, k] : freq) CHECK(std::abs(k - 1000.0) < 5 * sigma);
}

TEST_CASE("Wilson's algorithm follows edge weights") {
    std::vector<Rational> w(4, 1);
    w[0] = 2;
    PlanarGraph sq = fixture::graph(fixture::square).with_weights(w);
    std::map<std::vector<std::size_t>, int> freq;
    std::map<std::vector<std::size_t>, double> expect;
    for (const auto& t : enumerate_spanning_trees(sq, 0))
        expect[t.parent_edge] = forest_weight(sq, t).get_d() / 7.0;
    Rng rng(99);
    const int N = 7000;
    for (int i = 0; i < N; ++i) ++freq[ust_sample(sq, 0, rng).parent_edge];
    for (const auto& [key, p] : expect) {
        double sigma = std::sqrt(N * p * (1 - p));
        CHECK(std::abs(freq[key] - N * p) < 5 * sigma);
    }
}
