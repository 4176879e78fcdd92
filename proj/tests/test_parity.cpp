#include "doctest.h"

#include "dimerforge/checks.hpp"
#include "dimerforge/generators.hpp"
#include "dimerforge/matchings.hpp"
#include "dimerforge/parity.hpp"
#include "fixtures.hpp"

using namespace dimerforge;

TEST_CASE("interior of the 4-cycle") {
    PlanarGraph sq = fixture::graph(fixture::square);
    InteriorCount ic = interior_vertex_count(sq, {0, 1, 2, 3});
    CHECK(ic.vertices == 0);
    CHECK(ic.edges == 0);
    CHECK(ic.faces == 1);
    CHECK(ic.total() == 1);
    CHECK(ic.odd());
    CHECK(ic.euler_holds());
}

TEST_CASE("outer boundary of the 3x3 grid") {
    PlanarGraph g = grid_graph(3, 3);
    InteriorCount ic = interior_vertex_count(g, {0, 1, 2, 5, 8, 7, 6, 3});
    CHECK(ic.vertices == 1);
    CHECK(ic.edges == 4);
    CHECK(ic.faces == 4);
    CHECK(ic.total() == 9);
}

TEST_CASE("not a cycle") {
    PlanarGraph g = grid_graph(3, 3);
    CHECK_THROWS_AS(interior_vertex_count(g, {0, 1, 2}), Error);
    CHECK_THROWS_AS(interior_vertex_count(g, {0, 1, 4, 3, 0}), Error);
}

TEST_CASE("strict insideness") {
    std::vector<Point> sq = {{0, 0}, {2, 0}, {2, 2}, {0, 2}};
    CHECK(strictly_inside(sq, {1, 1}));
    CHECK_FALSE(strictly_inside(sq, {2, 1}));
    CHECK_FALSE(strictly_inside(sq, {3, 1}));
}

TEST_CASE("simple cycles") {
    CHECK(enumerate_simple_cycles(fixture::graph(fixture::square)).size() == 1);
    CHECK(enumerate_simple_cycles(grid_graph(3, 3)).size() == 13);
    CHECK(enumerate_simple_cycles(fixture::graph(fixture::path3)).empty());
}

TEST_CASE("every cycle is odd") {
    CHECK(check_parity(grid_graph(3, 4)).pass);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        PlanarGraph g = random_instance("plane", seed).graph;
        CheckOutcome out = check_parity(g);
        INFO(out.witness);
        CHECK(out.pass);
    }
}
