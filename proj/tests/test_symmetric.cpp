#include "doctest.h"

#include "dimerforge/checks.hpp"
#include "dimerforge/generators.hpp"
#include "dimerforge/matchings.hpp"
#include "dimerforge/symmetric.hpp"
#include "fixtures.hpp"

using namespace dimerforge;

TEST_CASE("diamond tree classes") {
    PlanarGraph d = fixture::graph(fixture::diamond);
    SymmetryCertificate cert = check_reflection_symmetry(d, 0);
    std::size_t right = *d.vertex_index(2);
    std::vector<std::size_t> E = {*d.edge_index(0)};
    check_tree_hypotheses(d, cert, right, E);
    CHECK(class_weight(d, cert, right, E, 0) == 2);
    CHECK(class_weight(d, cert, right, E, 1) == 2);
    CHECK(tree_class_weights_enumerated(d, cert, right, E) == tree_class_weights(d, cert, right, E));
    CHECK(tree_class_weights(d, cert, right, {}) == std::vector<WeightSum>{4});
}

TEST_CASE("diamond matching classes") {
    PlanarGraph d = fixture::graph(fixture::diamond);
    SymmetryCertificate cert = check_reflection_symmetry(d, 0);
    std::vector<std::size_t> E = {*d.edge_index(0)};
    check_matching_hypotheses(d, cert, E);
    CHECK(matching_class_weights(d, cert, E) == std::vector<WeightSum>{1, 1});
}

TEST_CASE("tree hypotheses") {
    PlanarGraph d = fixture::graph(fixture::diamond);
    SymmetryCertificate cert = check_reflection_symmetry(d, 0);
    std::size_t left = *d.vertex_index(0);
    CHECK_THROWS_AS(check_tree_hypotheses(d, cert, left, {*d.edge_index(0)}), Error);
    CHECK_THROWS_AS(check_tree_hypotheses(d, cert, *d.vertex_index(1), {}), Error);
}

TEST_CASE("independence on the diamond") {
    PlanarGraph d = fixture::graph(fixture::diamond);
    SymmetryCertificate cert = check_reflection_symmetry(d, 0);
    std::size_t right = *d.vertex_index(2);
    IndependenceReport r = independence_report(d, cert, right, IndependenceKind::Exit);
    CHECK(r.variables == std::vector<Id>{0});
    CHECK(r.cells == std::vector<WeightSum>{2, 2});
    CHECK(r.uniform);
    CHECK(r.pass());

    IndependenceReport s = independence_report(d, cert, right, IndependenceKind::Exit, 4000, 5);
    CHECK(s.sample_counts.size() == 2);
    CHECK(s.pass());
    CHECK(s.text() == independence_report(d, cert, right, IndependenceKind::Exit, 4000, 5).text());
}

TEST_CASE("independence with no variables") {
    PlanarGraph g = load_graph("v 0 0 0\nv 1 1 0\ne 0 0 1\n");
    SymmetryCertificate cert = check_reflection_symmetry(g, 0);
    IndependenceReport r = independence_report(g, cert, 0, IndependenceKind::Exit);
    CHECK(r.variables.empty());
    CHECK(r.pass());
}

TEST_CASE("chi-square against uniform") {
    double stat = 0;
    CHECK(uniform_chi_square({100, 100, 100, 100}, &stat) > 0.99);
    CHECK(stat == 0);
    CHECK(uniform_chi_square({400, 0, 0, 0}) < 1e-6);
}

TEST_CASE("generated symmetric instances") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        for (bool matchable : {false, true}) {
            Rng rng(seed);
            InstanceFile f = random_symmetric(rng, matchable);
            CheckOutcome out = check_symmetric(f);
            INFO(out.witness);
            CHECK(out.pass);
        }
    }
}

TEST_CASE("diagonal grid hv independence") {
    PlanarGraph g = diagonal_grid(3);
    SymmetryCertificate cert = check_reflection_symmetry(g, 0);
    IndependenceReport r = independence_report(g, cert, 0, IndependenceKind::HorizontalVertical);
    CHECK(r.variables.size() == 2);
    CHECK(r.uniform);
}
