#include "doctest.h"

#include <set>

#include "dimerforge/banded.hpp"
#include "dimerforge/bijections.hpp"
#include "dimerforge/checks.hpp"
#include "dimerforge/generators.hpp"
#include "dimerforge/matchings.hpp"
#include "dimerforge/symmetric.hpp"
#include "dimerforge/tea.hpp"
#include "fixtures.hpp"

using namespace dimerforge;

namespace {

Section2Instance path_instance() { return make_section2(load_graph("v 0 0 0\n"), {0}); }
Section2Instance square_instance() { return make_section2(fixture::graph(fixture::square), {0, 1, 2}); }

}  // namespace

TEST_CASE("glide on the path instance") {
    Section2Instance s = path_instance();
    auto plus = enumerate_matchings(s.plus);
    REQUIRE(plus.size() == 1);
    auto mate = mate_in_refinement(s.ref, plus[0]);
    GlideSpace space{&s.ref, &s.ambient, &s.plus_mask, &mate};
    GlidePath p = glide(space, s.m[0], GlideMode::Frame);
    REQUIRE(p.vertices.size() == 3);
    CHECK(p.vertices[0] == s.m[0]);
    CHECK(p.vertices[1] == s.ref.vertex_of[s.mb.v[1]]);
    CHECK(p.vertices[2] == s.m[1]);

    PathFamily fam = build_path_family(s, plus[0]);
    REQUIRE(fam.paths.size() == 1);
    CHECK(fam.paths[0].generation == 1);
}

TEST_CASE("phi on the path instance") {
    Section2Instance s = path_instance();
    Matching mu = enumerate_matchings(s.plus)[0];
    Matching nu = phi(s, mu);
    CHECK(is_perfect(s.minus, nu));
    CHECK(nu != mu);
    CHECK(psi(s, nu) == mu);
    // {v1,m2} goes to {m1,v1}
    std::size_t v1 = s.ref.vertex_of[s.mb.v[1]];
    auto e = s.ref.graph.edge_between(s.m[0], v1);
    REQUIRE(e);
    CHECK(nu.edges == std::vector<Id>{s.ref.graph.edge(*e).id});
}

TEST_CASE("phi and psi on the 4-cycle instance") {
    Section2Instance s = square_instance();
    auto plus = enumerate_matchings(s.plus);
    auto minus = enumerate_matchings(s.minus);
    REQUIRE(plus.size() == 3);
    REQUIRE(minus.size() == 3);
    std::set<Matching> image;
    for (const Matching& mu : plus) {
        PathFamily fam = build_path_family(s, mu);
        CHECK(fam.paths.size() == 2);
        std::multiset<std::size_t> ends;
        for (const auto& p : fam.paths) {
            ends.insert(p.vertices.front());
            ends.insert(p.vertices.back());
        }
        CHECK(ends == std::multiset<std::size_t>(s.m.begin(), s.m.end()));
        Matching nu = phi(s, mu);
        CHECK(is_perfect(s.minus, nu));
        CHECK(psi(s, nu) == mu);
        // shifting twice along one family undoes the shift
        CHECK(shift_along(s.ref.graph, nu, fam, s.plus) == mu);
        image.insert(nu);
    }
    CHECK(image == std::set<Matching>(minus.begin(), minus.end()));
}

TEST_CASE("shift along an empty family") {
    Section2Instance s = square_instance();
    Matching mu = enumerate_matchings(s.plus)[0];
    CHECK(shift_along(s.ref.graph, mu, {}, s.plus) == mu);
}

TEST_CASE("Temperley on the 4-cycle") {
    PlanarGraph sq = fixture::graph(fixture::square);
    Refinement ref = refine(sq);
    TemperleyHost host = temperley_host(ref, 0);
    CHECK(host.graph.vertex_count() == 8);
    auto trees = enumerate_spanning_trees(sq, 0);
    std::set<Matching> hit;
    for (const auto& t : trees) {
        Matching mu = temperley_tree_to_matching(host, t);
        CHECK(is_perfect(host.graph, mu));
        CHECK(temperley_matching_to_tree(host, mu) == t);
        hit.insert(mu);
    }
    CHECK(hit.size() == 4);
    CHECK(enumerate_matchings(host.graph).size() == 4);
}

TEST_CASE("Temperley on a single edge") {
    PlanarGraph g = load_graph("v 0 0 0\nv 1 1 0\ne 0 0 1\n");
    Refinement ref = refine(g);
    TemperleyHost host = temperley_host(ref, 1);
    auto trees = enumerate_spanning_trees(g, 1);
    REQUIRE(trees.size() == 1);
    Matching mu = temperley_tree_to_matching(host, trees[0]);
    CHECK(mu.edges == std::vector<Id>{Refinement::half_edge_id(0, 0)});
}

TEST_CASE("Temperley keeps weights and a fixed oriented edge") {
    std::vector<Rational> w(4, 1);
    w[1] = 3;
    PlanarGraph sq = fixture::graph(fixture::square).with_weights(w);
    Refinement ref = refine(sq);
    TemperleyHost host = temperley_host(ref, 0);
    std::size_t with_edge = 0, with_half = 0;
    const Id tail_half = Refinement::half_edge_id(1, 0);  // edge 1 runs 1 -> 2, half at 1
    for (const auto& t : enumerate_spanning_trees(sq, 0)) {
        Matching mu = temperley_tree_to_matching(host, t);
        CHECK(matching_weight(host.graph, mu) == forest_weight(sq, t));
        with_edge += t.parent_edge[1] == 1;
    }
    for (const auto& mu : enumerate_matchings(host.graph))
        with_half += std::binary_search(mu.edges.begin(), mu.edges.end(), tail_half);
    CHECK(with_edge == with_half);
    CHECK(with_edge > 0);
}

TEST_CASE("Temperley on the 3x3 grid from every outer vertex") {
    CHECK(check_temperley(grid_graph(3, 3)).pass);
}

TEST_CASE("reflect_swap on the diamond") {
    PlanarGraph d = fixture::graph(fixture::diamond);
    SymmetryCertificate cert = check_reflection_symmetry(d, 0);
    AxisLabels lab = label_axis(d, cert);
    REQUIRE(lab.a.size() == 1);
    auto all = enumerate_matchings(d);
    REQUIRE(all.size() == 2);
    CHECK(reflect_swap(d, cert, all[0], lab.a[0]) == all[1]);
    CHECK(reflect_swap(d, cert, all[1], lab.a[0]) == all[0]);
}

TEST_CASE("tea transport on generated instances") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Rng rng(seed);
        InstanceFile f = random_tea(rng, false, 1);
        CheckOutcome out = check_tea(f);
        INFO(out.witness);
        CHECK(out.pass);
    }
}

TEST_CASE("tea with a single pair is Temperley") {
    PlanarGraph g = grid_graph(2, 3);
    TeaInstance inst = make_tea_instance(g, {0}, {2});
    CHECK(inst.n == 0);
    Rational trees = count_rooted_trees(g, 2, std::vector<std::vector<std::size_t>>(6));
    CHECK(count_matchings(inst.host1) == trees);
    CHECK(count_matchings(inst.host2) == trees);
    for (const Matching& mu : enumerate_matchings(inst.host2)) {
        Matching nu = tea_transport(inst, mu, {}, {}, 2);
        CHECK(is_perfect(inst.host1, nu));
        CHECK(tea_transport(inst, nu, {}, {}, 1) == mu);
    }
}

TEST_CASE("tec forests and matchings on generated instances") {
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        Rng rng(seed);
        InstanceFile f = random_tea(rng, true, 1);
        CheckOutcome out = check_tec(f);
        INFO(out.witness);
        CHECK(out.pass);
    }
}

TEST_CASE("single-band trees have only bays") {
    PlanarGraph g = grid_graph(3, 3);
    TeaInstance inst = make_tea_instance(g, {0}, {2}, false);
    auto forests = enumerate_tec_forests(inst);
    CHECK(forests.size() == 192);
    for (const auto& f : forests) {
        auto cert = certify_tec_forest(inst, f);
        CHECK(cert.channel_count() == 0);
        CHECK(tec_matching_to_forest(inst, tec_forest_to_matching(inst, f)) == f);
    }
}
