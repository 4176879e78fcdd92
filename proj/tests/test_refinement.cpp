#include "doctest.h"

#include "dimerforge/matchings.hpp"
#include "dimerforge/refinement.hpp"
#include "fixtures.hpp"

using namespace dimerforge;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::InvalidArgument;
}

std::size_t count_role(const Refinement& r, Refinement::Role role) {
    std::size_t k = 0;
    for (const auto& [ro, _] : r.role) k += ro == role;
    return k;
}

}  // namespace

TEST_CASE("H_G of small graphs") {
    Refinement p = refine(fixture::graph(fixture::path3));
    CHECK(p.graph.vertex_count() == 5);
    CHECK(p.graph.edge_count() == 4);

    Refinement sq = refine(fixture::graph(fixture::square));
    CHECK(sq.graph.vertex_count() == 9);
    CHECK(sq.graph.edge_count() == 12);
    CHECK(count_role(sq, Refinement::Role::FaceCenter) == 1);
    CHECK(count_role(sq, Refinement::Role::EdgeMid) == 4);
    std::size_t centre = *sq.face_vertex[sq.faces.infinite == 0 ? 1 : 0];
    CHECK(sq.graph.degree(centre) == 4);
}

TEST_CASE("H_G has an odd vertex count and ids 4e+slot") {
    for (auto [r, c] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {3, 4}}) {
        PlanarGraph g = grid_graph(r, c);
        Refinement ref = refine(g);
        CHECK(ref.graph.vertex_count() % 2 == 1);
        for (std::size_t h = 0; h < ref.graph.edge_count(); ++h) {
            const auto& half = ref.half[h];
            Id id = ref.graph.edge(h).id;
            CHECK(static_cast<std::size_t>(id / 4) == half.g_edge);
            CHECK((id % 4 < 2) == (half.kind == Refinement::HalfKind::Frame));
        }
    }
}

TEST_CASE("dual weights move onto the dual halves") {
    PlanarGraph g = grid_graph(3, 3);
    std::vector<Rational> dw(g.edge_count(), 3);
    Refinement ref = refine(g, {}, &dw);
    for (std::size_t h = 0; h < ref.graph.edge_count(); ++h) {
        const auto& half = ref.half[h];
        if (half.kind == Refinement::HalfKind::Frame) CHECK(ref.graph.edge(h).weight == 1);
    }
    Rational heavy = 0;
    for (const auto& e : ref.graph.edges()) heavy += e.weight;
    CHECK(heavy > ref.graph.edge_count());
}

TEST_CASE("augmenting with leaves") {
    auto [g, mb] = augment_with_leaves(fixture::graph(fixture::square), {0, 1, 2});
    CHECK(g.vertex_count() == 6);
    CHECK(mb.n == 2);
    CHECK(mb.v.size() == 5);
    CHECK(g.degree(mb.v.front()) == 1);
    CHECK(g.degree(mb.v.back()) == 1);

    auto [p, pb] = augment_with_leaves(load_graph("v 0 0 0\n"), {0});
    CHECK(p.vertex_count() == 3);
    CHECK(p.edge_count() == 2);
    CHECK(pb.n == 1);

    CHECK(kind_of([] { augment_with_leaves(grid_graph(3, 3), {0, 1, 2}); }) == ErrorKind::BadDegree);
}

TEST_CASE("G+ and G- of the path instance") {
    Section2Instance s = make_section2(load_graph("v 0 0 0\n"), {0});
    CHECK(s.plus.vertex_count() == 2);
    CHECK(s.minus.vertex_count() == 2);
    CHECK(count_matchings(s.plus) == 1);
    CHECK(count_matchings(s.minus) == 1);
    PlanarGraph bar = symmetrize(s);
    CHECK(bar.vertex_count() == 4);
    CHECK(count_matchings(bar) == 2);
}

TEST_CASE("G+ and G- of the 4-cycle instance") {
    Section2Instance s = make_section2(fixture::graph(fixture::square), {0, 1, 2});
    CHECK(s.n() == 2);
    CHECK(s.ref.graph.vertex_count() == 13);
    CHECK(s.plus.vertex_count() == 8);
    CHECK(s.minus.vertex_count() == 8);
    CHECK(count_matchings(s.plus) == 3);
    CHECK(count_matchings(s.minus) == 3);

    PlanarGraph bar = symmetrize(s);
    SymmetryCertificate cert = check_reflection_symmetry(bar, 0);
    CHECK(cert.on_axis.size() == 4);
    Rational m = count_matchings(bar);
    CHECK(m == 36);
    CHECK(squarish(m.get_num()).kind == SquarishVerdict::Kind::Square);
}

TEST_CASE("smashing vertices into faces") {
    Refinement ref = refine(fixture::graph(fixture::square));
    SmashedGraph one = smash_in(ref, {0});
    CHECK(one.graph.vertex_count() == 6);
    CHECK(one.removed.size() == 1);

    SmashedGraph none = smash_in(ref, {});
    CHECK(none.graph.vertex_count() == ref.graph.vertex_count());
    CHECK(none.graph.edge_count() == ref.graph.edge_count());

    CHECK(kind_of([&] { smash_in(ref, {0, 1}); }) == ErrorKind::SharedFace);

    Refinement grid = refine(grid_graph(3, 3));
    CHECK(kind_of([&] { smash_in(grid, {1}); }) == ErrorKind::NotDegreeTwo);
}

TEST_CASE("trimmed squares") {
    CHECK(count_matchings(trimmed_square(1, {})) == 2);
    CHECK(count_matchings(trimmed_square(2, {})) == 36);
    CHECK(count_matchings(trimmed_square(3, {})) == 6728);

    auto peaks = available_peaks(2, {});
    REQUIRE(peaks.size() == 1);
    CHECK(peaks[0].i == 0);
    CHECK(peaks[0].j == 3);
    Rational m = count_matchings(trimmed_square(2, peaks));
    CHECK(squarish(m.get_num()).kind != SquarishVerdict::Kind::No);

    CHECK(kind_of([] { trimmed_square(2, {{3, 0}}); }) == ErrorKind::BelowDiagonal);
    CHECK(kind_of([] { trimmed_square(3, {{1, 5}}); }) == ErrorKind::NotAPeak);
}
