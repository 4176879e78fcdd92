#include "doctest.h"

#include "dimerforge/matchings.hpp"
#include "dimerforge/planar_graph.hpp"
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

}  // namespace

TEST_CASE("rationals parse and print canonically") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK(format_rational(Rational(4, 2)) == "2");
    CHECK(format_rational(Rational(-1, 3)) == "-1/3");
    CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_rational("x"); }) == ErrorKind::ParseError);
}

TEST_CASE("loading counts vertices, edges and faces") {
    PlanarGraph sq = fixture::graph(fixture::square);
    CHECK(sq.vertex_count() == 4);
    CHECK(sq.edge_count() == 4);
    CHECK(trace_faces(sq).face_count() == 2);

    PlanarGraph p = fixture::graph(fixture::path3);
    CHECK(p.edge_count() == 2);
    CHECK(trace_faces(p).face_count() == 1);
}

TEST_CASE("crossing edges are rejected") {
    const char* text = "v 0 0 0\nv 1 1 1\nv 2 0 1\nv 3 1 0\ne 0 0 1\ne 1 2 3\n";
    CHECK(kind_of([&] { load_graph(text); }) == ErrorKind::EmbeddingError);
}

TEST_CASE("malformed input") {
    CHECK(kind_of([] { load_graph("v 0 0 0\nv 0 1 1\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { load_graph("v 0 0 0\nv 1 1 0\ne 0 0 1\ne 1 1 0\n"); }) == ErrorKind::NotSimple);
    CHECK(kind_of([] { load_graph("v 0 0 0\nv 1 1 0\nv 2 5 5\ne 0 0 1\n"); }) == ErrorKind::Disconnected);
    CHECK(kind_of([] { load_graph("v 0 0 0\nv 1 1 0\ne 0 0 7\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("save and load round trip") {
    PlanarGraph g = grid_graph(3, 3).with_weights(std::vector<Rational>(12, Rational(1, 2)));
    PlanarGraph back = load_graph(save_graph(g));
    CHECK(back.fingerprint() == g.fingerprint());
    CHECK(save_graph(back) == save_graph(g));
}

TEST_CASE("faces of the 3x3 grid") {
    PlanarGraph g = grid_graph(3, 3);
    FaceDecomposition f = trace_faces(g);
    CHECK(f.face_count() == 5);
    CHECK(f.faces[f.infinite].size() == 8);
    for (std::size_t i = 0; i < f.face_count(); ++i)
        if (i != f.infinite) CHECK(f.faces[i].size() == 4);
    // every dart sits in exactly one face
    std::size_t darts = 0;
    for (const auto& face : f.faces) darts += face.size();
    CHECK(darts == 2 * g.edge_count());
}

TEST_CASE("dual graphs") {
    PlanarGraph sq = fixture::graph(fixture::square);
    PlanarGraph d = planar_dual(sq, false);
    CHECK(d.vertex_count() == 1);
    CHECK(d.edge_count() == 0);
    CHECK(kind_of([&] { planar_dual(sq, true); }) == ErrorKind::DualNotSimple);

    PlanarGraph g3 = planar_dual(grid_graph(3, 3), false);
    CHECK(g3.vertex_count() == 4);
    CHECK(g3.edge_count() == 4);
    for (std::size_t v = 0; v < 4; ++v) CHECK(g3.degree(v) == 2);
}

TEST_CASE("boundary paths") {
    PlanarGraph sq = fixture::graph(fixture::square);
    BoundaryPath p = validate_boundary_path(sq, std::vector<Id>{0, 1, 2});
    CHECK(p.n == 2);
    CHECK(validate_boundary_path(sq, std::vector<Id>{0}).n == 1);

    PlanarGraph g = grid_graph(3, 3);
    CHECK(kind_of([&] { validate_boundary_path(g, std::vector<Id>{0, 1, 2}); }) == ErrorKind::BadDegree);
    CHECK(kind_of([&] { validate_boundary_path(g, std::vector<Id>{1, 4, 7}); }) == ErrorKind::NotOnInfiniteFace);
    CHECK(kind_of([&] { validate_boundary_path(sq, std::vector<Id>{0, 2, 1}); }) == ErrorKind::NotAPath);
    CHECK(kind_of([&] { validate_boundary_path(sq, std::vector<Id>{0, 1}); }) == ErrorKind::NotAPath);
}

TEST_CASE("reflection symmetry") {
    PlanarGraph d = fixture::graph(fixture::diamond);
    SymmetryCertificate c = check_reflection_symmetry(d, 0);
    CHECK(c.on_axis.size() == 2);
    CHECK(d.vertex(c.on_axis[0]).id == 0);
    CHECK(d.vertex(c.vertex_image[1]).id == 3);

    std::vector<Rational> w(4, 1);
    w[0] = 2;
    CHECK(kind_of([&] { check_reflection_symmetry(d.with_weights(w), 0); }) == ErrorKind::WeightMismatch);
    CHECK(kind_of([&] { check_reflection_symmetry(d, 1); }) == ErrorKind::NotSymmetric);
}

TEST_CASE("induced subgraphs keep ids and order") {
    PlanarGraph g = grid_graph(3, 3);
    std::vector<char> keep(9, 1);
    keep[4] = 0;
    PlanarGraph h = g.induced(keep);
    CHECK(h.vertex_count() == 8);
    CHECK(h.edge_count() == 8);
    CHECK(h.vertex_index(4) == std::nullopt);
    CHECK(h.edge_between(*h.vertex_index(0), *h.vertex_index(1)).has_value());
}
