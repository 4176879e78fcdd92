#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dimerforge/planar_graph.hpp"

namespace dimerforge {

// H_G together with the bookkeeping that links every vertex and edge of H_G back to G.
struct Refinement {
    enum class Role { Original, EdgeMid, FaceCenter };
    enum class HalfKind { Frame, Dual };

    struct HalfEdge {
        HalfKind kind;
        std::size_t g_edge;
        std::size_t anchor;  // G vertex index for frame halves, face index for dual halves
    };

    PlanarGraph base;
    FaceDecomposition faces;
    PlanarGraph graph;

    std::vector<std::size_t> vertex_of;                   // G vertex -> H vertex
    std::vector<std::size_t> edge_vertex;                 // G edge -> H vertex
    std::vector<std::optional<std::size_t>> face_vertex;  // face -> H vertex, empty for the infinite face
    std::vector<std::pair<Role, std::size_t>> role;       // H vertex -> (role, G index)
    std::vector<HalfEdge> half;                           // H edge -> origin

    // Seen from edge-vertex mid, the H vertex across the same primal or dual edge from `from`.
    // Empty when that side is the infinite face.
    std::optional<std::size_t> opposite(std::size_t mid, std::size_t from) const;

    // H edge ids are 4*e + slot, slot 0/1 the frame halves at u/v and 2/3 the dual halves left/right.
    static Id half_edge_id(std::size_t g_edge, int slot) { return static_cast<Id>(4 * g_edge + slot); }
};

// dual_weights, when given, assigns a weight to each G edge's dual; boundary duals keep weight 1.
Refinement refine(const PlanarGraph& g, std::optional<FaceDecomposition> faces = {},
                  const std::vector<Rational>* dual_weights = nullptr);
PlanarGraph dual_refinement(const PlanarGraph& g);

struct MarkedBoundary {
    std::uint64_t host = 0;
    std::vector<std::size_t> v;        // G indices of v0 .. v_{2n}
    std::vector<std::size_t> m_edges;  // G edge index of {v_{j-1}, v_j} at position j-1
    int n = 0;
};

std::pair<PlanarGraph, MarkedBoundary> augment_with_leaves(const PlanarGraph& g0, const std::vector<Id>& path);

// Everything the constructions of Theorems 2.1 to 2.3 need, built once.
struct Section2Instance {
    PlanarGraph g0;
    PlanarGraph g;
    MarkedBoundary mb;
    Refinement ref;
    std::vector<std::size_t> m;  // H indices of m1 .. m_{2n}
    std::vector<char> ambient;   // H_G minus v0, v2, ..., v_{2n}
    std::vector<char> plus_mask;
    std::vector<char> minus_mask;
    PlanarGraph plus;
    PlanarGraph minus;

    int n() const { return mb.n; }
};

Section2Instance make_section2(const PlanarGraph& g0, const std::vector<Id>& path);

std::pair<PlanarGraph, PlanarGraph> build_plus_minus(const Section2Instance& inst);

// Mirror copy glued along m1..m_{2n}; the axis is y = 0.
PlanarGraph symmetrize(const Section2Instance& inst);

struct SmashedGraph {
    std::vector<std::size_t> removed;                           // G vertex indices smashed in
    std::vector<std::pair<std::size_t, std::size_t>> face_of;   // smashed G vertex -> H face-vertex
    std::vector<char> present;                                  // over H vertices
    PlanarGraph graph;

    std::size_t face_vertex_of(std::size_t g_vertex) const;
};

SmashedGraph smash_in(const Refinement& ref, const std::vector<std::size_t>& targets);

// Bounded face of G containing a degree two boundary vertex, or empty.
std::optional<std::size_t> bounded_face_at(const PlanarGraph& g, const FaceDecomposition& faces, std::size_t v);

struct Peak {
    int i = 0;
    int j = 0;
};

// Vertex (i,j) of the 2n x 2n grid sits at (i + j, j - i), so the diagonal is the x axis.
PlanarGraph trimmed_square(int n, const std::vector<Peak>& removals);
std::vector<Peak> available_peaks(int n, const std::vector<Peak>& removals);

}  // namespace dimerforge
