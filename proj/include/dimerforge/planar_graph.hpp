#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dimerforge/errors.hpp"
#include "dimerforge/rational.hpp"

namespace dimerforge {

using Id = std::int64_t;

struct VertexTag {
    enum class Kind { Original, EdgeMid, FaceCenter, InfiniteAux };
    Kind kind = Kind::Original;
    Id source = -1;

    bool operator==(const VertexTag&) const = default;
};

struct Vertex {
    Id id = 0;
    Point pos;
    VertexTag tag;
};

struct Edge {
    Id id = 0;
    std::size_t u = 0;
    std::size_t v = 0;
    Rational weight = 1;
};

// Darts: 2e runs u -> v, 2e + 1 runs v -> u.
inline std::size_t dart_edge(std::size_t d) { return d >> 1; }
inline std::size_t reverse_dart(std::size_t d) { return d ^ 1u; }

class PlanarGraph {
public:
    PlanarGraph() = default;

    // Straight-line input: validates simplicity, distinct positions and the absence of crossings,
    // then derives the rotation system from exact angular order. Connectivity is not required here.
    static PlanarGraph from_coordinates(std::vector<Vertex> vertices, std::vector<Edge> edges);

    // Combinatorial input: rotation[v] lists the incident edge indices counterclockwise.
    static PlanarGraph from_rotation(std::vector<Vertex> vertices, std::vector<Edge> edges,
                                     std::vector<std::vector<std::size_t>> rotation);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
    const Edge& edge(std::size_t i) const { return edges_[i]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& rotation(std::size_t v) const { return rotation_[v]; }
    std::size_t degree(std::size_t v) const { return rotation_[v].size(); }

    std::size_t other(std::size_t e, std::size_t v) const {
        return edges_[e].u == v ? edges_[e].v : edges_[e].u;
    }
    std::size_t dart_tail(std::size_t d) const {
        return d & 1u ? edges_[d >> 1].v : edges_[d >> 1].u;
    }
    std::size_t dart_head(std::size_t d) const { return dart_tail(d ^ 1u); }
    std::size_t dart_from(std::size_t e, std::size_t tail) const {
        return edges_[e].u == tail ? 2 * e : 2 * e + 1;
    }
    // Position of the dart's edge inside the rotation at its tail.
    std::size_t rotation_position(std::size_t d) const { return rot_pos_[d]; }

    std::optional<std::size_t> vertex_index(Id id) const;
    std::optional<std::size_t> edge_index(Id id) const;
    std::optional<std::size_t> edge_between(std::size_t a, std::size_t b) const;

    bool connected() const;

    // Subgraph induced by keep[v] != 0. Vertex and edge ids survive, as does the cyclic order.
    PlanarGraph induced(const std::vector<char>& keep) const;

    PlanarGraph with_weights(const std::vector<Rational>& weights) const;

    // Stable hash of ids, endpoints and weights; used as the host identity of matchings and forests.
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    void finish();

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> rotation_;
    std::vector<std::size_t> rot_pos_;
    std::unordered_map<Id, std::size_t> vertex_by_id_;
    std::unordered_map<Id, std::size_t> edge_by_id_;
    std::unordered_map<std::uint64_t, std::size_t> edge_by_ends_;
    std::uint64_t fingerprint_ = 0;
};

struct FaceDecomposition {
    // Each face is its traversal as a cyclic dart sequence, face on the left of every dart.
    std::vector<std::vector<std::size_t>> faces;
    std::vector<std::size_t> face_of_dart;
    std::size_t infinite = 0;

    std::size_t face_count() const { return faces.size(); }
    std::size_t left_of(std::size_t d) const { return face_of_dart[d]; }
};

// Text format: "v <id> <x> <y>", "e <id> <u> <v> [w]", '#' comments.
PlanarGraph load_graph(std::string_view text);
PlanarGraph load_graph_file(const std::string& path);
std::string save_graph(const PlanarGraph& g);

// Requires a connected graph. The infinite face is the one of minimal signed area unless a dart on
// it is supplied, which derived graphs with cosmetic coordinates use.
FaceDecomposition trace_faces(const PlanarGraph& g, std::optional<std::size_t> outer_dart = {});

Rational signed_area(const PlanarGraph& g, const std::vector<std::size_t>& darts);

// Vertices of the dual are face indices; dual edge ids equal the primal edge ids they cross.
PlanarGraph planar_dual(const PlanarGraph& g, const FaceDecomposition& faces, bool include_infinite);
PlanarGraph planar_dual(const PlanarGraph& g, bool include_infinite);

// Infinite face boundary read counterclockwise around the graph (vertices; darts alongside).
struct BoundaryWalk {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> darts;  // darts[i] runs vertices[i] -> vertices[i+1 mod len]
};
BoundaryWalk boundary_walk_ccw(const PlanarGraph& g, const FaceDecomposition& faces);

struct BoundaryPath {
    std::vector<std::size_t> vertices;  // v1 .. v_{2n-1} as vertex indices
    int n = 0;
    // Orientation relative to the counterclockwise boundary walk, and the walk offset of v1.
    bool along_ccw = true;
    std::size_t walk_start = 0;
};

// check_degrees asks v_2, v_4, ... (1-based) to have degree two.
BoundaryPath validate_boundary_path(const PlanarGraph& g, const FaceDecomposition& faces,
                                    const std::vector<std::size_t>& path, bool check_degrees = true);
BoundaryPath validate_boundary_path(const PlanarGraph& g, const std::vector<Id>& path_ids);

struct SymmetryCertificate {
    Rational axis;                         // the line y = axis
    std::vector<std::size_t> vertex_image;
    std::vector<std::size_t> edge_image;
    std::vector<std::size_t> on_axis;      // sorted by x
};

SymmetryCertificate check_reflection_symmetry(const PlanarGraph& g, const Rational& axis);

std::vector<std::size_t> parse_id_list(const PlanarGraph& g, const std::vector<Id>& ids);

}  // namespace dimerforge
