#pragma once

#include <optional>
#include <vector>

#include "dimerforge/forest.hpp"
#include "dimerforge/matchings.hpp"
#include "dimerforge/planar_graph.hpp"
#include "dimerforge/refinement.hpp"

namespace dimerforge {

enum class GlideMode { Frame, Dual };

struct GlidePath {
    std::vector<std::size_t> vertices;  // H_G vertex indices
    int generation = 0;
    GlideMode mode = GlideMode::Frame;
    bool blocked = false;  // stopped at an edge-vertex whose far side is missing from the ambient graph
};

struct PathFamily {
    std::vector<GlidePath> paths;
};

// The graph being glided in: `ambient` holds every vertex the walk may legitimately look at,
// `host` the vertices covered by the matching. mate[v] is the matched H edge index at v.
struct GlideSpace {
    const Refinement* ref = nullptr;
    const std::vector<char>* ambient = nullptr;
    const std::vector<char>* host = nullptr;
    const std::vector<std::size_t>* mate = nullptr;
};

// From an edge-vertex, the first step follows its unique ambient neighbour of the given mode.
// From an original or face vertex the walk starts with the matched edge.
GlidePath glide(const GlideSpace& space, std::size_t start, GlideMode mode);

// mate over H indices for a matching whose edges carry H edge ids.
std::vector<std::size_t> mate_in_refinement(const Refinement& ref, const Matching& mu);

Matching shift_along(const PlanarGraph& h, const Matching& mu, const PathFamily& paths, const PlanarGraph& result_host);

// plus_side: mu lives on G+ and the family is the one of phi; otherwise the mirrored one of psi.
PathFamily build_path_family(const Section2Instance& inst, const Matching& mu, bool plus_side = true);

Matching phi(const Section2Instance& inst, const Matching& mu);
Matching psi(const Section2Instance& inst, const Matching& mu);

// H_G minus a boundary vertex, the host of the Temperley correspondence.
struct TemperleyHost {
    const Refinement* ref = nullptr;
    std::size_t root = 0;  // G vertex index
    std::vector<char> mask;
    PlanarGraph graph;
};

TemperleyHost temperley_host(const Refinement& ref, std::size_t root);
Matching temperley_tree_to_matching(const TemperleyHost& host, const RootedForest& tree);
RootedForest temperley_matching_to_tree(const TemperleyHost& host, const Matching& mu);

// mate over vertex indices of g
std::vector<std::size_t> reflect_swap(const PlanarGraph& g, const SymmetryCertificate& cert,
                                      const std::vector<std::size_t>& mate, std::size_t a);
Matching reflect_swap(const PlanarGraph& g, const SymmetryCertificate& cert, const Matching& mu, std::size_t a);

}  // namespace dimerforge
