#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dimerforge/planar_graph.hpp"

namespace dimerforge {

// parent_edge[v] is the edge leaving v towards its root, SIZE_MAX at roots and at vertices outside the forest.
struct RootedForest {
    std::uint64_t host = 0;
    std::vector<std::size_t> roots;
    std::vector<std::size_t> parent_edge;

    bool operator==(const RootedForest&) const = default;
    bool operator<(const RootedForest& o) const { return parent_edge < o.parent_edge; }
};

// Throws InvalidArgument on a directed cycle or on a component without exactly one root.
void check_forest(const PlanarGraph& g, const RootedForest& f, const std::vector<char>* skip = nullptr);

Rational forest_weight(const PlanarGraph& g, const RootedForest& f);

// "child>parent:edge" triples in vertex order, using ids.
std::string format_forest(const PlanarGraph& g, const RootedForest& f);
// Reads the format above back; throws ParseError, then InvalidArgument via check_forest.
RootedForest parse_forest(const PlanarGraph& g, const std::string& text);

}  // namespace dimerforge
