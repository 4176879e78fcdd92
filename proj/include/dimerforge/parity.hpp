#pragma once

#include <cstddef>
#include <vector>

#include "dimerforge/planar_graph.hpp"

namespace dimerforge {

// What a cycle C of G encloses, counted in G.
struct InteriorCount {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t faces = 0;
    std::size_t length = 0;

    // Vertices of H_G strictly inside C.
    std::size_t total() const { return vertices + edges + faces; }
    bool odd() const { return total() % 2 == 1; }
    // Euler's formula for the part of H_G on or inside C.
    bool euler_holds() const {
        long long v = static_cast<long long>(total() + 2 * length);
        long long e = static_cast<long long>(4 * edges + 3 * length);
        long long f = static_cast<long long>(2 * edges + length);
        return v - e + f == 1;
    }
};

// cycle lists vertex indices in order, without repeating the first. Throws NotACycle.
InteriorCount interior_vertex_count(const PlanarGraph& g, const std::vector<std::size_t>& cycle);

// Exact test on the straight-line drawing; points on the polygon count as outside.
bool strictly_inside(const std::vector<Point>& polygon, const Point& p);

// Every simple cycle once, starting at its smallest vertex. Stops after limit cycles.
std::vector<std::vector<std::size_t>> enumerate_simple_cycles(const PlanarGraph& g, std::size_t limit = 1000000);

}  // namespace dimerforge
