#pragma once

#include <cstdint>
#include <optional>

#include "dimerforge/instance.hpp"
#include "dimerforge/refinement.hpp"
#include "dimerforge/tea.hpp"
#include "dimerforge/trees.hpp"

namespace dimerforge {

struct PlaneGraphOptions {
    int min_cells = 1;
    int max_cells = 4;
    int grid = 3;
    double diagonal_probability = 0.2;
    double deletion_probability = 0.2;  // interior sides
    int subdivisions = 1;               // boundary sides split in two
    int pendants = 1;                   // leaves hung into the infinite face
    std::size_t max_vertices = 12;
    bool weighted = false;              // weights drawn from {1, 2, 3}
};

// Union of unit squares (side 2, so midpoints stay integral), then local edits.
PlanarGraph random_plane_graph(Rng& rng, const PlaneGraphOptions& opt = {});

// Boundary path instance accepted by make_section2, with at most max_h vertices in H_G.
InstanceFile random_section2(Rng& rng, std::size_t max_h = 30);

// Graph symmetric about y = 0 with a root on the axis and the infinite face, plus marked edges
// meeting the axis once each. matchable asks for perfect matchings and an even axis.
InstanceFile random_symmetric(Rng& rng, bool matchable, int max_cells = 4);

// Instance satisfying (i)-(iv) (tea) or (ii)-(iv) (tec) with n <= max_n, whose host2 has a perfect matching.
InstanceFile random_tea(Rng& rng, bool tec, int max_n = 1);

// Subgraph of the k x k grid symmetric about its diagonal, drawn with the diagonal as y = 0;
// the corner (0,0) is kept and serves as root.
InstanceFile random_diagonal_grid(Rng& rng, int k, double deletion_probability = 0.25);
PlanarGraph diagonal_grid(int k);

// A peak sequence for trimmed_square chosen uniformly step by step.
std::vector<Peak> random_peaks(Rng& rng, int n, int max_steps);

InstanceFile random_instance(const std::string& kind, std::uint64_t seed);

}  // namespace dimerforge
