#pragma once

#include <vector>

#include "dimerforge/tea.hpp"

namespace dimerforge {

// Duals of the edges outside a forest, restricted to bounded faces.
struct DualForest {
    std::vector<std::size_t> edges;      // G edges whose duals make up the forest
    std::vector<std::size_t> component;  // face -> component, SIZE_MAX for the infinite face
    std::size_t components = 0;
};

// in_forest is indexed by G edges. Throws NotBanded when the duals close a cycle.
DualForest dual_forest(const PlanarGraph& g, const FaceDecomposition& faces, const std::vector<char>& in_forest);

struct BandedForestCertificate {
    enum class Kind { Channel, Bay };

    struct Component {
        Kind kind = Kind::Bay;
        std::vector<std::size_t> z_faces;              // faces next to the infinite face
        std::vector<std::vector<std::size_t>> z_edges;  // per z-face, the boundary edges outside the forest
        std::vector<int> arcs;                          // per z-face, the boundary arc crossed
    };

    std::vector<std::pair<std::size_t, std::size_t>> bands;  // (u_i, u'_i)
    std::vector<std::size_t> band_of;                         // G vertex -> band, SIZE_MAX outside
    DualForest dual;
    std::vector<Component> components;

    std::size_t channel_count() const;
};

std::vector<char> forest_edges(const PlanarGraph& g, const RootedForest& f);

// u and up list u_1..u_k and u'_1..u'_k, counterclockwise as u_1..u_k, u'_k..u'_1.
// Arc j of the boundary runs between consecutive points of that sequence.
BandedForestCertificate classify_components(const PlanarGraph& g, const FaceDecomposition& faces, const RootedForest& f,
                                            const std::vector<std::size_t>& u, const std::vector<std::size_t>& up,
                                            const std::vector<char>* skip = nullptr);

std::vector<char> smashed_mask(const TeaInstance& inst);

// Certificate of F under the rules of the instance: roots v'_odd, bands pairing v_{2i-1} with v'_{2i-1},
// channels pairing f_{2i} with f'_{2i}.
BandedForestCertificate certify_tec_forest(const TeaInstance& inst, const RootedForest& f);

Matching tec_forest_to_matching(const TeaInstance& inst, const RootedForest& f);
RootedForest tec_matching_to_forest(const TeaInstance& inst, const Matching& mu);

// Odd P_i (1-based) inside F, even P_i inside the dual forest.
bool forest_satisfies(const TeaInstance& inst, const RootedForest& f, const std::vector<int>& I,
                      const std::vector<ConstraintPath>& P);

// Edge weights of F times the dual weights of the dual forest.
Rational tec_forest_weight(const TeaInstance& inst, const RootedForest& f);

std::vector<RootedForest> enumerate_tec_forests(const TeaInstance& inst);

}  // namespace dimerforge
