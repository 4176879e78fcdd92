#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "dimerforge/tea.hpp"

namespace dimerforge {

enum class AztecVariant { T, Tprime };

AztecVariant parse_aztec_variant(const std::string& s);
std::string to_string(AztecVariant v);

using Cell = std::pair<int, int>;  // lower left corner (x, y)

// Half square of side 2n below a right- (T) or left-justified (Tprime) half Aztec diamond of order n-1.
std::vector<Cell> aztec_region(int n, AztecVariant variant);

struct AztecInstance {
    int n = 0;
    AztecVariant variant = AztecVariant::T;
    std::vector<Cell> cells;  // sorted; vertex i of dual is cells[i]
    PlanarGraph dual;
};

AztecInstance aztec_graph(int n, AztecVariant variant);

BigInt aztec_formula(int n);

// The lattice graph G and the marked vertices used to move tilings between the two regions.
struct AztecBijection {
    int n = 0;
    int m = 0;
    PlanarGraph g;
    TeaInstance tea;
    std::vector<int> I;
    std::vector<ConstraintPath> P;
    AztecInstance t;
    AztecInstance tp;
    std::array<int, 2> side{};                        // side[0]: host side of T, side[1]: of Tprime
    std::array<std::vector<std::size_t>, 2> cell_vertex;  // per region, cell -> H vertex
    std::array<std::vector<Id>, 2> forced;            // per region, H edges outside the region
};

PlanarGraph aztec_lattice_graph(int m);
AztecBijection make_aztec_bijection(int n);

Matching aztec_biject(const AztecBijection& b, const Matching& mu_t);
Matching aztec_biject_inverse(const AztecBijection& b, const Matching& mu_tp);

std::string tiling_svg(const AztecInstance& inst, const Matching& mu);

}  // namespace dimerforge
