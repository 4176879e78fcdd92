#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "dimerforge/forest.hpp"
#include "dimerforge/matchings.hpp"

namespace dimerforge {

// Spanning forests of g minus `skip` in which every component holds exactly one of `roots`.
// Edges are decided in index order, include before exclude.
void for_each_rooted_forest(const PlanarGraph& g, const std::vector<std::size_t>& roots,
                            const std::function<bool(const RootedForest&)>& visit,
                            const std::vector<char>* skip = nullptr);

std::vector<RootedForest> enumerate_spanning_trees(const PlanarGraph& g, std::size_t root);

// Exact determinant by fraction-free elimination over the rationals.
Rational determinant(std::vector<std::vector<Rational>> m);

WeightSum count_spanning_trees(const PlanarGraph& g);

// Trees oriented towards root where vertex v may only leave through edges listed in allowed[v];
// an empty list means any incident edge. Directed Matrix-Tree theorem.
WeightSum count_rooted_trees(const PlanarGraph& g, std::size_t root,
                             const std::vector<std::vector<std::size_t>>& allowed);

// splitmix64 seeding of a 64-bit Mersenne twister; split() derives independent child streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    std::uint64_t next() { return engine_(); }
    double uniform();  // [0, 1) with 53 random bits
    std::uint64_t below(std::uint64_t bound);
    Rng split();

    static std::uint64_t splitmix(std::uint64_t& state);

private:
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

// Wilson's algorithm with steps proportional to edge weights.
RootedForest ust_sample(const PlanarGraph& g, std::size_t root, std::uint64_t seed);
RootedForest ust_sample(const PlanarGraph& g, std::size_t root, Rng& rng);

}  // namespace dimerforge
