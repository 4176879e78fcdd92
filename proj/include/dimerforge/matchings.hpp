#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dimerforge/planar_graph.hpp"

namespace dimerforge {

struct Matching {
    std::uint64_t host = 0;
    std::vector<Id> edges;  // sorted

    bool operator==(const Matching&) const = default;
    bool operator<(const Matching& o) const { return edges < o.edges; }
};

using WeightSum = Rational;

Matching make_matching(const PlanarGraph& host, std::vector<Id> edge_ids);

// Throws InvalidArgument unless m is a perfect matching of g.
void check_perfect(const PlanarGraph& g, const Matching& m);
bool is_perfect(const PlanarGraph& g, const Matching& m);

Rational matching_weight(const PlanarGraph& g, const Matching& m);

// mate[v] = index of the matched edge at v in g, or SIZE_MAX.
std::vector<std::size_t> mate_edges(const PlanarGraph& g, const Matching& m);

// Visits every perfect matching in an unspecified but deterministic order; return false to stop.
void for_each_matching(const PlanarGraph& g, const std::function<bool(const std::vector<std::size_t>&)>& visit);

// Sorted lexicographically by edge-id lists. A limit keeps the first k of that order.
std::vector<Matching> enumerate_matchings(const PlanarGraph& g, std::optional<std::size_t> limit = {});

WeightSum count_matchings(const PlanarGraph& g);

BigInt kasteleyn_grid_count(int m, int n);

struct SquarishVerdict {
    enum class Kind { Square, TwiceSquare, No };
    Kind kind = Kind::No;
    BigInt witness = 0;
};

SquarishVerdict squarish(const BigInt& n);
std::string describe(const SquarishVerdict& v);

// rows x cols grid with unit spacing, vertex id r*cols+c.
PlanarGraph grid_graph(int rows, int cols);

std::string format_matching(const Matching& m);
Matching parse_matching(const PlanarGraph& host, const std::string& line);

}  // namespace dimerforge
