#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dimerforge/forest.hpp"
#include "dimerforge/matchings.hpp"
#include "dimerforge/planar_graph.hpp"

namespace dimerforge {

// Axis vertices read left to right as a_1, b_1, a_2, b_2, ...
struct AxisLabels {
    std::vector<std::size_t> a;
    std::vector<std::size_t> b;
};

AxisLabels label_axis(const PlanarGraph& g, const SymmetryCertificate& cert);

// Subsets I of [s] are bit masks, bit i-1 standing for i.
using IndexMask = std::uint32_t;

// Each e_i meets exactly one a_j and the e_i are pairwise disjoint.
void check_matching_hypotheses(const PlanarGraph& g, const SymmetryCertificate& cert, const std::vector<std::size_t>& E);

// Total weight of the perfect matchings holding e_i for i in I and e'_i otherwise.
WeightSum matching_class_weight(const PlanarGraph& g, const SymmetryCertificate& cert, const std::vector<std::size_t>& E,
                                IndexMask I);
std::vector<WeightSum> matching_class_weights(const PlanarGraph& g, const SymmetryCertificate& cert,
                                              const std::vector<std::size_t>& E);

// v on the axis and the infinite face, each e_i with exactly one endpoint on the axis,
// the e_i pairwise disjoint and none at v.
void check_tree_hypotheses(const PlanarGraph& g, const SymmetryCertificate& cert, std::size_t v,
                           const std::vector<std::size_t>& E);

// Weight of the trees rooted at v leaving the axis endpoint of e_i through e_i (i in I) or e'_i.
WeightSum class_weight(const PlanarGraph& g, const SymmetryCertificate& cert, std::size_t v,
                       const std::vector<std::size_t>& E, IndexMask I);
std::vector<WeightSum> tree_class_weights(const PlanarGraph& g, const SymmetryCertificate& cert, std::size_t v,
                                          const std::vector<std::size_t>& E);
// Same numbers by running through every spanning tree.
std::vector<WeightSum> tree_class_weights_enumerated(const PlanarGraph& g, const SymmetryCertificate& cert, std::size_t v,
                                                     const std::vector<std::size_t>& E);

enum class IndependenceKind { Exit, HorizontalVertical };

IndependenceKind parse_independence_kind(const std::string& s);
std::string to_string(IndependenceKind k);

struct IndependenceReport {
    IndependenceKind kind = IndependenceKind::Exit;
    Id root = 0;
    std::vector<Id> variables;
    std::vector<WeightSum> cells;  // indexed by the bit mask of variables equal to 1
    WeightSum total = 0;
    std::string method;
    bool uniform = false;

    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint64_t> sample_counts;
    double chi_square = 0;
    double p_value = 1;
    bool sample_pass = true;

    bool pass() const { return uniform && sample_pass; }
    std::string text() const;
};

// The variables of a symmetric instance: on-axis vertices other than v, restricted for the exit kind
// to those without an edge along the axis. The horizontal kind expects a grid drawn with the diagonal
// as the axis, so horizontal grid steps are (1,-1) and vertical ones (1,1).
std::vector<std::size_t> independence_variables(const PlanarGraph& g, const SymmetryCertificate& cert, std::size_t v,
                                                IndependenceKind kind);

// Trees are enumerated when there are at most enumeration_limit of them, otherwise each cell comes
// from the directed Matrix-Tree theorem.
IndependenceReport independence_report(const PlanarGraph& g, const SymmetryCertificate& cert, std::size_t v,
                                       IndependenceKind kind, std::uint64_t samples = 0, std::uint64_t seed = 0,
                                       std::uint64_t enumeration_limit = 200000);

// Chi-square goodness of fit against the uniform distribution; returns the upper tail probability.
double uniform_chi_square(const std::vector<std::uint64_t>& counts, double* statistic = nullptr);

}  // namespace dimerforge
