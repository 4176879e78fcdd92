#pragma once

#include <vector>

#include "dimerforge/bijections.hpp"

namespace dimerforge {

// Two boundary sequences v_1..v_{2n+1} and v'_1..v'_{2n+1} with the even ones smashed in.
struct TeaInstance {
    Refinement ref;
    int n = 0;
    std::vector<std::size_t> v;   // G indices
    std::vector<std::size_t> vp;  // G indices
    SmashedGraph hat;
    std::vector<std::size_t> s1;  // H indices of v_1, f_2, v_3, ..., v_{2n+1}
    std::vector<std::size_t> s2;  // H indices of v'_1, f'_2, ..., v'_{2n+1}
    std::vector<char> host1_mask;
    std::vector<char> host2_mask;
    PlanarGraph host1;  // hat minus s1
    PlanarGraph host2;  // hat minus s2
    bool path_condition = true;  // whether v_1..v_{2n+1} was required to be a path

    std::size_t size() const { return v.size(); }
};

// Throws ConditionViolated naming the first failed clause; clause (i) is skipped unless require_path.
TeaInstance make_tea_instance(const PlanarGraph& g, const std::vector<Id>& v, const std::vector<Id>& vp,
                              bool require_path = true, const std::vector<Rational>* dual_weights = nullptr);

// H vertex sequence from s1[i] to s2[i]; a G path for even i (0-based), a dual path otherwise.
using ConstraintPath = std::vector<std::size_t>;

// H edge ids of the perfect matching of P minus its end (side 2) or minus its start (side 1).
std::vector<Id> constraint_edges(const TeaInstance& inst, const ConstraintPath& p, int side);

// Whether mu, a perfect matching of host<side>, contains the constraint edges for every i in I (1-based).
bool satisfies_constraints(const TeaInstance& inst, const Matching& mu, int side, const std::vector<int>& I,
                           const std::vector<ConstraintPath>& P);

// The glide paths Q_1..Q_{2n+1} of mu on host<side>, each from s<side'> to s<side>.
std::vector<GlidePath> tea_paths(const TeaInstance& inst, const Matching& mu, int side);

// Moves mu from host<side> to the other host. P may be empty when I is empty.
Matching tea_transport(const TeaInstance& inst, const Matching& mu, const std::vector<int>& I,
                       const std::vector<ConstraintPath>& P, int side = 2);

// Constraint paths given by the glide paths of a matching of host2, used to build test families.
std::vector<ConstraintPath> paths_of(const TeaInstance& inst, const Matching& mu);

std::vector<int> parse_index_set(const std::string& text);

}  // namespace dimerforge
