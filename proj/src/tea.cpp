#include "dimerforge/tea.hpp"

#include <algorithm>
#include <sstream>

namespace dimerforge {

namespace {

[[noreturn]] void violated(const std::string& clause, const std::string& what) {
    throw Error(ErrorKind::ConditionViolated, "(" + clause + ") " + what);
}

void check_paths_shape(const TeaInstance& inst, const std::vector<int>& I, const std::vector<ConstraintPath>& P) {
    for (int i : I) {
        if (i < 1 || i > static_cast<int>(inst.size()))
            throw Error(ErrorKind::InvalidArgument, "index " + std::to_string(i) + " outside [2n+1]");
        if (static_cast<std::size_t>(i) > P.size() || P[i - 1].empty())
            throw Error(ErrorKind::InvalidArgument, "no constraint path for index " + std::to_string(i));
        const ConstraintPath& p = P[i - 1];
        if (p.front() != inst.s1[i - 1] || p.back() != inst.s2[i - 1])
            throw Error(ErrorKind::InvalidArgument, "constraint path " + std::to_string(i) + " has the wrong ends");
    }
}

}  // namespace

std::vector<int> parse_index_set(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            int k = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(k);
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidArgument, "bad index '" + item + "'");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

TeaInstance make_tea_instance(const PlanarGraph& g, const std::vector<Id>& v_ids, const std::vector<Id>& vp_ids,
                              bool require_path, const std::vector<Rational>* dual_weights) {
    if (v_ids.size() != vp_ids.size() || v_ids.size() % 2 == 0)
        throw Error(ErrorKind::InvalidArgument, "need two lists of equal odd length");
    TeaInstance inst;
    inst.path_condition = require_path;
    inst.n = static_cast<int>(v_ids.size() / 2);
    inst.v = parse_id_list(g, v_ids);
    inst.vp = parse_id_list(g, vp_ids);
    FaceDecomposition faces = trace_faces(g);
    const std::size_t len = inst.v.size();

    auto is_path = [&](const std::vector<std::size_t>& seq) {
        for (std::size_t i = 1; i < seq.size(); ++i)
            if (!g.edge_between(seq[i - 1], seq[i])) return false;
        return true;
    };
    if (require_path && !is_path(inst.v)) violated("i", "v_1 .. v_2n+1 is not a path");
    if (!is_path(inst.vp)) violated("ii", "v'_1 .. v'_2n+1 is not a path");

    BoundaryWalk walk = boundary_walk_ccw(g, faces);
    std::vector<std::size_t> first(g.vertex_count(), SIZE_MAX);
    for (std::size_t k = 0; k < walk.vertices.size(); ++k)
        if (first[walk.vertices[k]] == SIZE_MAX) first[walk.vertices[k]] = k;
    std::vector<std::size_t> order(inst.v.begin(), inst.v.end());
    order.insert(order.end(), inst.vp.rbegin(), inst.vp.rend());
    {
        std::vector<std::size_t> sorted = order;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) violated("iii", "vertices repeat");
        for (std::size_t x : order)
            if (first[x] == SIZE_MAX) violated("iii", "vertex " + std::to_string(g.vertex(x).id) + " is off the infinite face");
        const std::size_t L = walk.vertices.size();
        std::size_t prev = 0;
        for (std::size_t k = 1; k < order.size(); ++k) {
            std::size_t off = (first[order[k]] + L - first[order[0]]) % L;
            if (off <= prev) violated("iii", "vertices are not in counterclockwise order");
            prev = off;
        }
    }
    std::vector<std::size_t> smashed;
    std::vector<std::size_t> used;
    for (std::size_t k = 1; k < len; k += 2)
        for (std::size_t x : {inst.v[k], inst.vp[k]}) {
            const std::string name = std::to_string(g.vertex(x).id);
            if (g.degree(x) != 2) violated("iv", "vertex " + name + " does not have degree 2");
            auto f = bounded_face_at(g, faces, x);
            if (!f) violated("iv", "vertex " + name + " lies on no bounded face");
            if (std::find(used.begin(), used.end(), *f) != used.end()) violated("iv", "vertex " + name + " shares its face");
            used.push_back(*f);
            smashed.push_back(x);
        }

    inst.ref = refine(g, faces, dual_weights);
    inst.hat = smash_in(inst.ref, smashed);
    for (std::size_t k = 0; k < len; ++k) {
        if (k % 2 == 0) {
            inst.s1.push_back(inst.ref.vertex_of[inst.v[k]]);
            inst.s2.push_back(inst.ref.vertex_of[inst.vp[k]]);
        } else {
            inst.s1.push_back(inst.hat.face_vertex_of(inst.v[k]));
            inst.s2.push_back(inst.hat.face_vertex_of(inst.vp[k]));
        }
    }
    inst.host1_mask = inst.hat.present;
    inst.host2_mask = inst.hat.present;
    for (std::size_t x : inst.s1) inst.host1_mask[x] = 0;
    for (std::size_t x : inst.s2) inst.host2_mask[x] = 0;
    inst.host1 = inst.ref.graph.induced(inst.host1_mask);
    inst.host2 = inst.ref.graph.induced(inst.host2_mask);
    return inst;
}

std::vector<Id> constraint_edges(const TeaInstance& inst, const ConstraintPath& p, int side) {
    const PlanarGraph& H = inst.ref.graph;
    if (p.size() % 2 == 0) throw Error(ErrorKind::InvalidArgument, "constraint path has an even number of vertices");
    std::vector<Id> out;
    for (std::size_t k = (side == 1 ? 1 : 0); k + 1 < p.size(); k += 2) {
        auto e = H.edge_between(p[k], p[k + 1]);
        if (!e) throw Error(ErrorKind::InvalidArgument, "constraint path uses a missing edge");
        out.push_back(H.edge(*e).id);
    }
    for (std::size_t k = 0; k < p.size(); ++k)
        if (!inst.hat.present[p[k]]) throw Error(ErrorKind::InvalidArgument, "constraint path leaves the smashed graph");
    return out;
}

bool satisfies_constraints(const TeaInstance& inst, const Matching& mu, int side, const std::vector<int>& I,
                           const std::vector<ConstraintPath>& P) {
    check_paths_shape(inst, I, P);
    for (int i : I)
        for (Id id : constraint_edges(inst, P[i - 1], side))
            if (!std::binary_search(mu.edges.begin(), mu.edges.end(), id)) return false;
    return true;
}

std::vector<GlidePath> tea_paths(const TeaInstance& inst, const Matching& mu, int side) {
    const std::vector<char>& mask = side == 2 ? inst.host2_mask : inst.host1_mask;
    check_perfect(side == 2 ? inst.host2 : inst.host1, mu);
    const auto& from = side == 2 ? inst.s1 : inst.s2;
    const auto& to = side == 2 ? inst.s2 : inst.s1;
    auto mate = mate_in_refinement(inst.ref, mu);
    GlideSpace space{&inst.ref, &inst.hat.present, &mask, &mate};
    const PlanarGraph& H = inst.ref.graph;
    std::vector<char> used(H.vertex_count(), 0);
    std::vector<GlidePath> out;
    for (std::size_t i = 0; i < from.size(); ++i) {
        GlidePath p = glide(space, from[i], i % 2 == 0 ? GlideMode::Frame : GlideMode::Dual);
        p.generation = static_cast<int>(i) + 1;
        if (p.blocked || p.vertices.back() != to[i])
            throw Error(ErrorKind::InvalidArgument, "glide path " + std::to_string(i + 1) + " ends at vertex " +
                                                        std::to_string(H.vertex(p.vertices.back()).id));
        for (std::size_t x : p.vertices) {
            if (used[x]) throw Error(ErrorKind::InvalidArgument, "glide paths intersect");
            used[x] = 1;
        }
        out.push_back(std::move(p));
    }
    return out;
}

Matching tea_transport(const TeaInstance& inst, const Matching& mu, const std::vector<int>& I,
                       const std::vector<ConstraintPath>& P, int side) {
    if (side != 1 && side != 2) throw Error(ErrorKind::InvalidArgument, "side must be 1 or 2");
    if (side == 1 && !inst.path_condition)
        throw Error(ErrorKind::ConditionViolated, "(i) the inverse direction needs v_1 .. v_2n+1 to be a path");
    check_paths_shape(inst, I, P);
    for (int i : I)
        for (Id id : constraint_edges(inst, P[i - 1], side))
            if (!std::binary_search(mu.edges.begin(), mu.edges.end(), id))
                throw Error(ErrorKind::ConstraintPathMismatch, "matching does not contain the edges of P_" + std::to_string(i));
    std::vector<GlidePath> qs = tea_paths(inst, mu, side);
    for (int i : I) {
        ConstraintPath want = P[i - 1];
        if (side == 1) std::reverse(want.begin(), want.end());
        if (qs[i - 1].vertices != want)
            throw Error(ErrorKind::ConstraintPathMismatch, "Q_" + std::to_string(i) + " differs from P_" + std::to_string(i));
    }
    PathFamily fam;
    fam.paths = std::move(qs);
    return shift_along(inst.ref.graph, mu, fam, side == 2 ? inst.host1 : inst.host2);
}

std::vector<ConstraintPath> paths_of(const TeaInstance& inst, const Matching& mu) {
    std::vector<ConstraintPath> out;
    for (GlidePath& p : tea_paths(inst, mu, 2)) out.push_back(std::move(p.vertices));
    return out;
}

}  // namespace dimerforge
