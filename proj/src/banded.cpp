#include "dimerforge/banded.hpp"

#include <algorithm>
#include <numeric>

#include "dimerforge/trees.hpp"

namespace dimerforge {

using Role = Refinement::Role;

std::size_t BandedForestCertificate::channel_count() const {
    return static_cast<std::size_t>(std::count_if(components.begin(), components.end(),
                                                  [](const Component& c) { return c.kind == Kind::Channel; }));
}

std::vector<char> forest_edges(const PlanarGraph& g, const RootedForest& f) {
    std::vector<char> in(g.edge_count(), 0);
    for (std::size_t e : f.parent_edge)
        if (e != SIZE_MAX) in[e] = 1;
    return in;
}

DualForest dual_forest(const PlanarGraph& g, const FaceDecomposition& faces, const std::vector<char>& in_forest) {
    const std::size_t nf = faces.face_count();
    std::vector<std::size_t> parent(nf);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    DualForest d;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (in_forest[e]) continue;
        std::size_t l = faces.left_of(2 * e), r = faces.left_of(2 * e + 1);
        if (l == faces.infinite || r == faces.infinite) continue;
        std::size_t a = find(l), b = find(r);
        if (a == b)
            throw Error(ErrorKind::NotBanded, "duals of edges outside the forest close a cycle at edge " + std::to_string(g.edge(e).id));
        parent[a] = b;
        d.edges.push_back(e);
    }
    d.component.assign(nf, SIZE_MAX);
    std::vector<std::size_t> label(nf, SIZE_MAX);
    for (std::size_t f = 0; f < nf; ++f) {
        if (f == faces.infinite) continue;
        std::size_t r = find(f);
        if (label[r] == SIZE_MAX) label[r] = d.components++;
        d.component[f] = label[r];
    }
    return d;
}

BandedForestCertificate classify_components(const PlanarGraph& g, const FaceDecomposition& faces, const RootedForest& f,
                                            const std::vector<std::size_t>& u, const std::vector<std::size_t>& up,
                                            const std::vector<char>* skip) {
    const std::size_t k = u.size();
    if (up.size() != k || k == 0) throw Error(ErrorKind::InvalidArgument, "distinguished points must come in pairs");
    BandedForestCertificate cert;
    const std::size_t n = g.vertex_count();

    std::vector<std::size_t> root_of(n, SIZE_MAX);
    for (std::size_t v = 0; v < n; ++v) {
        if (skip && (*skip)[v]) continue;
        std::size_t x = v;
        std::size_t steps = 0;
        while (f.parent_edge[x] != SIZE_MAX) {
            x = g.other(f.parent_edge[x], x);
            if (++steps > n) throw Error(ErrorKind::InvalidArgument, "directed cycle in forest");
        }
        root_of[v] = x;
    }
    std::vector<std::size_t> band_of_root(n, SIZE_MAX);
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t r = root_of[u[i]];
        if (r == SIZE_MAX || r != root_of[up[i]])
            throw Error(ErrorKind::BandPairingViolated, "pair " + std::to_string(i + 1) + " lies in two components");
        if (band_of_root[r] != SIZE_MAX)
            throw Error(ErrorKind::BandPairingViolated, "pairs " + std::to_string(band_of_root[r] + 1) + " and " +
                                                            std::to_string(i + 1) + " share a component");
        band_of_root[r] = i;
        cert.bands.push_back({u[i], up[i]});
    }
    cert.band_of.assign(n, SIZE_MAX);
    for (std::size_t v = 0; v < n; ++v) {
        if (root_of[v] == SIZE_MAX) continue;
        cert.band_of[v] = band_of_root[root_of[v]];
        if (cert.band_of[v] == SIZE_MAX)
            throw Error(ErrorKind::BandPairingViolated, "component of vertex " + std::to_string(g.vertex(v).id) + " has no pair");
    }

    std::vector<char> in = forest_edges(g, f);
    cert.dual = dual_forest(g, faces, in);

    BoundaryWalk walk = boundary_walk_ccw(g, faces);
    const std::size_t L = walk.vertices.size();
    std::vector<std::size_t> first(n, SIZE_MAX);
    for (std::size_t i = 0; i < L; ++i)
        if (first[walk.vertices[i]] == SIZE_MAX) first[walk.vertices[i]] = i;
    std::vector<std::size_t> seq(u.begin(), u.end());
    seq.insert(seq.end(), up.rbegin(), up.rend());
    std::vector<std::size_t> cuts;
    for (std::size_t x : seq) {
        if (first[x] == SIZE_MAX) throw Error(ErrorKind::InvalidArgument, "distinguished point off the infinite face");
        std::size_t off = (first[x] + L - first[seq[0]]) % L;
        if (!cuts.empty() && off <= cuts.back())
            throw Error(ErrorKind::InvalidArgument, "distinguished points are not in counterclockwise order");
        cuts.push_back(off);
    }

    cert.components.resize(cert.dual.components);
    for (std::size_t i = 0; i < L; ++i) {
        std::size_t d = walk.darts[i];
        std::size_t e = dart_edge(d);
        if (in[e]) continue;
        std::size_t face = faces.left_of(d);
        if (face == faces.infinite) face = faces.left_of(reverse_dart(d));
        if (face == faces.infinite) continue;
        std::size_t off = (i + L - first[seq[0]]) % L;
        int arc = static_cast<int>(std::upper_bound(cuts.begin(), cuts.end(), off) - cuts.begin()) - 1;
        auto& comp = cert.components[cert.dual.component[face]];
        auto it = std::find(comp.z_faces.begin(), comp.z_faces.end(), face);
        if (it == comp.z_faces.end()) {
            comp.z_faces.push_back(face);
            comp.z_edges.push_back({e});
            comp.arcs.push_back(arc);
        } else {
            std::size_t j = static_cast<std::size_t>(it - comp.z_faces.begin());
            if (std::find(comp.z_edges[j].begin(), comp.z_edges[j].end(), e) == comp.z_edges[j].end()) comp.z_edges[j].push_back(e);
            if (comp.arcs[j] != arc)
                throw Error(ErrorKind::ClassificationFailed, "one face meets the infinite face along two arcs");
        }
    }
    const int last = static_cast<int>(2 * k - 2);
    for (std::size_t c = 0; c < cert.components.size(); ++c) {
        auto& comp = cert.components[c];
        if (comp.z_faces.empty())
            throw Error(ErrorKind::ClassificationFailed, "dual component " + std::to_string(c) + " does not reach the infinite face");
        if (comp.z_faces.size() > 2)
            throw Error(ErrorKind::ClassificationFailed, "dual component " + std::to_string(c) + " reaches the infinite face " +
                                                             std::to_string(comp.z_faces.size()) + " times");
        if (comp.z_faces.size() == 1) {
            comp.kind = BandedForestCertificate::Kind::Bay;
            continue;
        }
        comp.kind = BandedForestCertificate::Kind::Channel;
        int a = std::min(comp.arcs[0], comp.arcs[1]), b = std::max(comp.arcs[0], comp.arcs[1]);
        if (a + b != last || a >= static_cast<int>(k) - 1)
            throw Error(ErrorKind::ClassificationFailed, "channel crosses arcs " + std::to_string(a) + " and " + std::to_string(b));
    }
    return cert;
}

std::vector<char> smashed_mask(const TeaInstance& inst) {
    std::vector<char> skip(inst.ref.base.vertex_count(), 0);
    for (std::size_t v : inst.hat.removed) skip[v] = 1;
    return skip;
}

namespace {

std::vector<std::size_t> odd_of(const std::vector<std::size_t>& seq) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < seq.size(); i += 2) out.push_back(seq[i]);
    return out;
}

std::size_t face_index(const TeaInstance& inst, std::size_t h) { return inst.ref.role[h].second; }

}  // namespace

BandedForestCertificate certify_tec_forest(const TeaInstance& inst, const RootedForest& f) {
    const PlanarGraph& g = inst.ref.base;
    std::vector<char> skip = smashed_mask(inst);
    check_forest(g, f, &skip);
    std::vector<std::size_t> roots = odd_of(inst.vp);
    std::sort(roots.begin(), roots.end());
    std::vector<std::size_t> have = f.roots;
    std::sort(have.begin(), have.end());
    if (have != roots) throw Error(ErrorKind::InvalidArgument, "forest must be rooted at v'_1, v'_3, ...");
    BandedForestCertificate cert = classify_components(g, inst.ref.faces, f, odd_of(inst.v), odd_of(inst.vp), &skip);
    for (int i = 1; i <= inst.n; ++i) {
        std::size_t a = cert.dual.component[face_index(inst, inst.s1[2 * i - 1])];
        std::size_t b = cert.dual.component[face_index(inst, inst.s2[2 * i - 1])];
        if (a != b || cert.components[a].kind != BandedForestCertificate::Kind::Channel)
            throw Error(ErrorKind::ChannelPairingViolated, "f_" + std::to_string(2 * i) + " and f'_" + std::to_string(2 * i) +
                                                               " are not in one channel");
    }
    if (cert.channel_count() != static_cast<std::size_t>(inst.n))
        throw Error(ErrorKind::ChannelPairingViolated, "a channel carries no f'");
    return cert;
}

Matching tec_forest_to_matching(const TeaInstance& inst, const RootedForest& f) {
    const PlanarGraph& g = inst.ref.base;
    const FaceDecomposition& faces = inst.ref.faces;
    BandedForestCertificate cert = certify_tec_forest(inst, f);
    std::vector<Id> ids;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::size_t e = f.parent_edge[v];
        if (e != SIZE_MAX) ids.push_back(Refinement::half_edge_id(e, g.edge(e).u == v ? 0 : 1));
    }
    auto dual_slot = [&](std::size_t e, std::size_t face) { return faces.left_of(2 * e) == face ? 2 : 3; };

    std::vector<char> smashed_edge(g.edge_count(), 0);
    for (std::size_t v : inst.hat.removed)
        for (std::size_t e : g.rotation(v)) smashed_edge[e] = 1;

    std::vector<std::size_t> root(cert.components.size(), SIZE_MAX);
    for (int i = 1; i <= inst.n; ++i) {
        std::size_t fp = face_index(inst, inst.s2[2 * i - 1]);
        root[cert.dual.component[fp]] = fp;
    }
    for (std::size_t c = 0; c < cert.components.size(); ++c) {
        if (root[c] != SIZE_MAX) continue;
        const auto& comp = cert.components[c];
        std::size_t face = comp.z_faces[0];
        std::vector<std::size_t> exits;
        for (std::size_t e : comp.z_edges[0])
            if (!smashed_edge[e]) exits.push_back(e);
        if (exits.size() != 1)
            throw Error(ErrorKind::ClassificationFailed, "bay meets the infinite face along " + std::to_string(exits.size()) + " edges");
        root[c] = face;
        ids.push_back(Refinement::half_edge_id(exits[0], dual_slot(exits[0], face)));
    }

    std::vector<std::vector<std::size_t>> adj(faces.face_count());
    for (std::size_t e : cert.dual.edges) {
        adj[faces.left_of(2 * e)].push_back(e);
        adj[faces.left_of(2 * e + 1)].push_back(e);
    }
    std::vector<char> seen(faces.face_count(), 0);
    for (std::size_t r : root) {
        std::vector<std::size_t> queue{r};
        seen[r] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            std::size_t x = queue[qi];
            for (std::size_t e : adj[x]) {
                std::size_t l = faces.left_of(2 * e);
                std::size_t y = l == x ? faces.left_of(2 * e + 1) : l;
                if (seen[y]) continue;
                seen[y] = 1;
                queue.push_back(y);
                ids.push_back(Refinement::half_edge_id(e, dual_slot(e, y)));
            }
        }
    }
    Matching mu = make_matching(inst.host2, std::move(ids));
    check_perfect(inst.host2, mu);
    return mu;
}

RootedForest tec_matching_to_forest(const TeaInstance& inst, const Matching& mu) {
    const PlanarGraph& g = inst.ref.base;
    check_perfect(inst.host2, mu);
    auto mate = mate_in_refinement(inst.ref, mu);
    std::vector<char> skip = smashed_mask(inst);
    RootedForest f;
    f.host = g.fingerprint();
    f.roots = odd_of(inst.vp);
    std::sort(f.roots.begin(), f.roots.end());
    f.parent_edge.assign(g.vertex_count(), SIZE_MAX);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (skip[v] || std::binary_search(f.roots.begin(), f.roots.end(), v)) continue;
        const auto& h = inst.ref.half[mate[inst.ref.vertex_of[v]]];
        if (h.kind != Refinement::HalfKind::Frame) throw Error(ErrorKind::InvalidArgument, "original vertex matched off the frame");
        f.parent_edge[v] = h.g_edge;
    }
    certify_tec_forest(inst, f);
    return f;
}

bool forest_satisfies(const TeaInstance& inst, const RootedForest& f, const std::vector<int>& I,
                      const std::vector<ConstraintPath>& P) {
    const PlanarGraph& g = inst.ref.base;
    std::vector<char> in = forest_edges(g, f);
    DualForest d = dual_forest(g, inst.ref.faces, in);
    std::vector<char> in_dual(g.edge_count(), 0);
    for (std::size_t e : d.edges) in_dual[e] = 1;
    for (int i : I) {
        if (i < 1 || static_cast<std::size_t>(i) > P.size())
            throw Error(ErrorKind::InvalidArgument, "no constraint path for index " + std::to_string(i));
        const ConstraintPath& p = P[i - 1];
        for (std::size_t k = 1; k < p.size(); k += 2) {
            if (inst.ref.role[p[k]].first != Role::EdgeMid) throw Error(ErrorKind::InvalidArgument, "malformed constraint path");
            std::size_t e = inst.ref.role[p[k]].second;
            if (!(i % 2 == 1 ? in[e] : in_dual[e])) return false;
        }
    }
    return true;
}

Rational tec_forest_weight(const TeaInstance& inst, const RootedForest& f) {
    const PlanarGraph& g = inst.ref.base;
    Rational w = forest_weight(g, f);
    DualForest d = dual_forest(g, inst.ref.faces, forest_edges(g, f));
    for (std::size_t e : d.edges) {
        auto h = inst.ref.graph.edge_index(Refinement::half_edge_id(e, 2));
        if (h) w *= inst.ref.graph.edge(*h).weight;
    }
    return w;
}

std::vector<RootedForest> enumerate_tec_forests(const TeaInstance& inst) {
    std::vector<char> skip = smashed_mask(inst);
    std::vector<std::size_t> roots = odd_of(inst.vp);
    std::vector<RootedForest> out;
    for_each_rooted_forest(
        inst.ref.base, roots,
        [&](const RootedForest& f) {
            try {
                certify_tec_forest(inst, f);
                out.push_back(f);
            } catch (const Error& e) {
                switch (e.kind()) {
                    case ErrorKind::NotBanded:
                    case ErrorKind::BandPairingViolated:
                    case ErrorKind::ChannelPairingViolated:
                        break;
                    default:
                        throw;
                }
            }
            return true;
        },
        &skip);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dimerforge
