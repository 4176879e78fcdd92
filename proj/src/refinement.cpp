#include "dimerforge/refinement.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace dimerforge {

namespace {

Point face_point(const PlanarGraph& g, const std::vector<std::size_t>& darts) {
    Rational a2 = 0, cx = 0, cy = 0;
    for (std::size_t d : darts) {
        const Point& p = g.vertex(g.dart_tail(d)).pos;
        const Point& q = g.vertex(g.dart_head(d)).pos;
        Rational c = p.x * q.y - q.x * p.y;
        a2 += c;
        cx += (p.x + q.x) * c;
        cy += (p.y + q.y) * c;
    }
    if (sgn(a2) == 0) {
        Rational sx = 0, sy = 0;
        for (std::size_t d : darts) {
            sx += g.vertex(g.dart_tail(d)).pos.x;
            sy += g.vertex(g.dart_tail(d)).pos.y;
        }
        long k = static_cast<long>(darts.size());
        return {sx / k, sy / k};
    }
    return {cx / (3 * a2), cy / (3 * a2)};
}

using Vec = std::pair<Rational, Rational>;

Vec l1_normal(const Vec& v) {
    Rational n = abs(v.first) + abs(v.second);
    return {v.first / n, v.second / n};
}

// A direction strictly inside the counterclockwise wedge from a to b.
Vec bisect(const Vec& a, const Vec& b) {
    Vec na = l1_normal(a), nb = l1_normal(b);
    Rational cross = na.first * nb.second - na.second * nb.first;
    Rational dot = na.first * nb.first + na.second * nb.second;
    if (sgn(cross) == 0 && sgn(dot) > 0) return {-na.first, -na.second};
    if (sgn(cross) > 0) return {na.first + nb.first, na.second + nb.second};
    if (sgn(cross) < 0) return {-(na.first + nb.first), -(na.second + nb.second)};
    return {-na.second, na.first};
}

}  // namespace

std::optional<std::size_t> Refinement::opposite(std::size_t mid, std::size_t from) const {
    const auto& [r, e] = role[mid];
    if (r != Role::EdgeMid) throw Error(ErrorKind::InvalidArgument, "not an edge-vertex");
    const auto& [fr, fi] = role[from];
    const Edge& ge = base.edge(e);
    if (fr == Role::Original) {
        std::size_t o = ge.u == fi ? ge.v : ge.u;
        return vertex_of[o];
    }
    if (fr == Role::FaceCenter) {
        std::size_t a = faces.left_of(2 * e), b = faces.left_of(2 * e + 1);
        std::size_t o = a == fi ? b : a;
        return face_vertex[o];
    }
    throw Error(ErrorKind::InvalidArgument, "edge-vertices are not adjacent");
}

Refinement refine(const PlanarGraph& g, std::optional<FaceDecomposition> faces, const std::vector<Rational>* dual_weights) {
    Refinement r;
    r.base = g;
    r.faces = faces ? std::move(*faces) : trace_faces(g);
    const FaceDecomposition& f = r.faces;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 1) continue;
        std::size_t e = g.rotation(v)[0];
        if (f.left_of(2 * e) != f.infinite)
            throw Error(ErrorKind::PreconditionViolated,
                        "vertex " + std::to_string(g.vertex(v).id) + " has degree one inside a bounded face");
    }
    std::vector<Vertex> vs;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        r.vertex_of.push_back(vs.size());
        r.role.push_back({Refinement::Role::Original, v});
        vs.push_back({static_cast<Id>(vs.size()), g.vertex(v).pos, {VertexTag::Kind::Original, g.vertex(v).id}});
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Point& a = g.vertex(g.edge(e).u).pos;
        const Point& b = g.vertex(g.edge(e).v).pos;
        r.edge_vertex.push_back(vs.size());
        r.role.push_back({Refinement::Role::EdgeMid, e});
        vs.push_back({static_cast<Id>(vs.size()), {(a.x + b.x) / 2, (a.y + b.y) / 2}, {VertexTag::Kind::EdgeMid, g.edge(e).id}});
    }
    r.face_vertex.assign(f.face_count(), std::nullopt);
    for (std::size_t fi = 0; fi < f.face_count(); ++fi) {
        if (fi == f.infinite) continue;
        r.face_vertex[fi] = vs.size();
        r.role.push_back({Refinement::Role::FaceCenter, fi});
        vs.push_back({static_cast<Id>(vs.size()), face_point(g, f.faces[fi]), {VertexTag::Kind::FaceCenter, static_cast<Id>(fi)}});
    }
    std::vector<Edge> es;
    std::vector<std::vector<std::size_t>> rot(vs.size());
    // frame_half[d]: H edge joining tail(d) to the edge-vertex of d's edge.
    std::vector<std::size_t> frame_half(2 * g.edge_count());
    std::vector<std::size_t> dual_half(2 * g.edge_count(), SIZE_MAX);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ge = g.edge(e);
        std::size_t m = r.edge_vertex[e];
        frame_half[2 * e] = es.size();
        es.push_back({Refinement::half_edge_id(e, 0), r.vertex_of[ge.u], m, ge.weight});
        r.half.push_back({Refinement::HalfKind::Frame, e, ge.u});
        frame_half[2 * e + 1] = es.size();
        es.push_back({Refinement::half_edge_id(e, 1), r.vertex_of[ge.v], m, ge.weight});
        r.half.push_back({Refinement::HalfKind::Frame, e, ge.v});
        std::size_t fl = f.left_of(2 * e), fr = f.left_of(2 * e + 1);
        bool interior = fl != f.infinite && fr != f.infinite && fl != fr;
        Rational dw = (interior && dual_weights) ? (*dual_weights)[e] : Rational(1);
        if (fl != f.infinite) {
            dual_half[2 * e] = es.size();
            es.push_back({Refinement::half_edge_id(e, 2), *r.face_vertex[fl], m, dw});
            r.half.push_back({Refinement::HalfKind::Dual, e, fl});
        }
        if (fr != f.infinite && fr != fl) {
            dual_half[2 * e + 1] = es.size();
            es.push_back({Refinement::half_edge_id(e, 3), *r.face_vertex[fr], m, dw});
            r.half.push_back({Refinement::HalfKind::Dual, e, fr});
        }
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (std::size_t e : g.rotation(v)) rot[r.vertex_of[v]].push_back(frame_half[g.dart_from(e, v)]);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto& rm = rot[r.edge_vertex[e]];
        rm.push_back(frame_half[2 * e + 1]);
        if (dual_half[2 * e] != SIZE_MAX) rm.push_back(dual_half[2 * e]);
        rm.push_back(frame_half[2 * e]);
        if (dual_half[2 * e + 1] != SIZE_MAX) rm.push_back(dual_half[2 * e + 1]);
    }
    for (std::size_t fi = 0; fi < f.face_count(); ++fi) {
        if (fi == f.infinite) continue;
        auto& rf = rot[*r.face_vertex[fi]];
        for (std::size_t d : f.faces[fi]) {
            std::size_t e = dart_edge(d);
            std::size_t h = f.left_of(2 * e) == fi ? dual_half[2 * e] : dual_half[2 * e + 1];
            if (std::find(rf.begin(), rf.end(), h) == rf.end()) rf.push_back(h);
        }
    }
    r.graph = PlanarGraph::from_rotation(std::move(vs), std::move(es), std::move(rot));
    return r;
}

PlanarGraph dual_refinement(const PlanarGraph& g) { return refine(g).graph; }

std::pair<PlanarGraph, MarkedBoundary> augment_with_leaves(const PlanarGraph& g0, const std::vector<Id>& path) {
    FaceDecomposition faces = trace_faces(g0);
    BoundaryPath bp = validate_boundary_path(g0, faces, parse_id_list(g0, path));
    BoundaryWalk walk = boundary_walk_ccw(g0, faces);
    const std::size_t L = walk.vertices.size();
    const long len = static_cast<long>(bp.vertices.size());

    // Counterclockwise wedge of the infinite face at walk position p.
    auto wedge = [&](std::size_t p) -> std::pair<Vec, Vec> {
        const Point& c = g0.vertex(walk.vertices[p]).pos;
        if (walk.darts.empty()) return {{1, 0}, {1, 0}};
        const Point& prev = g0.vertex(walk.vertices[(p + L - 1) % L]).pos;
        const Point& next = g0.vertex(walk.vertices[(p + 1) % L]).pos;
        return {{prev.x - c.x, prev.y - c.y}, {next.x - c.x, next.y - c.y}};
    };
    std::size_t p_first = bp.walk_start;
    std::size_t p_last = bp.along_ccw ? (bp.walk_start + static_cast<std::size_t>(len - 1)) % std::max<std::size_t>(L, 1)
                                      : (bp.walk_start + L * static_cast<std::size_t>(len) - static_cast<std::size_t>(len - 1)) % std::max<std::size_t>(L, 1);
    std::vector<std::pair<std::size_t, Vec>> leaves;  // (attach vertex, direction), v0 first
    if (len == 1) {
        auto [a, b] = wedge(p_first);
        Vec mid = bisect(a, b);
        Vec d1 = bisect(a, mid), d2 = bisect(mid, b);
        leaves.push_back({bp.vertices[0], bp.along_ccw ? d1 : d2});
        leaves.push_back({bp.vertices[0], bp.along_ccw ? d2 : d1});
    } else {
        auto [a0, b0] = wedge(p_first);
        auto [a1, b1] = wedge(p_last);
        leaves.push_back({bp.vertices.front(), bisect(a0, b0)});
        leaves.push_back({bp.vertices.back(), bisect(a1, b1)});
    }
    std::vector<Vertex> vs = g0.vertices();
    std::vector<Edge> es = g0.edges();
    Id max_vid = 0, max_eid = -1;
    for (const auto& v : vs) max_vid = std::max(max_vid, v.id);
    for (const auto& e : es) max_eid = std::max(max_eid, e.id);
    std::vector<Point> ends;
    for (auto& [at, dir] : leaves) {
        const Point& c = g0.vertex(at).pos;
        Rational eps = 1;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 200) throw Error(ErrorKind::EmbeddingError, "no room to attach a leaf");
            Point p{c.x + eps * dir.first, c.y + eps * dir.second};
            bool ok = true;
            for (std::size_t e = 0; e < g0.edge_count() && ok; ++e) {
                const Edge& ge = g0.edge(e);
                if (ge.u == at || ge.v == at) continue;
                ok = !segments_intersect(c, p, g0.vertex(ge.u).pos, g0.vertex(ge.v).pos);
            }
            for (std::size_t w = 0; w < g0.vertex_count() && ok; ++w)
                if (w != at) ok = !on_segment(c, p, g0.vertex(w).pos);
            for (std::size_t k = 0; k < ends.size() && ok; ++k) {
                const Point& oc = g0.vertex(leaves[k].first).pos;
                if (leaves[k].first == at) continue;
                ok = !segments_intersect(c, p, oc, ends[k]);
            }
            if (ok) {
                ends.push_back(p);
                break;
            }
            eps /= 2;
        }
    }
    std::size_t first_new = vs.size();
    for (std::size_t k = 0; k < leaves.size(); ++k) {
        vs.push_back({max_vid + 1 + static_cast<Id>(k), ends[k], {}});
        es.push_back({max_eid + 1 + static_cast<Id>(k), leaves[k].first, first_new + k, 1});
    }
    PlanarGraph g = PlanarGraph::from_coordinates(std::move(vs), std::move(es));
    MarkedBoundary mb;
    mb.host = g.fingerprint();
    mb.n = bp.n;
    mb.v.push_back(first_new);
    for (std::size_t v : bp.vertices) mb.v.push_back(v);
    mb.v.push_back(first_new + 1);
    for (std::size_t j = 1; j < mb.v.size(); ++j) mb.m_edges.push_back(*g.edge_between(mb.v[j - 1], mb.v[j]));
    return {std::move(g), std::move(mb)};
}

Section2Instance make_section2(const PlanarGraph& g0, const std::vector<Id>& path) {
    Section2Instance s;
    s.g0 = g0;
    auto [g, mb] = augment_with_leaves(g0, path);
    s.g = std::move(g);
    s.mb = std::move(mb);
    s.ref = refine(s.g);
    // The augmented boundary must still be consecutive on the infinite face.
    validate_boundary_path(s.g, s.ref.faces, s.mb.v, false);
    const std::size_t N = s.ref.graph.vertex_count();
    for (std::size_t e : s.mb.m_edges) s.m.push_back(s.ref.edge_vertex[e]);
    s.ambient.assign(N, 1);
    for (std::size_t i = 0; i < s.mb.v.size(); i += 2) s.ambient[s.ref.vertex_of[s.mb.v[i]]] = 0;
    s.plus_mask = s.ambient;
    s.minus_mask = s.ambient;
    for (std::size_t j = 0; j < s.m.size(); ++j) (j % 2 == 0 ? s.plus_mask : s.minus_mask)[s.m[j]] = 0;
    s.plus = s.ref.graph.induced(s.plus_mask);
    s.minus = s.ref.graph.induced(s.minus_mask);
    return s;
}

std::pair<PlanarGraph, PlanarGraph> build_plus_minus(const Section2Instance& inst) { return {inst.plus, inst.minus}; }

PlanarGraph symmetrize(const Section2Instance& inst) {
    const Refinement& r = inst.ref;
    const PlanarGraph& H = r.graph;
    const std::size_t N = H.vertex_count();
    std::vector<char> is_m(N, 0);
    for (std::size_t m : inst.m) is_m[m] = 1;
    Rational ymin;
    bool first = true;
    for (std::size_t v = 0; v < N; ++v)
        if (inst.ambient[v] && !is_m[v] && (first || H.vertex(v).pos.y < ymin)) {
            ymin = H.vertex(v).pos.y;
            first = false;
        }
    Id vid_off = 0, eid_off = 0;
    for (const auto& v : H.vertices()) vid_off = std::max(vid_off, v.id + 1);
    for (const auto& e : H.edges()) eid_off = std::max(eid_off, e.id + 1);

    std::vector<std::size_t> up(N, SIZE_MAX), down(N, SIZE_MAX);
    std::vector<Vertex> vs;
    for (std::size_t v = 0; v < N; ++v) {
        if (!inst.ambient[v] || is_m[v]) continue;
        const Vertex& hv = H.vertex(v);
        up[v] = vs.size();
        vs.push_back({hv.id, {hv.pos.x, hv.pos.y - ymin + 1}, hv.tag});
    }
    for (std::size_t j = 0; j < inst.m.size(); ++j) {
        std::size_t v = inst.m[j];
        up[v] = down[v] = vs.size();
        vs.push_back({H.vertex(v).id, {static_cast<long>(j), 0}, H.vertex(v).tag});
    }
    for (std::size_t v = 0; v < N; ++v) {
        if (!inst.ambient[v] || is_m[v]) continue;
        down[v] = vs.size();
        const Vertex& u = vs[up[v]];
        vs.push_back({H.vertex(v).id + vid_off, {u.pos.x, -u.pos.y}, u.tag});
    }
    std::vector<Edge> es;
    std::vector<std::size_t> eup(H.edge_count(), SIZE_MAX), edown(H.edge_count(), SIZE_MAX);
    for (std::size_t e = 0; e < H.edge_count(); ++e) {
        const Edge& he = H.edge(e);
        if (!inst.ambient[he.u] || !inst.ambient[he.v]) continue;
        if (is_m[he.u] && is_m[he.v]) throw Error(ErrorKind::ReembeddingFailed, "two marked edge-vertices are adjacent");
        eup[e] = es.size();
        es.push_back({he.id, up[he.u], up[he.v], he.weight});
    }
    for (std::size_t e = 0; e < H.edge_count(); ++e) {
        if (eup[e] == SIZE_MAX) continue;
        const Edge& he = H.edge(e);
        edown[e] = es.size();
        es.push_back({he.id + eid_off, down[he.u], down[he.v], he.weight});
    }
    std::vector<std::vector<std::size_t>> rot(vs.size());
    for (std::size_t v = 0; v < N; ++v) {
        if (!inst.ambient[v]) continue;
        std::vector<std::size_t> seq;
        if (is_m[v]) {
            // Start right after the infinite face slot so that the upper side reads counterclockwise.
            std::size_t e = r.role[v].second;
            std::size_t fl = r.faces.left_of(2 * e);
            const auto& full = H.rotation(v);
            std::vector<std::size_t> ordered(full.begin(), full.end());
            // Layout is [v-half, left dual, u-half, right dual] with the infinite one missing.
            if (fl == r.faces.infinite) {
                // Infinite slot sits between the v-half and the u-half: start at the u-half.
                auto it = std::find_if(ordered.begin(), ordered.end(), [&](std::size_t h) { return H.edge(h).id % 4 == 0; });
                std::rotate(ordered.begin(), it, ordered.end());
            } else {
                auto it = std::find_if(ordered.begin(), ordered.end(), [&](std::size_t h) { return H.edge(h).id % 4 == 1; });
                std::rotate(ordered.begin(), it, ordered.end());
            }
            for (std::size_t h : ordered)
                if (eup[h] != SIZE_MAX) seq.push_back(h);
            auto& rr = rot[up[v]];
            for (std::size_t h : seq) rr.push_back(eup[h]);
            for (auto it = seq.rbegin(); it != seq.rend(); ++it) rr.push_back(edown[*it]);
        } else {
            for (std::size_t h : H.rotation(v))
                if (eup[h] != SIZE_MAX) seq.push_back(h);
            for (std::size_t h : seq) rot[up[v]].push_back(eup[h]);
            for (auto it = seq.rbegin(); it != seq.rend(); ++it) rot[down[v]].push_back(edown[*it]);
        }
    }
    return PlanarGraph::from_rotation(std::move(vs), std::move(es), std::move(rot));
}

std::optional<std::size_t> bounded_face_at(const PlanarGraph& g, const FaceDecomposition& faces, std::size_t v) {
    for (std::size_t e : g.rotation(v))
        for (std::size_t d : {2 * e, 2 * e + 1})
            if (faces.left_of(d) != faces.infinite) return faces.left_of(d);
    return std::nullopt;
}

std::size_t SmashedGraph::face_vertex_of(std::size_t g_vertex) const {
    for (auto [v, f] : face_of)
        if (v == g_vertex) return f;
    throw Error(ErrorKind::InvalidArgument, "vertex was not smashed in");
}

SmashedGraph smash_in(const Refinement& ref, const std::vector<std::size_t>& targets) {
    SmashedGraph s;
    const PlanarGraph& g = ref.base;
    s.present.assign(ref.graph.vertex_count(), 1);
    std::vector<char> on_outer(g.vertex_count(), 0);
    for (std::size_t d : ref.faces.faces[ref.faces.infinite]) on_outer[g.dart_tail(d)] = 1;
    std::vector<std::size_t> used_faces;
    for (std::size_t v : targets) {
        const std::string name = std::to_string(g.vertex(v).id);
        if (g.degree(v) != 2) throw Error(ErrorKind::NotDegreeTwo, "vertex " + name);
        if (!on_outer[v]) throw Error(ErrorKind::NotOnInfiniteFace, "vertex " + name);
        auto f = bounded_face_at(g, ref.faces, v);
        if (!f) throw Error(ErrorKind::NotOnInfiniteFace, "vertex " + name + " lies on no bounded face");
        if (std::find(used_faces.begin(), used_faces.end(), *f) != used_faces.end())
            throw Error(ErrorKind::SharedFace, "vertex " + name);
        used_faces.push_back(*f);
        s.removed.push_back(v);
        s.face_of.push_back({v, *ref.face_vertex[*f]});
        s.present[ref.vertex_of[v]] = 0;
        for (std::size_t e : g.rotation(v)) s.present[ref.edge_vertex[e]] = 0;
    }
    s.graph = ref.graph.induced(s.present);
    return s;
}

namespace {

struct Square {
    int n2;
    std::vector<char> alive;
    bool has(int i, int j) const { return i >= 0 && j >= 0 && i < n2 && j < n2 && alive[i * n2 + j]; }
    bool connected() const {
        int start = -1, total = 0;
        for (int k = 0; k < n2 * n2; ++k)
            if (alive[k]) {
                ++total;
                if (start < 0) start = k;
            }
        if (start < 0) return true;
        std::vector<char> seen(alive.size(), 0);
        std::vector<int> st{start};
        seen[start] = 1;
        int count = 1;
        while (!st.empty()) {
            int k = st.back();
            st.pop_back();
            int i = k / n2, j = k % n2;
            const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
            for (int t = 0; t < 4; ++t) {
                int a = i + di[t], b = j + dj[t];
                if (has(a, b) && !seen[a * n2 + b]) {
                    seen[a * n2 + b] = 1;
                    ++count;
                    st.push_back(a * n2 + b);
                }
            }
        }
        return count == total;
    }
};

void apply_peak(Square& sq, const Peak& p) {
    const int i = p.i, j = p.j;
    if (j - i < 3)
        throw Error(ErrorKind::BelowDiagonal, "peak (" + std::to_string(i) + "," + std::to_string(j) + ")");
    bool ok = sq.has(i, j) && sq.has(i + 1, j) && sq.has(i, j - 1) && sq.has(i + 1, j - 1) && !sq.has(i - 1, j) &&
              !sq.has(i, j + 1);
    if (!ok) throw Error(ErrorKind::NotAPeak, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
    const int quad[4][2] = {{i, j}, {i + 1, j}, {i, j - 1}, {i + 1, j - 1}};
    for (auto& q : quad) {
        sq.alive[q[0] * sq.n2 + q[1]] = 0;
        sq.alive[q[1] * sq.n2 + q[0]] = 0;
    }
}

Square build_square(int n, const std::vector<Peak>& removals) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
    Square sq{2 * n, std::vector<char>(4 * n * n, 1)};
    for (const Peak& p : removals) {
        if (p.i < 0 || p.j < 0 || p.i >= sq.n2 || p.j >= sq.n2) throw Error(ErrorKind::NotAPeak, "peak out of range");
        apply_peak(sq, p);
    }
    return sq;
}

}  // namespace

PlanarGraph trimmed_square(int n, const std::vector<Peak>& removals) {
    Square sq = build_square(n, removals);
    std::vector<Vertex> vs;
    std::vector<std::size_t> index(sq.alive.size(), SIZE_MAX);
    for (int i = 0; i < sq.n2; ++i)
        for (int j = 0; j < sq.n2; ++j)
            if (sq.has(i, j)) {
                index[i * sq.n2 + j] = vs.size();
                vs.push_back({i * sq.n2 + j, {i + j, j - i}, {}});
            }
    std::vector<Edge> es;
    for (int i = 0; i < sq.n2; ++i)
        for (int j = 0; j < sq.n2; ++j) {
            if (!sq.has(i, j)) continue;
            if (sq.has(i + 1, j))
                es.push_back({static_cast<Id>(es.size()), index[i * sq.n2 + j], index[(i + 1) * sq.n2 + j], 1});
            if (sq.has(i, j + 1))
                es.push_back({static_cast<Id>(es.size()), index[i * sq.n2 + j], index[i * sq.n2 + j + 1], 1});
        }
    return PlanarGraph::from_coordinates(std::move(vs), std::move(es));
}

std::vector<Peak> available_peaks(int n, const std::vector<Peak>& removals) {
    Square sq = build_square(n, removals);
    std::vector<Peak> out;
    for (int i = 0; i < sq.n2; ++i)
        for (int j = i + 3; j < sq.n2; ++j) {
            Square trial = sq;
            try {
                apply_peak(trial, {i, j});
                out.push_back({i, j});
            } catch (const Error&) {
            }
        }
    return out;
}

}  // namespace dimerforge
