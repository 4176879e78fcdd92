#include "dimerforge/bijections.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace dimerforge {

using Role = Refinement::Role;

void check_forest(const PlanarGraph& g, const RootedForest& f, const std::vector<char>* skip) {
    const std::size_t n = g.vertex_count();
    if (f.parent_edge.size() != n) throw Error(ErrorKind::InvalidArgument, "forest size mismatch");
    std::vector<char> is_root(n, 0);
    for (std::size_t r : f.roots) {
        if (r >= n || is_root[r]) throw Error(ErrorKind::InvalidArgument, "bad root list");
        is_root[r] = 1;
        if (f.parent_edge[r] != SIZE_MAX) throw Error(ErrorKind::InvalidArgument, "root has a parent");
    }
    // state: 0 unknown, 1 in progress, 2 reaches a root
    std::vector<char> state(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        if (skip && (*skip)[v]) continue;
        std::vector<std::size_t> trail;
        std::size_t x = v;
        while (state[x] == 0 && !is_root[x]) {
            state[x] = 1;
            trail.push_back(x);
            std::size_t e = f.parent_edge[x];
            if (e == SIZE_MAX || e >= g.edge_count() || (g.edge(e).u != x && g.edge(e).v != x))
                throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(g.vertex(x).id) + " has no valid parent");
            x = g.other(e, x);
            if (skip && (*skip)[x]) throw Error(ErrorKind::InvalidArgument, "forest leaves its vertex set");
        }
        if (state[x] == 1) throw Error(ErrorKind::InvalidArgument, "directed cycle in forest");
        for (std::size_t t : trail) state[t] = 2;
        state[x] = 2;
    }
}

Rational forest_weight(const PlanarGraph& g, const RootedForest& f) {
    Rational w = 1;
    for (std::size_t e : f.parent_edge)
        if (e != SIZE_MAX) w *= g.edge(e).weight;
    return w;
}

std::string format_forest(const PlanarGraph& g, const RootedForest& f) {
    std::ostringstream out;
    out << "roots";
    for (std::size_t r : f.roots) out << ' ' << g.vertex(r).id;
    out << '\n';
    for (std::size_t v = 0; v < f.parent_edge.size(); ++v) {
        std::size_t e = f.parent_edge[v];
        if (e == SIZE_MAX) continue;
        out << g.vertex(v).id << '>' << g.vertex(g.other(e, v)).id << ':' << g.edge(e).id << '\n';
    }
    return out.str();
}

RootedForest parse_forest(const PlanarGraph& g, const std::string& text) {
    RootedForest f;
    f.host = g.fingerprint();
    f.parent_edge.assign(g.vertex_count(), SIZE_MAX);
    auto vertex = [&](const std::string& tok) {
        auto v = tok.find_first_not_of("0123456789") == std::string::npos && !tok.empty()
                     ? g.vertex_index(std::stoll(tok)) : std::nullopt;
        if (!v) throw Error(ErrorKind::ParseError, "unknown vertex '" + tok + "'");
        return *v;
    };
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string tok;
        if (!(words >> tok)) continue;
        if (tok == "roots") {
            while (words >> tok) f.roots.push_back(vertex(tok));
            continue;
        }
        auto gt = tok.find('>'), colon = tok.find(':');
        if (gt == std::string::npos || colon == std::string::npos || colon < gt)
            throw Error(ErrorKind::ParseError, "expected child>parent:edge, got '" + tok + "'");
        std::size_t child = vertex(tok.substr(0, gt)), parent = vertex(tok.substr(gt + 1, colon - gt - 1));
        std::string eid = tok.substr(colon + 1);
        auto e = !eid.empty() && eid.find_first_not_of("0123456789") == std::string::npos ? g.edge_index(std::stoll(eid))
                                                                                            : std::nullopt;
        if (!e || g.other(*e, child) != parent || (g.edge(*e).u != child && g.edge(*e).v != child))
            throw Error(ErrorKind::ParseError, "edge '" + eid + "' does not join " + tok.substr(0, colon));
        f.parent_edge[child] = *e;
    }
    std::sort(f.roots.begin(), f.roots.end());
    check_forest(g, f);
    return f;
}

std::vector<std::size_t> mate_in_refinement(const Refinement& ref, const Matching& mu) {
    return mate_edges(ref.graph, mu);
}

GlidePath glide(const GlideSpace& s, std::size_t start, GlideMode mode) {
    const Refinement& r = *s.ref;
    const PlanarGraph& H = r.graph;
    const auto& ambient = *s.ambient;
    const auto& host = *s.host;
    const auto& mate = *s.mate;
    GlidePath path;
    path.mode = mode;
    std::vector<char> seen(H.vertex_count(), 0);
    auto visit = [&](std::size_t v) {
        if (seen[v]) throw Error(ErrorKind::CycleDetected, "glide revisits vertex " + std::to_string(H.vertex(v).id));
        seen[v] = 1;
        path.vertices.push_back(v);
    };
    visit(start);
    std::size_t x = start;
    const Role want = mode == GlideMode::Frame ? Role::Original : Role::FaceCenter;
    if (r.role[start].first == Role::EdgeMid) {
        std::optional<std::size_t> first;
        for (std::size_t h : H.rotation(start)) {
            std::size_t y = H.other(h, start);
            if (r.role[y].first == want && ambient[y]) {
                if (first) throw Error(ErrorKind::InvalidArgument, "first glide step is not forced");
                first = y;
            }
        }
        if (!first) throw Error(ErrorKind::InvalidArgument, "no first glide step from edge-vertex");
        if (!host[*first]) {
            visit(*first);
            return path;
        }
        visit(*first);
        x = *first;
    } else if (r.role[start].first != want) {
        throw Error(ErrorKind::InvalidArgument, "glide start does not match the mode");
    }
    for (;;) {
        std::size_t h = mate[x];
        if (h == SIZE_MAX) throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(H.vertex(x).id) + " is unmatched");
        std::size_t m = H.other(h, x);
        if (r.role[m].first != Role::EdgeMid) throw Error(ErrorKind::InvalidArgument, "matched edge misses the edge-vertices");
        visit(m);
        std::optional<std::size_t> y = r.opposite(m, x);
        if (!y || !ambient[*y]) {
            path.blocked = true;
            return path;
        }
        if (*y == x) throw Error(ErrorKind::CycleDetected, "glide crosses a bridge back into its own face");
        visit(*y);
        if (!host[*y]) return path;
        x = *y;
    }
}

namespace {

std::vector<std::size_t> path_edges(const PlanarGraph& h, const GlidePath& p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        auto e = h.edge_between(p.vertices[i - 1], p.vertices[i]);
        if (!e) throw Error(ErrorKind::NotAlternating, "path uses a missing edge");
        out.push_back(*e);
    }
    return out;
}

}  // namespace

Matching shift_along(const PlanarGraph& h, const Matching& mu, const PathFamily& paths, const PlanarGraph& result_host) {
    std::vector<Id> ids = mu.edges;
    std::sort(ids.begin(), ids.end());
    for (const GlidePath& p : paths.paths) {
        auto es = path_edges(h, p);
        int prev = -1;
        for (std::size_t e : es) {
            Id id = h.edge(e).id;
            int in = std::binary_search(mu.edges.begin(), mu.edges.end(), id) ? 1 : 0;
            if (prev == in) throw Error(ErrorKind::NotAlternating, "consecutive path edges agree on membership");
            prev = in;
            auto it = std::lower_bound(ids.begin(), ids.end(), id);
            if (it != ids.end() && *it == id)
                ids.erase(it);
            else
                ids.insert(it, id);
        }
    }
    Matching out = make_matching(result_host, std::move(ids));
    check_perfect(result_host, out);
    return out;
}

PathFamily build_path_family(const Section2Instance& inst, const Matching& mu, bool plus_side) {
    const PlanarGraph& host_graph = plus_side ? inst.plus : inst.minus;
    check_perfect(host_graph, mu);
    const Refinement& r = inst.ref;
    auto mate = mate_in_refinement(r, mu);
    const auto& host = plus_side ? inst.plus_mask : inst.minus_mask;
    GlideSpace space{&r, &inst.ambient, &host, &mate};
    const int count = 2 * inst.n();
    std::vector<int> m_index(r.graph.vertex_count(), -1);
    for (int j = 0; j < count; ++j) m_index[inst.m[j]] = j;
    std::vector<char> paired(count, 0);
    PathFamily fam;
    struct Item {
        int lo, hi, gen;
    };
    std::vector<Item> stack{{0, count - 1, 1}};
    while (!stack.empty()) {
        Item it = stack.back();
        stack.pop_back();
        if (it.lo > it.hi) continue;
        const bool frame = it.gen % 2 == 1;
        const bool from_left = frame == plus_side;
        int cursor = from_left ? it.lo : it.hi;
        std::vector<Item> children;
        while (from_left ? cursor <= it.hi : cursor >= it.lo) {
            std::size_t s = inst.m[cursor];
            if (host[s]) throw Error(ErrorKind::InvalidArgument, "glide start is matched");
            GlidePath p = glide(space, s, frame ? GlideMode::Frame : GlideMode::Dual);
            p.generation = it.gen;
            int end = m_index[p.vertices.back()];
            bool ok = p.blocked && end >= 0 && (from_left ? (end > cursor && end <= it.hi) : (end < cursor && end >= it.lo));
            if (!ok || paired[end])
                throw Error(ErrorKind::InvalidArgument, "glide from m" + std::to_string(cursor + 1) + " does not end on the marked boundary");
            // Alternation: non-matching edge first and matching edge last.
            {
                std::size_t k = p.vertices.size();
                auto last = r.graph.edge_between(p.vertices[k - 2], p.vertices[k - 1]);
                if (k < 3 || !last || mate[p.vertices[k - 2]] != *last)
                    throw Error(ErrorKind::NotAlternating, "glide path does not end on a matched edge");
            }
            paired[cursor] = paired[end] = 1;
            fam.paths.push_back(std::move(p));
            if (from_left) {
                children.push_back({cursor + 1, end - 1, it.gen + 1});
                cursor = end + 1;
            } else {
                children.push_back({end + 1, cursor - 1, it.gen + 1});
                cursor = end - 1;
            }
        }
        for (auto c = children.rbegin(); c != children.rend(); ++c) stack.push_back(*c);
    }
    for (int j = 0; j < count; ++j)
        if (!paired[j]) throw Error(ErrorKind::InvalidArgument, "m" + std::to_string(j + 1) + " left unpaired");
    return fam;
}


Matching phi(const Section2Instance& inst, const Matching& mu) {
    PathFamily fam = build_path_family(inst, mu, true);
    return shift_along(inst.ref.graph, mu, fam, inst.minus);
}

Matching psi(const Section2Instance& inst, const Matching& mu) {
    PathFamily fam = build_path_family(inst, mu, false);
    return shift_along(inst.ref.graph, mu, fam, inst.plus);
}

TemperleyHost temperley_host(const Refinement& ref, std::size_t root) {
    const auto& outer = ref.faces.faces[ref.faces.infinite];
    bool on = ref.base.edge_count() == 0;
    for (std::size_t d : outer) on = on || ref.base.dart_tail(d) == root;
    if (!on) throw Error(ErrorKind::RootNotOnInfiniteFace, "vertex " + std::to_string(ref.base.vertex(root).id));
    TemperleyHost h;
    h.ref = &ref;
    h.root = root;
    h.mask.assign(ref.graph.vertex_count(), 1);
    h.mask[ref.vertex_of[root]] = 0;
    h.graph = ref.graph.induced(h.mask);
    return h;
}

Matching temperley_tree_to_matching(const TemperleyHost& host, const RootedForest& tree) {
    const Refinement& r = *host.ref;
    const PlanarGraph& g = r.base;
    if (tree.roots.size() != 1 || tree.roots[0] != host.root)
        throw Error(ErrorKind::InvalidArgument, "tree must be rooted at the removed vertex");
    check_forest(g, tree);
    std::vector<Id> ids;
    std::vector<char> in_tree(g.edge_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::size_t e = tree.parent_edge[v];
        if (e == SIZE_MAX) continue;
        in_tree[e] = 1;
        ids.push_back(Refinement::half_edge_id(e, g.edge(e).u == v ? 0 : 1));
    }
    // Dual tree on the faces, rooted at the infinite face, through the edges not in the tree.
    const FaceDecomposition& f = r.faces;
    std::vector<char> reached(f.face_count(), 0);
    std::vector<std::size_t> queue{f.infinite};
    reached[f.infinite] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        std::size_t fc = queue[qi];
        for (std::size_t d : f.faces[fc]) {
            std::size_t e = dart_edge(d);
            if (in_tree[e]) continue;
            std::size_t other = f.left_of(reverse_dart(d));
            if (other == fc || reached[other]) continue;
            reached[other] = 1;
            queue.push_back(other);
            ids.push_back(Refinement::half_edge_id(e, f.left_of(2 * e) == other ? 2 : 3));
        }
    }
    if (queue.size() != f.face_count()) throw Error(ErrorKind::InvalidArgument, "complement of the tree does not reach every face");
    Matching m = make_matching(host.graph, std::move(ids));
    check_perfect(host.graph, m);
    return m;
}

RootedForest temperley_matching_to_tree(const TemperleyHost& host, const Matching& mu) {
    const Refinement& r = *host.ref;
    const PlanarGraph& g = r.base;
    check_perfect(host.graph, mu);
    auto mate = mate_in_refinement(r, mu);
    RootedForest t;
    t.host = g.fingerprint();
    t.roots = {host.root};
    t.parent_edge.assign(g.vertex_count(), SIZE_MAX);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (v == host.root) continue;
        std::size_t h = mate[r.vertex_of[v]];
        t.parent_edge[v] = r.half[h].g_edge;
    }
    check_forest(g, t);
    return t;
}

std::vector<std::size_t> reflect_swap(const PlanarGraph& g, const SymmetryCertificate& cert,
                                      const std::vector<std::size_t>& mate, std::size_t a) {
    if (std::find(cert.on_axis.begin(), cert.on_axis.end(), a) == cert.on_axis.end())
        throw Error(ErrorKind::NotOnAxis, "vertex " + std::to_string(g.vertex(a).id));
    auto mirror_mate = [&](std::size_t x) { return cert.edge_image[mate[cert.vertex_image[x]]]; };
    std::vector<std::size_t> out = mate;
    if (mate[a] == mirror_mate(a)) return out;
    std::vector<std::size_t> cyc_primed;
    std::size_t x = a;
    bool use_mu = true;
    std::size_t guard = 0;
    do {
        std::size_t e = use_mu ? mate[x] : mirror_mate(x);
        if (!use_mu) cyc_primed.push_back(e);
        x = g.other(e, x);
        use_mu = !use_mu;
        if (++guard > 2 * g.vertex_count() + 2) throw Error(ErrorKind::CycleDetected, "alternating walk does not close");
    } while (!(x == a && use_mu));
    for (std::size_t e : cyc_primed) {
        out[g.edge(e).u] = e;
        out[g.edge(e).v] = e;
    }
    return out;
}

Matching reflect_swap(const PlanarGraph& g, const SymmetryCertificate& cert, const Matching& mu, std::size_t a) {
    auto mate = mate_edges(g, mu);
    auto swapped = reflect_swap(g, cert, mate, a);
    std::vector<Id> ids;
    for (std::size_t v = 0; v < swapped.size(); ++v) {
        if (swapped[v] == SIZE_MAX) throw Error(ErrorKind::InvalidArgument, "matching is not perfect");
        if (g.edge(swapped[v]).u == v) ids.push_back(g.edge(swapped[v]).id);
    }
    return make_matching(g, std::move(ids));
}

}  // namespace dimerforge
