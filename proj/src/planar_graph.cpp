#include "dimerforge/planar_graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <tuple>
#include <numeric>
#include <sstream>

namespace dimerforge {

namespace {

std::uint64_t ends_key(std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

struct Fnv {
    std::uint64_t h = 1469598103934665603ull;
    void add(std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    }
    void add(const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        add(s.size());
    }
};

int half_plane(const Rational& dx, const Rational& dy) {
    return (sgn(dy) > 0 || (sgn(dy) == 0 && sgn(dx) > 0)) ? 0 : 1;
}

// Counterclockwise order of directions starting at the positive x axis.
bool angle_less(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
    int ha = half_plane(ax, ay), hb = half_plane(bx, by);
    if (ha != hb) return ha < hb;
    return sgn(ax * by - ay * bx) > 0;
}

}  // namespace

void PlanarGraph::finish() {
    vertex_by_id_.clear();
    edge_by_id_.clear();
    edge_by_ends_.clear();
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!vertex_by_id_.emplace(vertices_[i].id, i).second)
            throw Error(ErrorKind::ParseError, "duplicate vertex id " + std::to_string(vertices_[i].id));
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!edge_by_id_.emplace(e.id, i).second)
            throw Error(ErrorKind::ParseError, "duplicate edge id " + std::to_string(e.id));
        if (e.u == e.v) throw Error(ErrorKind::NotSimple, "loop at edge " + std::to_string(e.id));
        if (!edge_by_ends_.emplace(ends_key(e.u, e.v), i).second)
            throw Error(ErrorKind::NotSimple, "parallel edge " + std::to_string(e.id));
        if (sgn(e.weight) < 0) throw Error(ErrorKind::ParseError, "negative weight on edge " + std::to_string(e.id));
    }
    rot_pos_.assign(2 * edges_.size(), 0);
    std::vector<std::size_t> seen(2 * edges_.size(), 0);
    for (std::size_t v = 0; v < rotation_.size(); ++v) {
        for (std::size_t k = 0; k < rotation_[v].size(); ++k) {
            std::size_t e = rotation_[v][k];
            if (e >= edges_.size() || (edges_[e].u != v && edges_[e].v != v))
                throw Error(ErrorKind::EmbeddingError, "rotation lists a non-incident edge");
            std::size_t d = dart_from(e, v);
            rot_pos_[d] = k;
            ++seen[d];
        }
    }
    for (std::size_t d = 0; d < seen.size(); ++d)
        if (seen[d] != 1) throw Error(ErrorKind::EmbeddingError, "rotation system incomplete");
    Fnv f;
    f.add(vertices_.size());
    for (const auto& v : vertices_) f.add(static_cast<std::uint64_t>(v.id));
    for (const auto& e : edges_) {
        f.add(static_cast<std::uint64_t>(e.id));
        f.add(static_cast<std::uint64_t>(vertices_[e.u].id));
        f.add(static_cast<std::uint64_t>(vertices_[e.v].id));
        f.add(format_rational(e.weight));
    }
    fingerprint_ = f.h;
}

PlanarGraph PlanarGraph::from_rotation(std::vector<Vertex> vertices, std::vector<Edge> edges,
                                       std::vector<std::vector<std::size_t>> rotation) {
    PlanarGraph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    g.rotation_ = std::move(rotation);
    g.rotation_.resize(g.vertices_.size());
    for (const auto& e : g.edges_)
        if (e.u >= g.vertices_.size() || e.v >= g.vertices_.size())
            throw Error(ErrorKind::ParseError, "edge endpoint out of range");
    g.finish();
    return g;
}

PlanarGraph PlanarGraph::from_coordinates(std::vector<Vertex> vertices, std::vector<Edge> edges) {
    const std::size_t n = vertices.size();
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n) throw Error(ErrorKind::ParseError, "edge endpoint out of range");
        if (e.u == e.v) throw Error(ErrorKind::NotSimple, "loop at edge " + std::to_string(e.id));
    }
    {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vertices[a].pos < vertices[b].pos; });
        for (std::size_t i = 1; i < n; ++i)
            if (vertices[order[i]].pos == vertices[order[i - 1]].pos)
                throw Error(ErrorKind::EmbeddingError, "vertices " + std::to_string(vertices[order[i]].id) + " and " +
                                                           std::to_string(vertices[order[i - 1]].id) + " coincide");
    }
    // Bounding boxes first; exact tests only when they overlap.
    struct Box {
        Rational x0, x1, y0, y1;
    };
    std::vector<Box> box(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Point& a = vertices[edges[i].u].pos;
        const Point& b = vertices[edges[i].v].pos;
        box[i] = {std::min(a.x, b.x), std::max(a.x, b.x), std::min(a.y, b.y), std::max(a.y, b.y)};
    }
    auto crossing = [&](std::size_t i, std::size_t j) {
        return Error(ErrorKind::EmbeddingError,
                     "edges " + std::to_string(edges[i].id) + " and " + std::to_string(edges[j].id) + " cross");
    };
    for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            if (box[i].x1 < box[j].x0 || box[j].x1 < box[i].x0 || box[i].y1 < box[j].y0 || box[j].y1 < box[i].y0)
                continue;
            const Edge& a = edges[i];
            const Edge& b = edges[j];
            const Point &p = vertices[a.u].pos, &q = vertices[a.v].pos;
            const Point &r = vertices[b.u].pos, &s = vertices[b.v].pos;
            std::size_t shared = n;
            if (a.u == b.u || a.u == b.v) shared = a.u;
            if (a.v == b.u || a.v == b.v) {
                if (shared != n) throw Error(ErrorKind::NotSimple, "parallel edge " + std::to_string(b.id));
                shared = a.v;
            }
            if (shared == n) {
                if (segments_intersect(p, q, r, s)) throw crossing(i, j);
            } else {
                const Point& c = vertices[shared].pos;
                const Point& x = vertices[a.u == shared ? a.v : a.u].pos;
                const Point& y = vertices[b.u == shared ? b.v : b.u].pos;
                if (on_segment(c, x, y) || on_segment(c, y, x)) throw crossing(i, j);
            }
        }
    }
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t w = 0; w < n; ++w) {
            if (w == edges[i].u || w == edges[i].v) continue;
            const Point& p = vertices[w].pos;
            if (p.x < box[i].x0 || p.x > box[i].x1 || p.y < box[i].y0 || p.y > box[i].y1) continue;
            if (on_segment(vertices[edges[i].u].pos, vertices[edges[i].v].pos, p))
                throw Error(ErrorKind::EmbeddingError,
                            "vertex " + std::to_string(vertices[w].id) + " lies on edge " + std::to_string(edges[i].id));
        }
    std::vector<std::vector<std::size_t>> rotation(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        rotation[edges[i].u].push_back(i);
        rotation[edges[i].v].push_back(i);
    }
    for (std::size_t v = 0; v < n; ++v) {
        const Point& c = vertices[v].pos;
        auto dir = [&](std::size_t e) {
            const Point& o = vertices[edges[e].u == v ? edges[e].v : edges[e].u].pos;
            return std::pair<Rational, Rational>(o.x - c.x, o.y - c.y);
        };
        std::sort(rotation[v].begin(), rotation[v].end(), [&](std::size_t a, std::size_t b) {
            auto da = dir(a);
            auto db = dir(b);
            return angle_less(da.first, da.second, db.first, db.second);
        });
    }
    return from_rotation(std::move(vertices), std::move(edges), std::move(rotation));
}

std::optional<std::size_t> PlanarGraph::vertex_index(Id id) const {
    auto it = vertex_by_id_.find(id);
    if (it == vertex_by_id_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> PlanarGraph::edge_index(Id id) const {
    auto it = edge_by_id_.find(id);
    if (it == edge_by_id_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> PlanarGraph::edge_between(std::size_t a, std::size_t b) const {
    auto it = edge_by_ends_.find(ends_key(a, b));
    if (it == edge_by_ends_.end()) return std::nullopt;
    return it->second;
}

bool PlanarGraph::connected() const {
    if (vertices_.empty()) return true;
    std::vector<char> seen(vertices_.size(), 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t e : rotation_[v]) {
            std::size_t w = other(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == vertices_.size();
}

PlanarGraph PlanarGraph::induced(const std::vector<char>& keep) const {
    std::vector<std::size_t> vmap(vertices_.size(), SIZE_MAX), emap(edges_.size(), SIZE_MAX);
    std::vector<Vertex> vs;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (keep[i]) {
            vmap[i] = vs.size();
            vs.push_back(vertices_[i]);
        }
    std::vector<Edge> es;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (keep[e.u] && keep[e.v]) {
            emap[i] = es.size();
            es.push_back({e.id, vmap[e.u], vmap[e.v], e.weight});
        }
    }
    std::vector<std::vector<std::size_t>> rot(vs.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (!keep[i]) continue;
        for (std::size_t e : rotation_[i])
            if (emap[e] != SIZE_MAX) rot[vmap[i]].push_back(emap[e]);
    }
    return from_rotation(std::move(vs), std::move(es), std::move(rot));
}

PlanarGraph PlanarGraph::with_weights(const std::vector<Rational>& weights) const {
    std::vector<Edge> es = edges_;
    for (std::size_t i = 0; i < es.size(); ++i) es[i].weight = weights[i];
    return from_rotation(vertices_, std::move(es), rotation_);
}

PlanarGraph load_graph(std::string_view text) {
    std::vector<Vertex> vs;
    std::vector<std::tuple<Id, Id, Id, Rational, int>> raw;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& why) {
        return Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + why);
    };
    auto parse_id = [&](const std::string& tok) -> Id {
        if (tok.empty() || tok.size() > 18 || tok.find_first_not_of("0123456789") != std::string::npos)
            throw fail("bad id '" + tok + "'");
        return std::stoll(tok);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        try {
            if (tok[0] == "v") {
                if (tok.size() != 4) throw fail("vertex line needs 3 fields");
                vs.push_back({parse_id(tok[1]), {parse_rational(tok[2]), parse_rational(tok[3])}, {}});
            } else if (tok[0] == "e") {
                if (tok.size() != 4 && tok.size() != 5) throw fail("edge line needs 3 or 4 fields");
                Rational w = tok.size() == 5 ? parse_rational(tok[4]) : Rational(1);
                if (sgn(w) < 0) throw fail("negative weight");
                raw.emplace_back(parse_id(tok[1]), parse_id(tok[2]), parse_id(tok[3]), w, lineno);
            } else {
                throw fail("unknown record '" + tok[0] + "'");
            }
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::ParseError && std::string(e.what()).find("line ") == std::string::npos)
                throw fail(e.what());
            throw;
        }
    }
    std::unordered_map<Id, std::size_t> index;
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (!index.emplace(vs[i].id, i).second)
            throw Error(ErrorKind::ParseError, "duplicate vertex id " + std::to_string(vs[i].id));
    std::vector<Edge> es;
    for (auto& [id, u, v, w, ln] : raw) {
        auto a = index.find(u), b = index.find(v);
        if (a == index.end() || b == index.end())
            throw Error(ErrorKind::ParseError, "line " + std::to_string(ln) + ": unknown endpoint");
        es.push_back({id, a->second, b->second, w});
    }
    PlanarGraph g = PlanarGraph::from_coordinates(std::move(vs), std::move(es));
    if (!g.connected()) throw Error(ErrorKind::Disconnected, "graph is not connected");
    FaceDecomposition f = trace_faces(g);
    if (static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) + static_cast<long>(f.face_count()) != 2)
        throw Error(ErrorKind::EmbeddingError, "Euler check failed");
    return g;
}

PlanarGraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_graph(ss.str());
}

std::string save_graph(const PlanarGraph& g) {
    std::ostringstream out;
    for (const auto& v : g.vertices())
        out << "v " << v.id << ' ' << format_rational(v.pos.x) << ' ' << format_rational(v.pos.y) << '\n';
    for (const auto& e : g.edges()) {
        out << "e " << e.id << ' ' << g.vertex(e.u).id << ' ' << g.vertex(e.v).id;
        if (e.weight != 1) out << ' ' << format_rational(e.weight);
        out << '\n';
    }
    return out.str();
}

Rational signed_area(const PlanarGraph& g, const std::vector<std::size_t>& darts) {
    Rational twice = 0;
    for (std::size_t d : darts) {
        const Point& a = g.vertex(g.dart_tail(d)).pos;
        const Point& b = g.vertex(g.dart_head(d)).pos;
        twice += a.x * b.y - a.y * b.x;
    }
    return twice / 2;
}

FaceDecomposition trace_faces(const PlanarGraph& g, std::optional<std::size_t> outer_dart) {
    if (!g.connected()) throw Error(ErrorKind::Disconnected, "face tracing needs a connected graph");
    FaceDecomposition f;
    const std::size_t darts = 2 * g.edge_count();
    f.face_of_dart.assign(darts, SIZE_MAX);
    for (std::size_t start = 0; start < darts; ++start) {
        if (f.face_of_dart[start] != SIZE_MAX) continue;
        std::vector<std::size_t> walk;
        std::size_t d = start;
        do {
            f.face_of_dart[d] = f.faces.size();
            walk.push_back(d);
            std::size_t h = g.dart_head(d);
            std::size_t r = reverse_dart(d);
            std::size_t deg = g.degree(h);
            std::size_t e = g.rotation(h)[(g.rotation_position(r) + deg - 1) % deg];
            d = g.dart_from(e, h);
        } while (d != start);
        f.faces.push_back(std::move(walk));
    }
    if (f.faces.empty()) {
        // A single vertex: one face, infinite.
        f.faces.push_back({});
        f.infinite = 0;
        return f;
    }
    if (outer_dart) {
        f.infinite = f.face_of_dart[*outer_dart];
    } else {
        Rational best;
        for (std::size_t i = 0; i < f.faces.size(); ++i) {
            Rational a = signed_area(g, f.faces[i]);
            if (i == 0 || a < best) {
                best = a;
                f.infinite = i;
            }
        }
    }
    return f;
}

PlanarGraph planar_dual(const PlanarGraph& g, const FaceDecomposition& faces, bool include_infinite) {
    std::vector<std::size_t> vindex(faces.face_count(), SIZE_MAX);
    std::vector<Vertex> vs;
    Rational minx, maxx, miny;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const Point& p = g.vertex(i).pos;
        if (i == 0 || p.x < minx) minx = p.x;
        if (i == 0 || p.x > maxx) maxx = p.x;
        if (i == 0 || p.y < miny) miny = p.y;
    }
    for (std::size_t fi = 0; fi < faces.face_count(); ++fi) {
        Vertex v;
        v.id = static_cast<Id>(fi);
        if (fi == faces.infinite) {
            if (!include_infinite) continue;
            v.tag = {VertexTag::Kind::InfiniteAux, static_cast<Id>(fi)};
            v.pos = {(minx + maxx) / 2, miny - 1};
        } else {
            v.tag = {VertexTag::Kind::FaceCenter, static_cast<Id>(fi)};
            Rational sx = 0, sy = 0;
            for (std::size_t d : faces.faces[fi]) {
                sx += g.vertex(g.dart_tail(d)).pos.x;
                sy += g.vertex(g.dart_tail(d)).pos.y;
            }
            std::size_t k = faces.faces[fi].size();
            v.pos = {sx / static_cast<long>(k), sy / static_cast<long>(k)};
        }
        vindex[fi] = vs.size();
        vs.push_back(v);
    }
    std::vector<Edge> es;
    std::vector<std::size_t> dual_of(g.edge_count(), SIZE_MAX);
    std::unordered_map<std::uint64_t, std::size_t> pairs;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::size_t a = faces.left_of(2 * e), b = faces.left_of(2 * e + 1);
        if (vindex[a] == SIZE_MAX || vindex[b] == SIZE_MAX) continue;
        if (a == b) throw Error(ErrorKind::DualNotSimple, "bridge " + std::to_string(g.edge(e).id) + " gives a dual loop");
        std::uint64_t key = ends_key(a, b);
        if (!pairs.emplace(key, e).second)
            throw Error(ErrorKind::DualNotSimple, "faces " + std::to_string(a) + " and " + std::to_string(b) +
                                                      " share more than one edge");
        dual_of[e] = es.size();
        es.push_back({g.edge(e).id, vindex[a], vindex[b], 1});
    }
    std::vector<std::vector<std::size_t>> rot(vs.size());
    for (std::size_t fi = 0; fi < faces.face_count(); ++fi) {
        if (vindex[fi] == SIZE_MAX) continue;
        auto& r = rot[vindex[fi]];
        for (std::size_t d : faces.faces[fi])
            if (dual_of[dart_edge(d)] != SIZE_MAX) r.push_back(dual_of[dart_edge(d)]);
        if (fi == faces.infinite) std::reverse(r.begin(), r.end());
    }
    return PlanarGraph::from_rotation(std::move(vs), std::move(es), std::move(rot));
}

PlanarGraph planar_dual(const PlanarGraph& g, bool include_infinite) {
    return planar_dual(g, trace_faces(g), include_infinite);
}

BoundaryWalk boundary_walk_ccw(const PlanarGraph& g, const FaceDecomposition& faces) {
    BoundaryWalk w;
    const auto& outer = faces.faces[faces.infinite];
    if (outer.empty()) {
        if (g.vertex_count() == 1) w.vertices.push_back(0);
        return w;
    }
    for (auto it = outer.rbegin(); it != outer.rend(); ++it) {
        std::size_t d = reverse_dart(*it);
        w.darts.push_back(d);
        w.vertices.push_back(g.dart_tail(d));
    }
    return w;
}

BoundaryPath validate_boundary_path(const PlanarGraph& g, const FaceDecomposition& faces,
                                    const std::vector<std::size_t>& path, bool check_degrees) {
    if (path.empty() || path.size() % 2 == 0)
        throw Error(ErrorKind::NotAPath, "boundary path needs an odd number of vertices");
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i] >= g.vertex_count()) throw Error(ErrorKind::NotAPath, "unknown vertex");
        for (std::size_t j = 0; j < i; ++j)
            if (path[i] == path[j]) throw Error(ErrorKind::NotAPath, "repeated vertex");
        if (i > 0 && !g.edge_between(path[i - 1], path[i]))
            throw Error(ErrorKind::NotAPath, "vertices " + std::to_string(g.vertex(path[i - 1]).id) + " and " +
                                                 std::to_string(g.vertex(path[i]).id) + " are not adjacent");
    }
    BoundaryWalk walk = boundary_walk_ccw(g, faces);
    std::vector<char> on_outer(g.vertex_count(), 0);
    for (std::size_t v : walk.vertices) on_outer[v] = 1;
    for (std::size_t v : path)
        if (!on_outer[v]) throw Error(ErrorKind::NotOnInfiniteFace, "vertex " + std::to_string(g.vertex(v).id));
    for (std::size_t i = 1; check_degrees && i < path.size(); i += 2)
        if (g.degree(path[i]) != 2)
            throw Error(ErrorKind::BadDegree, "vertex " + std::to_string(g.vertex(path[i]).id) + " has degree " +
                                                  std::to_string(g.degree(path[i])));
    BoundaryPath out;
    out.vertices = path;
    out.n = static_cast<int>((path.size() + 1) / 2);
    const std::size_t L = walk.vertices.size();
    for (int dir = 0; dir < 2; ++dir) {
        for (std::size_t s = 0; s < L; ++s) {
            bool ok = true;
            for (std::size_t k = 0; k < path.size() && ok; ++k) {
                std::size_t pos = dir == 0 ? (s + k) % L : (s + L - k % L) % L;
                ok = walk.vertices[pos] == path[k];
            }
            if (ok && path.size() <= L) {
                out.along_ccw = dir == 0;
                out.walk_start = s;
                return out;
            }
        }
    }
    throw Error(ErrorKind::NotOnInfiniteFace, "path is not a contiguous stretch of the infinite face boundary");
}

BoundaryPath validate_boundary_path(const PlanarGraph& g, const std::vector<Id>& path_ids) {
    return validate_boundary_path(g, trace_faces(g), parse_id_list(g, path_ids));
}

std::vector<std::size_t> parse_id_list(const PlanarGraph& g, const std::vector<Id>& ids) {
    std::vector<std::size_t> out;
    for (Id id : ids) {
        auto v = g.vertex_index(id);
        if (!v) throw Error(ErrorKind::NotAPath, "unknown vertex id " + std::to_string(id));
        out.push_back(*v);
    }
    return out;
}

SymmetryCertificate check_reflection_symmetry(const PlanarGraph& g, const Rational& axis) {
    SymmetryCertificate cert;
    cert.axis = axis;
    std::map<Point, std::size_t> at;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) at.emplace(g.vertex(i).pos, i);
    cert.vertex_image.resize(g.vertex_count());
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        Point p = g.vertex(i).pos;
        Point q{p.x, 2 * axis - p.y};
        auto it = at.find(q);
        if (it == at.end())
            throw Error(ErrorKind::NotSymmetric, "vertex " + std::to_string(g.vertex(i).id) + " has no mirror image");
        cert.vertex_image[i] = it->second;
        if (p.y == axis) cert.on_axis.push_back(i);
    }
    cert.edge_image.resize(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto m = g.edge_between(cert.vertex_image[g.edge(e).u], cert.vertex_image[g.edge(e).v]);
        if (!m) throw Error(ErrorKind::NotSymmetric, "edge " + std::to_string(g.edge(e).id) + " has no mirror image");
        if (g.edge(*m).weight != g.edge(e).weight)
            throw Error(ErrorKind::WeightMismatch, "edges " + std::to_string(g.edge(e).id) + " and " +
                                                       std::to_string(g.edge(*m).id));
        cert.edge_image[e] = *m;
    }
    std::sort(cert.on_axis.begin(), cert.on_axis.end(),
              [&](std::size_t a, std::size_t b) { return g.vertex(a).pos.x < g.vertex(b).pos.x; });
    return cert;
}

}  // namespace dimerforge
