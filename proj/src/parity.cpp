#include "dimerforge/parity.hpp"

#include <algorithm>
#include <functional>

namespace dimerforge {

bool strictly_inside(const std::vector<Point>& poly, const Point& p) {
    const std::size_t n = poly.size();
    int winding = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        int o = orientation(a, b, p);
        if (o == 0 && on_segment(a, b, p)) return false;
        if (a.y <= p.y) {
            if (b.y > p.y && o > 0) ++winding;
        } else if (b.y <= p.y && o < 0) {
            --winding;
        }
    }
    return winding != 0;
}

InteriorCount interior_vertex_count(const PlanarGraph& g, const std::vector<std::size_t>& cycle) {
    const std::size_t n = cycle.size();
    if (n < 3) throw Error(ErrorKind::NotACycle, "a cycle needs at least three vertices");
    std::vector<char> on_c(g.vertex_count(), 0);
    std::vector<char> edge_on_c(g.edge_count(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (cycle[i] >= g.vertex_count()) throw Error(ErrorKind::NotACycle, "vertex out of range");
        if (on_c[cycle[i]]) throw Error(ErrorKind::NotACycle, "vertex " + std::to_string(g.vertex(cycle[i]).id) + " repeats");
        on_c[cycle[i]] = 1;
        auto e = g.edge_between(cycle[i], cycle[(i + 1) % n]);
        if (!e)
            throw Error(ErrorKind::NotACycle, "no edge between " + std::to_string(g.vertex(cycle[i]).id) + " and " +
                                                  std::to_string(g.vertex(cycle[(i + 1) % n]).id));
        edge_on_c[*e] = 1;
    }
    std::vector<Point> poly;
    for (std::size_t v : cycle) poly.push_back(g.vertex(v).pos);

    InteriorCount c;
    c.length = n;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!on_c[v] && strictly_inside(poly, g.vertex(v).pos)) ++c.vertices;
    std::vector<char> edge_inside(g.edge_count(), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (edge_on_c[e]) continue;
        const Point& a = g.vertex(g.edge(e).u).pos;
        const Point& b = g.vertex(g.edge(e).v).pos;
        Point mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
        if (strictly_inside(poly, mid)) {
            edge_inside[e] = 1;
            ++c.edges;
        }
    }
    FaceDecomposition faces = trace_faces(g);
    for (std::size_t f = 0; f < faces.face_count(); ++f) {
        if (f == faces.infinite) continue;
        bool inside = true;
        for (std::size_t d : faces.faces[f]) {
            std::size_t e = dart_edge(d);
            if (!edge_on_c[e]) {
                inside = edge_inside[e];
                break;
            }
        }
        if (inside) ++c.faces;
    }
    return c;
}

std::vector<std::vector<std::size_t>> enumerate_simple_cycles(const PlanarGraph& g, std::size_t limit) {
    std::vector<std::vector<std::size_t>> out;
    const std::size_t n = g.vertex_count();
    std::vector<char> used(n, 0);
    std::vector<std::size_t> path;
    std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t start, std::size_t x) {
        if (out.size() >= limit) return;
        for (std::size_t e : g.rotation(x)) {
            std::size_t y = g.other(e, x);
            if (y == start && path.size() >= 3 && path[1] < path.back()) {
                out.push_back(path);
                if (out.size() >= limit) return;
            }
            if (y <= start || used[y]) continue;
            used[y] = 1;
            path.push_back(y);
            dfs(start, y);
            path.pop_back();
            used[y] = 0;
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        used[s] = 1;
        path = {s};
        dfs(s, s);
        used[s] = 0;
    }
    return out;
}

}  // namespace dimerforge
