#include "dimerforge/generators.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <set>

#include "dimerforge/matchings.hpp"
#include "dimerforge/symmetric.hpp"

namespace dimerforge {

namespace {

using P2 = std::pair<int, int>;
using Side = std::pair<P2, P2>;

Side side_of(P2 a, P2 b) { return a < b ? Side{a, b} : Side{b, a}; }

bool coin(Rng& rng, double p) { return rng.uniform() < p; }

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng.below(n)); }

// Grows a polyomino from `start` inside [0,w) x [ylo,yhi).
std::set<P2> grow_cells(Rng& rng, int k, int w, int ylo, int yhi, P2 start) {
    std::set<P2> cells{start};
    static const std::array<P2, 4> dirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    for (int tries = 0; static_cast<int>(cells.size()) < k && tries < 200; ++tries) {
        auto it = cells.begin();
        std::advance(it, pick(rng, cells.size()));
        P2 d = dirs[pick(rng, 4)];
        P2 c{it->first + d.first, it->second + d.second};
        if (c.first < 0 || c.first >= w || c.second < ylo || c.second >= yhi) continue;
        cells.insert(c);
    }
    return cells;
}

struct Sketch {
    std::set<P2> points;
    std::map<Side, int> sides;  // number of cells on each side, 0 for diagonals and pendants
};

void add_cell(Sketch& s, P2 c) {
    int x = 2 * c.first, y = 2 * c.second;
    std::array<P2, 4> q{{{x, y}, {x + 2, y}, {x + 2, y + 2}, {x, y + 2}}};
    for (int i = 0; i < 4; ++i) {
        s.points.insert(q[i]);
        ++s.sides[side_of(q[i], q[(i + 1) % 4])];
    }
}

std::map<P2, int> degrees(const Sketch& s) {
    std::map<P2, int> d;
    for (const auto& [sd, _] : s.sides) {
        ++d[sd.first];
        ++d[sd.second];
    }
    return d;
}

bool sketch_connected(const Sketch& s) {
    if (s.points.empty()) return false;
    std::map<P2, std::vector<P2>> adj;
    for (const auto& [sd, _] : s.sides) {
        adj[sd.first].push_back(sd.second);
        adj[sd.second].push_back(sd.first);
    }
    std::set<P2> seen{*s.points.begin()};
    std::vector<P2> stack{*s.points.begin()};
    while (!stack.empty()) {
        P2 p = stack.back();
        stack.pop_back();
        for (P2 q : adj[p])
            if (seen.insert(q).second) stack.push_back(q);
    }
    return seen.size() == s.points.size();
}

// Removes the given sides if every endpoint keeps degree two and the sketch stays connected.
bool try_remove(Sketch& s, const std::vector<Side>& remove) {
    Sketch t = s;
    for (const Side& sd : remove)
        if (!t.sides.erase(sd)) return false;
    auto d = degrees(t);
    for (const Side& sd : remove)
        if (d[sd.first] < 2 || d[sd.second] < 2) return false;
    if (!sketch_connected(t)) return false;
    s = std::move(t);
    return true;
}

void split_side(Sketch& s, const Side& sd) {
    P2 mid{(sd.first.first + sd.second.first) / 2, (sd.first.second + sd.second.second) / 2};
    int c = s.sides[sd];
    s.sides.erase(sd);
    s.points.insert(mid);
    s.sides[side_of(sd.first, mid)] = c;
    s.sides[side_of(mid, sd.second)] = c;
}

PlanarGraph realize(const Sketch& s, const std::map<Side, Rational>& weights = {}) {
    std::map<P2, std::size_t> index;
    std::vector<Vertex> vs;
    for (P2 p : s.points) {
        index[p] = vs.size();
        vs.push_back({static_cast<Id>(vs.size()), {Rational(p.first), Rational(p.second)}, {}});
    }
    std::vector<Edge> es;
    for (const auto& [sd, _] : s.sides) {
        auto w = weights.find(sd);
        es.push_back({static_cast<Id>(es.size()), index[sd.first], index[sd.second],
                      w == weights.end() ? Rational(1) : w->second});
    }
    return PlanarGraph::from_coordinates(std::move(vs), std::move(es));
}

std::optional<std::size_t> point_index(const PlanarGraph& g, P2 p) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (g.vertex(i).pos == Point{Rational(p.first), Rational(p.second)}) return i;
    return std::nullopt;
}

bool on_infinite(const PlanarGraph& g, std::size_t v) {
    FaceDecomposition f = trace_faces(g);
    for (std::size_t d : f.faces[f.infinite])
        if (g.dart_tail(d) == v) return true;
    return false;
}

// Hangs a leaf at a random vertex, pointing into the infinite face.
void add_pendant(Rng& rng, Sketch& s) {
    static const std::array<P2, 8> dirs{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    std::vector<P2> pts(s.points.begin(), s.points.end());
    for (int tries = 0; tries < 20; ++tries) {
        P2 p = pts[pick(rng, pts.size())];
        P2 d = dirs[pick(rng, dirs.size())];
        P2 q{p.first + d.first, p.second + d.second};
        if (s.points.count(q)) continue;
        Sketch t = s;
        t.points.insert(q);
        t.sides[side_of(p, q)] = 0;
        try {
            PlanarGraph g = realize(t);
            if (!on_infinite(g, *point_index(g, q))) continue;
        } catch (const Error&) {
            continue;
        }
        s = std::move(t);
        return;
    }
}

Rational small_weight(Rng& rng) { return Rational(static_cast<long>(1 + rng.below(3))); }

std::vector<std::size_t> walk_of(const PlanarGraph& g) { return boundary_walk_ccw(g, trace_faces(g)).vertices; }

std::vector<Id> ids_of(const PlanarGraph& g, const std::vector<std::size_t>& idx) {
    std::vector<Id> out;
    for (std::size_t i : idx) out.push_back(g.vertex(i).id);
    return out;
}

[[noreturn]] void exhausted(const std::string& what) {
    throw Error(ErrorKind::GenerationExhausted, "no " + what + " instance found");
}

}  // namespace

PlanarGraph random_plane_graph(Rng& rng, const PlaneGraphOptions& opt) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        int k = opt.min_cells + static_cast<int>(rng.below(static_cast<std::uint64_t>(opt.max_cells - opt.min_cells + 1)));
        P2 start{static_cast<int>(rng.below(opt.grid)), static_cast<int>(rng.below(opt.grid))};
        std::set<P2> cells = grow_cells(rng, k, opt.grid, 0, opt.grid, start);
        Sketch s;
        for (P2 c : cells) add_cell(s, c);
        if (s.points.size() > opt.max_vertices) continue;
        for (P2 c : cells)
            if (coin(rng, opt.diagonal_probability)) {
                int x = 2 * c.first, y = 2 * c.second;
                s.sides[coin(rng, 0.5) ? side_of({x, y}, {x + 2, y + 2}) : side_of({x + 2, y}, {x, y + 2})] = 0;
            }
        std::vector<Side> interior;
        for (const auto& [sd, c] : s.sides)
            if (c == 2) interior.push_back(sd);
        for (const Side& sd : interior)
            if (coin(rng, opt.deletion_probability)) try_remove(s, {sd});
        for (int i = 0; i < opt.subdivisions && s.points.size() < opt.max_vertices; ++i) {
            if (!coin(rng, 0.5)) continue;
            std::vector<Side> boundary;
            for (const auto& [sd, c] : s.sides)
                if (c == 1 && std::abs(sd.first.first - sd.second.first) + std::abs(sd.first.second - sd.second.second) == 2)
                    boundary.push_back(sd);
            if (!boundary.empty()) split_side(s, boundary[pick(rng, boundary.size())]);
        }
        for (int i = 0; i < opt.pendants && s.points.size() < opt.max_vertices; ++i)
            if (coin(rng, 0.5)) add_pendant(rng, s);
        std::map<Side, Rational> weights;
        if (opt.weighted)
            for (const auto& [sd, _] : s.sides) weights[sd] = small_weight(rng);
        try {
            PlanarGraph g = realize(s, weights);
            if (g.connected()) return g;
        } catch (const Error&) {
        }
    }
    exhausted("plane graph");
}

InstanceFile random_section2(Rng& rng, std::size_t max_h) {
    PlaneGraphOptions opt;
    opt.max_cells = 3;
    opt.max_vertices = 9;
    for (int attempt = 0; attempt < 200; ++attempt) {
        PlanarGraph g = random_plane_graph(rng, opt);
        std::vector<std::size_t> walk = walk_of(g);
        const std::size_t L = walk.size();
        int n = 1 + static_cast<int>(rng.below(3));
        std::size_t len = static_cast<std::size_t>(2 * n - 1);
        if (len > L) continue;
        std::size_t s = pick(rng, L);
        std::vector<std::size_t> path;
        for (std::size_t i = 0; i < len; ++i) path.push_back(walk[(s + i) % L]);
        bool ok = true;
        for (std::size_t i = 1; i < len; i += 2)
            if (g.degree(path[i]) != 2) ok = false;
        if (!ok) continue;
        try {
            Section2Instance inst = make_section2(g, ids_of(g, path));
            if (inst.ref.graph.vertex_count() > max_h) continue;
        } catch (const Error&) {
            continue;
        }
        InstanceFile f;
        f.kind = "section2";
        f.graph = g;
        f.path = ids_of(g, path);
        return f;
    }
    exhausted("section2");
}

InstanceFile random_symmetric(Rng& rng, bool matchable, int max_cells) {
    for (int attempt = 0; attempt < 400; ++attempt) {
        int k = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_cells)));
        std::set<P2> upper = grow_cells(rng, k, 4, 0, 2, {static_cast<int>(rng.below(4)), 0});
        Sketch s;
        for (P2 c : upper) {
            add_cell(s, c);
            add_cell(s, {c.first, -1 - c.second});
        }
        auto mirror = [](Side sd) {
            return side_of({sd.first.first, -sd.first.second}, {sd.second.first, -sd.second.second});
        };
        std::vector<Side> axis, upper_interior;
        for (const auto& [sd, c] : s.sides) {
            if (sd.first.second == 0 && sd.second.second == 0)
                axis.push_back(sd);
            else if (c == 2 && sd.first.second + sd.second.second > 0)
                upper_interior.push_back(sd);
        }
        for (const Side& sd : axis)
            if (coin(rng, 0.5)) try_remove(s, {sd});
        for (const Side& sd : upper_interior)
            if (coin(rng, 0.2)) try_remove(s, {sd, mirror(sd)});
        std::map<Side, Rational> weights;
        if (coin(rng, 0.5))
            for (const auto& [sd, _] : s.sides)
                if (sd.first.second + sd.second.second >= 0 && !weights.count(sd)) {
                    Rational w = small_weight(rng);
                    weights[sd] = w;
                    weights[mirror(sd)] = w;
                }
        PlanarGraph g;
        try {
            g = realize(s, weights);
        } catch (const Error&) {
            continue;
        }
        if (!g.connected() || g.vertex_count() > 16) continue;
        SymmetryCertificate cert = check_reflection_symmetry(g, Rational(0));
        if (cert.on_axis.size() < 2) continue;
        // With an even axis the last vertex is a b_j, which leaves every a_j free for marking.
        std::size_t root = matchable || coin(rng, 0.5) ? cert.on_axis.back() : cert.on_axis.front();
        if (!on_infinite(g, root)) continue;

        std::vector<char> is_a(g.vertex_count(), 0);
        if (matchable) {
            if (cert.on_axis.size() % 2) continue;
            if (count_matchings(g) == 0) continue;
            for (std::size_t x : label_axis(g, cert).a) is_a[x] = 1;
        }
        std::vector<char> on_ax(g.vertex_count(), 0);
        for (std::size_t x : cert.on_axis) on_ax[x] = 1;
        std::vector<char> used(g.vertex_count(), 0);
        std::vector<Id> marked;
        for (std::size_t x : cert.on_axis) {
            if (x == root || (matchable && !is_a[x])) continue;
            if (!coin(rng, 0.85)) continue;
            std::vector<std::size_t> options;
            for (std::size_t e : g.rotation(x)) {
                std::size_t y = g.other(e, x);
                if (!on_ax[y] && !used[y]) options.push_back(e);
            }
            if (options.empty()) continue;
            std::size_t e = options[pick(rng, options.size())];
            used[x] = used[g.other(e, x)] = 1;
            marked.push_back(g.edge(e).id);
        }
        InstanceFile f;
        f.kind = matchable ? "symmetric-matching" : "symmetric";
        f.graph = g;
        f.axis = Rational(0);
        f.root = g.vertex(root).id;
        f.marked = marked;
        return f;
    }
    exhausted("symmetric");
}

InstanceFile random_tea(Rng& rng, bool tec, int max_n) {
    PlaneGraphOptions opt;
    opt.min_cells = 3;
    opt.max_cells = 5;
    opt.subdivisions = 3;
    opt.pendants = 0;
    opt.max_vertices = 14;
    for (int attempt = 0; attempt < 200; ++attempt) {
        PlanarGraph g = random_plane_graph(rng, opt);
        std::vector<std::size_t> walk = walk_of(g);
        const std::size_t L = walk.size();
        int n = coin(rng, 0.75) ? max_n : static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n + 1)));
        const std::size_t k = static_cast<std::size_t>(2 * n + 1);
        if (2 * k > L) continue;
        std::size_t t = pick(rng, L);
        std::vector<std::size_t> vp(k);
        for (std::size_t i = 0; i < k; ++i) vp[i] = walk[(t + k - 1 - i) % L];
        std::vector<std::size_t> v;
        const std::size_t free = L - k;
        if (tec) {
            std::vector<std::size_t> offs(free);
            for (std::size_t i = 0; i < free; ++i) offs[i] = i;
            for (std::size_t i = 0; i < k; ++i) std::swap(offs[i], offs[i + pick(rng, free - i)]);
            offs.resize(k);
            std::sort(offs.begin(), offs.end());
            for (std::size_t o : offs) v.push_back(walk[(t + k + o) % L]);
        } else {
            std::size_t s = pick(rng, free - k + 1);
            for (std::size_t i = 0; i < k; ++i) v.push_back(walk[(t + k + s + i) % L]);
        }
        bool ok = true;
        for (std::size_t i = 1; i < k; i += 2)
            if (g.degree(v[i]) != 2 || g.degree(vp[i]) != 2) ok = false;
        if (!ok) continue;
        try {
            TeaInstance inst = make_tea_instance(g, ids_of(g, v), ids_of(g, vp), !tec);
            std::vector<Matching> mus = enumerate_matchings(inst.host2, 64);
            if (mus.empty()) continue;
            Matching mu = mus[pick(rng, mus.size())];
            std::vector<ConstraintPath> P = paths_of(inst, mu);
            InstanceFile f;
            f.kind = tec ? "tec" : "tea";
            f.graph = g;
            f.marks = ids_of(g, v);
            f.primed = ids_of(g, vp);
            for (std::size_t i = 0; i < P.size(); ++i)
                f.constraints[static_cast<int>(i + 1)] = ids_of(inst.ref.graph, P[i]);
            return f;
        } catch (const Error&) {
            continue;
        }
    }
    exhausted(tec ? "tec" : "tea");
}

PlanarGraph diagonal_grid(int k) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) vs.push_back({i * k + j, {Rational(i + j), Rational(j - i)}, {}});
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            std::size_t a = static_cast<std::size_t>(i * k + j);
            if (i + 1 < k) es.push_back({static_cast<Id>(es.size()), a, a + static_cast<std::size_t>(k), 1});
            if (j + 1 < k) es.push_back({static_cast<Id>(es.size()), a, a + 1, 1});
        }
    return PlanarGraph::from_coordinates(std::move(vs), std::move(es));
}

InstanceFile random_diagonal_grid(Rng& rng, int k, double deletion_probability) {
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<char> keep(static_cast<std::size_t>(k * k), 1);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (coin(rng, deletion_probability)) keep[i * k + j] = keep[j * k + i] = 0;
        PlanarGraph g = diagonal_grid(k).induced(keep);
        if (!g.connected()) continue;
        InstanceFile f;
        f.kind = "symmetric";
        f.graph = g;
        f.axis = Rational(0);
        f.root = 0;
        return f;
    }
    exhausted("diagonal grid");
}

std::vector<Peak> random_peaks(Rng& rng, int n, int max_steps) {
    std::vector<Peak> out;
    for (int s = 0; s < max_steps; ++s) {
        std::vector<Peak> avail = available_peaks(n, out);
        if (avail.empty()) break;
        out.push_back(avail[pick(rng, avail.size())]);
    }
    return out;
}

InstanceFile random_instance(const std::string& kind, std::uint64_t seed) {
    Rng rng(seed);
    if (kind == "section2") return random_section2(rng);
    if (kind == "symmetric") return random_symmetric(rng, false);
    if (kind == "symmetric-matching") return random_symmetric(rng, true);
    if (kind == "tea") return random_tea(rng, false);
    if (kind == "tec") return random_tea(rng, true);
    if (kind == "diagonal-grid") return random_diagonal_grid(rng, 4);
    if (kind == "plane") {
        InstanceFile f;
        f.kind = "plane";
        f.graph = random_plane_graph(rng);
        return f;
    }
    throw Error(ErrorKind::InvalidArgument,
                "unknown instance kind '" + kind + "', expected section2, symmetric, symmetric-matching, tea, tec, "
                "diagonal-grid or plane");
}

}  // namespace dimerforge
