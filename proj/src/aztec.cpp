#include "dimerforge/aztec.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace dimerforge {

AztecVariant parse_aztec_variant(const std::string& s) {
    if (s == "T") return AztecVariant::T;
    if (s == "Tp" || s == "Tprime") return AztecVariant::Tprime;
    throw Error(ErrorKind::InvalidArgument, "unknown variant '" + s + "', expected T or Tp");
}

std::string to_string(AztecVariant v) { return v == AztecVariant::T ? "T" : "Tp"; }

std::vector<Cell> aztec_region(int n, AztecVariant variant) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "order must be at least 1");
    std::vector<Cell> cells;
    for (int x = 0; x < 2 * n; ++x)
        for (int y = 0; y < 2 * n; ++y)
            if (y > x || (y == x && x % 2 == 0)) cells.push_back({x, y});
    const int base = variant == AztecVariant::T ? 1 : 0;
    for (int r = 0; r <= n - 2; ++r)
        for (int k = 0; k < 2 * (n - 1 - r); ++k) cells.push_back({base + r + k, 2 * n + r});
    std::sort(cells.begin(), cells.end());
    return cells;
}

namespace {

PlanarGraph cells_graph(const std::vector<Cell>& cells) {
    std::vector<Vertex> vs;
    std::map<Cell, std::size_t> index;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        index[cells[i]] = i;
        vs.push_back({static_cast<Id>(i), Point{Rational(cells[i].first), Rational(cells[i].second)}, {}});
    }
    std::vector<Edge> es;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto [x, y] = cells[i];
        for (Cell c : {Cell{x + 1, y}, Cell{x, y + 1}}) {
            auto it = index.find(c);
            if (it != index.end()) es.push_back({static_cast<Id>(es.size()), i, it->second, Rational(1)});
        }
    }
    return PlanarGraph::from_coordinates(std::move(vs), std::move(es));
}

Cell doubled(const Point& p) {
    Rational x = 2 * p.x, y = 2 * p.y;
    if (x.get_den() != 1 || y.get_den() != 1) throw Error(ErrorKind::LiftFailed, "refinement is off the half lattice");
    return {static_cast<int>(x.get_num().get_si()), static_cast<int>(y.get_num().get_si())};
}

}  // namespace

AztecInstance aztec_graph(int n, AztecVariant variant) {
    AztecInstance inst;
    inst.n = n;
    inst.variant = variant;
    inst.cells = aztec_region(n, variant);
    inst.dual = cells_graph(inst.cells);
    return inst;
}

BigInt aztec_formula(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "order must be at least 1");
    Rational value = 1;
    BigInt two = 1;
    mpz_mul_2exp(two.get_mpz_t(), two.get_mpz_t(), static_cast<unsigned long>(n) * (n - 1) / 2);
    value *= Rational(two);
    for (int i = 0; i < n; ++i) {
        BigInt a, b;
        mpz_fac_ui(a.get_mpz_t(), 4ul * i + 2);
        mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(n + 2 * i + 1));
        value *= Rational(a) / Rational(b);
    }
    value.canonicalize();
    if (value.get_den() != 1 || sgn(value) <= 0) throw Error(ErrorKind::InvalidArgument, "product formula is not a positive integer");
    return value.get_num();
}

PlanarGraph aztec_lattice_graph(int m) {
    std::vector<Vertex> vs;
    std::map<Cell, std::size_t> index;
    for (int y = 0; y <= 3 * m - 1; ++y)
        for (int x = 0; x <= 2 * m - 1; ++x)
            if (y >= x && y <= x + 2 * m + 1 && y <= -x + 4 * m) {
                index[{x, y}] = vs.size();
                vs.push_back({static_cast<Id>(vs.size()), Point{Rational(x), Rational(y)}, {}});
            }
    std::vector<Edge> es;
    for (const auto& [c, i] : index)
        for (Cell d : {Cell{c.first + 1, c.second}, Cell{c.first, c.second + 1}}) {
            auto it = index.find(d);
            if (it != index.end()) es.push_back({static_cast<Id>(es.size()), i, it->second, Rational(1)});
        }
    return PlanarGraph::from_coordinates(std::move(vs), std::move(es));
}

AztecBijection make_aztec_bijection(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "order must be at least 1");
    AztecBijection b;
    b.n = n;
    b.m = n % 2 == 0 ? n / 2 : (n + 1) / 2;
    const int m = b.m;
    b.g = aztec_lattice_graph(m);
    auto id_at = [&](int x, int y) -> Id {
        for (const Vertex& v : b.g.vertices())
            if (v.pos.x == x && v.pos.y == y) return v.id;
        throw Error(ErrorKind::LiftFailed, "lattice point (" + std::to_string(x) + "," + std::to_string(y) + ") missing");
    };
    std::vector<Id> v, vp;
    for (int k = 1; k <= 2 * m - 1; ++k) {
        if (k % 2 == 1) {
            int i = (k + 1) / 2;
            v.push_back(id_at(m - i, 3 * m - i));
            vp.push_back(id_at(m - 1 + i, 3 * m - i));
        } else {
            int j = k / 2;
            v.push_back(id_at(m - 1 - j, 3 * m - j));
            vp.push_back(id_at(m + j, 3 * m - j));
        }
    }
    b.tea = make_tea_instance(b.g, v, vp, true);
    const Refinement& ref = b.tea.ref;
    const PlanarGraph& H = ref.graph;

    std::vector<std::vector<std::size_t>> outside(2);  // per host side, vertices removed besides the host's own
    if (n % 2 == 1) {
        std::vector<std::pair<int, int>> pts;
        for (int y = 2 * m; y >= 1; --y) pts.push_back({0, y});
        for (int k = 1; k <= 2 * m - 1; ++k) {
            pts.push_back({k, k});
            if (k < 2 * m - 1) pts.push_back({k, k + 1});
        }
        pts.push_back({2 * m - 1, 2 * m});
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        std::vector<std::size_t> gpath;
        for (auto [x, y] : pts) {
            std::size_t gi = *b.g.vertex_index(id_at(x, y));
            if (!gpath.empty() && !b.g.edge_between(gpath.back(), gi)) throw Error(ErrorKind::LiftFailed, "staircase path is broken");
            gpath.push_back(gi);
        }
        ConstraintPath path;
        for (std::size_t k = 0; k < gpath.size(); ++k) {
            if (k > 0) path.push_back(ref.edge_vertex[*b.g.edge_between(gpath[k - 1], gpath[k])]);
            path.push_back(ref.vertex_of[gpath[k]]);
        }
        b.P.assign(b.tea.size(), {});
        b.P.back() = path;
        b.I = {static_cast<int>(b.tea.size())};
        std::vector<std::size_t> below{ref.vertex_of[*b.g.vertex_index(id_at(0, 0))],
                                       ref.edge_vertex[*b.g.edge_between(*b.g.vertex_index(id_at(0, 0)),
                                                                         *b.g.vertex_index(id_at(0, 1)))]};
        outside[0].assign(path.begin() + 1, path.end());
        outside[1].assign(path.begin(), path.end() - 1);
        for (int s = 0; s < 2; ++s) outside[s].insert(outside[s].end(), below.begin(), below.end());
    }

    b.t = aztec_graph(n, AztecVariant::T);
    b.tp = aztec_graph(n, AztecVariant::Tprime);
    std::array<const AztecInstance*, 2> regions{&b.t, &b.tp};
    std::array<bool, 2> taken{false, false};
    for (int r = 0; r < 2; ++r) {
        const AztecInstance& reg = *regions[r];
        bool found = false;
        for (int s = 0; s < 2 && !found; ++s) {
            if (taken[s]) continue;
            std::vector<char> keep = s == 0 ? b.tea.host1_mask : b.tea.host2_mask;
            for (std::size_t x : outside[s]) keep[x] = 0;
            std::vector<std::pair<Cell, std::size_t>> pts;
            for (std::size_t x = 0; x < H.vertex_count(); ++x)
                if (keep[x]) pts.push_back({doubled(H.vertex(x).pos), x});
            if (pts.size() != reg.cells.size()) continue;
            std::sort(pts.begin(), pts.end());
            const int dx = reg.cells[0].first - pts[0].first.first, dy = reg.cells[0].second - pts[0].first.second;
            std::vector<Cell> moved;
            for (auto& [c, x] : pts) moved.push_back({c.first + dx, c.second + dy});
            std::sort(moved.begin(), moved.end());
            if (moved != reg.cells) continue;
            std::vector<std::size_t> cv(reg.cells.size());
            for (auto& [c, x] : pts) {
                auto it = std::lower_bound(reg.cells.begin(), reg.cells.end(), Cell{c.first + dx, c.second + dy});
                cv[static_cast<std::size_t>(it - reg.cells.begin())] = x;
            }
            PlanarGraph sub = H.induced(keep);
            if (sub.edge_count() != reg.dual.edge_count()) continue;
            // Forced part: degree one elimination on the vertices outside the region.
            std::vector<char> rest = s == 0 ? b.tea.host1_mask : b.tea.host2_mask;
            for (std::size_t x = 0; x < H.vertex_count(); ++x)
                if (keep[x]) rest[x] = 0;
            std::vector<Id> forced;
            for (bool progress = true; progress;) {
                progress = false;
                for (std::size_t x = 0; x < H.vertex_count(); ++x) {
                    if (!rest[x]) continue;
                    std::vector<std::size_t> opts;
                    for (std::size_t e : H.rotation(x))
                        if (rest[H.other(e, x)]) opts.push_back(e);
                    if (opts.empty()) throw Error(ErrorKind::LiftFailed, "forced part has an isolated vertex");
                    if (opts.size() == 1) {
                        forced.push_back(H.edge(opts[0]).id);
                        rest[x] = rest[H.other(opts[0], x)] = 0;
                        progress = true;
                    }
                }
            }
            if (std::count(rest.begin(), rest.end(), 1) != 0) throw Error(ErrorKind::LiftFailed, "forced part is not forced");
            std::sort(forced.begin(), forced.end());
            b.side[r] = s + 1;
            b.cell_vertex[r] = std::move(cv);
            b.forced[r] = std::move(forced);
            taken[s] = true;
            found = true;
        }
        if (!found) throw Error(ErrorKind::LiftFailed, "region " + to_string(reg.variant) + " does not embed in the lattice construction");
    }
    return b;
}

namespace {

Matching transfer(const AztecBijection& b, const Matching& mu, int from) {
    const int to = 1 - from;
    const AztecInstance& src = from == 0 ? b.t : b.tp;
    const AztecInstance& dst = to == 0 ? b.t : b.tp;
    const PlanarGraph& H = b.tea.ref.graph;
    if (!is_perfect(src.dual, mu)) throw Error(ErrorKind::InvalidArgument, "not a perfect matching of the region");
    std::vector<Id> ids = b.forced[from];
    for (Id id : mu.edges) {
        const Edge& e = src.dual.edge(*src.dual.edge_index(id));
        auto h = H.edge_between(b.cell_vertex[from][e.u], b.cell_vertex[from][e.v]);
        if (!h) throw Error(ErrorKind::LiftFailed, "region edge has no counterpart");
        ids.push_back(H.edge(*h).id);
    }
    const int side = b.side[from];
    const PlanarGraph& host = side == 1 ? b.tea.host1 : b.tea.host2;
    Matching lifted = make_matching(host, std::move(ids));
    if (!is_perfect(host, lifted)) throw Error(ErrorKind::LiftFailed, "lifted matching is not perfect");
    Matching moved = tea_transport(b.tea, lifted, b.I, b.P, side);
    std::vector<std::size_t> vertex_cell(H.vertex_count(), SIZE_MAX);
    for (std::size_t c = 0; c < b.cell_vertex[to].size(); ++c) vertex_cell[b.cell_vertex[to][c]] = c;
    std::vector<Id> out;
    std::size_t forced_seen = 0;
    for (Id id : moved.edges) {
        if (std::binary_search(b.forced[to].begin(), b.forced[to].end(), id)) {
            ++forced_seen;
            continue;
        }
        const Edge& e = H.edge(*H.edge_index(id));
        std::size_t a = vertex_cell[e.u], c = vertex_cell[e.v];
        if (a == SIZE_MAX || c == SIZE_MAX) throw Error(ErrorKind::LiftFailed, "transported matching leaves the region");
        out.push_back(dst.dual.edge(*dst.dual.edge_between(a, c)).id);
    }
    if (forced_seen != b.forced[to].size()) throw Error(ErrorKind::LiftFailed, "transported matching misses a forced edge");
    Matching res = make_matching(dst.dual, std::move(out));
    check_perfect(dst.dual, res);
    return res;
}

}  // namespace

Matching aztec_biject(const AztecBijection& b, const Matching& mu_t) { return transfer(b, mu_t, 0); }
Matching aztec_biject_inverse(const AztecBijection& b, const Matching& mu_tp) { return transfer(b, mu_tp, 1); }

std::string tiling_svg(const AztecInstance& inst, const Matching& mu) {
    int maxx = 0, maxy = 0;
    for (auto [x, y] : inst.cells) {
        maxx = std::max(maxx, x + 1);
        maxy = std::max(maxy, y + 1);
    }
    const int s = 20;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << maxx * s + 2 << "\" height=\"" << maxy * s + 2 << "\">\n";
    for (auto [x, y] : inst.cells)
        out << "  <rect x=\"" << x * s + 1 << "\" y=\"" << (maxy - 1 - y) * s + 1 << "\" width=\"" << s << "\" height=\"" << s
            << "\" fill=\"none\" stroke=\"#bbbbbb\"/>\n";
    for (Id id : mu.edges) {
        const Edge& e = inst.dual.edge(*inst.dual.edge_index(id));
        auto [x1, y1] = inst.cells[e.u];
        auto [x2, y2] = inst.cells[e.v];
        int x = std::min(x1, x2), y = std::max(y1, y2);
        int w = (x1 != x2) ? 2 : 1, h = (y1 != y2) ? 2 : 1;
        const char* fill = w == 2 ? "#e8b04a" : "#4a8fe8";
        out << "  <rect x=\"" << x * s + 1 << "\" y=\"" << (maxy - 1 - y) * s + 1 << "\" width=\"" << w * s << "\" height=\""
            << h * s << "\" fill=\"" << fill << "\" stroke=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace dimerforge
