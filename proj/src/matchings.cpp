#include "dimerforge/matchings.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace dimerforge {

Matching make_matching(const PlanarGraph& host, std::vector<Id> edge_ids) {
    std::sort(edge_ids.begin(), edge_ids.end());
    return {host.fingerprint(), std::move(edge_ids)};
}

std::vector<std::size_t> mate_edges(const PlanarGraph& g, const Matching& m) {
    std::vector<std::size_t> mate(g.vertex_count(), SIZE_MAX);
    for (Id id : m.edges) {
        auto e = g.edge_index(id);
        if (!e) throw Error(ErrorKind::InvalidArgument, "edge " + std::to_string(id) + " is not in the host graph");
        for (std::size_t v : {g.edge(*e).u, g.edge(*e).v}) {
            if (mate[v] != SIZE_MAX)
                throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(g.vertex(v).id) + " matched twice");
            mate[v] = *e;
        }
    }
    return mate;
}

void check_perfect(const PlanarGraph& g, const Matching& m) {
    auto mate = mate_edges(g, m);
    for (std::size_t v = 0; v < mate.size(); ++v)
        if (mate[v] == SIZE_MAX)
            throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(g.vertex(v).id) + " is unmatched");
}

bool is_perfect(const PlanarGraph& g, const Matching& m) {
    try {
        check_perfect(g, m);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Rational matching_weight(const PlanarGraph& g, const Matching& m) {
    Rational w = 1;
    for (Id id : m.edges) {
        auto e = g.edge_index(id);
        if (!e) throw Error(ErrorKind::InvalidArgument, "edge " + std::to_string(id) + " is not in the host graph");
        w *= g.edge(*e).weight;
    }
    return w;
}

void for_each_matching(const PlanarGraph& g, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    const std::size_t n = g.vertex_count();
    if (n % 2) return;
    std::vector<char> used(n, 0);
    std::vector<std::size_t> chosen;
    bool stop = false;
    std::function<void(std::size_t)> rec = [&](std::size_t left) {
        if (stop) return;
        if (left == 0) {
            if (!visit(chosen)) stop = true;
            return;
        }
        std::size_t best = SIZE_MAX, best_deg = SIZE_MAX;
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::size_t d = 0;
            for (std::size_t e : g.rotation(v))
                if (!used[g.other(e, v)]) ++d;
            if (d < best_deg) {
                best_deg = d;
                best = v;
                if (d == 0) return;
            }
        }
        used[best] = 1;
        for (std::size_t e : g.rotation(best)) {
            std::size_t w = g.other(e, best);
            if (used[w]) continue;
            used[w] = 1;
            chosen.push_back(e);
            rec(left - 2);
            chosen.pop_back();
            used[w] = 0;
            if (stop) break;
        }
        used[best] = 0;
    };
    rec(n);
}

std::vector<Matching> enumerate_matchings(const PlanarGraph& g, std::optional<std::size_t> limit) {
    std::vector<Matching> out;
    for_each_matching(g, [&](const std::vector<std::size_t>& es) {
        std::vector<Id> ids;
        ids.reserve(es.size());
        for (std::size_t e : es) ids.push_back(g.edge(e).id);
        out.push_back(make_matching(g, std::move(ids)));
        return true;
    });
    std::sort(out.begin(), out.end());
    if (limit && out.size() > *limit) out.resize(*limit);
    return out;
}

namespace {

std::size_t max_frontier(const PlanarGraph& g, const std::vector<std::size_t>& order) {
    const std::size_t n = order.size();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<long> diff(n + 2, 0);
    for (std::size_t v = 0; v < n; ++v) {
        std::size_t lo = pos[v];
        for (std::size_t e : g.rotation(v)) lo = std::min(lo, pos[g.other(e, v)]);
        if (lo < pos[v]) {
            diff[lo + 1] += 1;
            diff[pos[v] + 1] -= 1;
        }
    }
    long cur = 0, best = 0;
    for (std::size_t i = 0; i <= n; ++i) {
        cur += diff[i];
        best = std::max(best, cur);
    }
    return static_cast<std::size_t>(best);
}

std::vector<std::size_t> elimination_order(const PlanarGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> candidates;
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    auto by = [&](bool x_first) {
        std::vector<std::size_t> o = idx;
        std::stable_sort(o.begin(), o.end(), [&](std::size_t a, std::size_t b) {
            const Point& p = g.vertex(a).pos;
            const Point& q = g.vertex(b).pos;
            if (x_first) return p.x != q.x ? p.x < q.x : p.y < q.y;
            return p.y != q.y ? p.y < q.y : p.x < q.x;
        });
        return o;
    };
    candidates.push_back(by(true));
    candidates.push_back(by(false));
    std::size_t starts = n <= 400 ? n : 0;
    for (std::size_t s = 0; s < starts; ++s) {
        std::vector<std::size_t> o;
        std::vector<char> seen(n, 0);
        for (std::size_t root = s, k = 0; k < n; ++k, root = (s + k) % n) {
            if (seen[root]) continue;
            std::deque<std::size_t> q{root};
            seen[root] = 1;
            while (!q.empty()) {
                std::size_t v = q.front();
                q.pop_front();
                o.push_back(v);
                for (std::size_t e : g.rotation(v)) {
                    std::size_t w = g.other(e, v);
                    if (!seen[w]) {
                        seen[w] = 1;
                        q.push_back(w);
                    }
                }
            }
        }
        candidates.push_back(std::move(o));
    }
    std::size_t best = 0, best_w = SIZE_MAX;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        std::size_t w = max_frontier(g, candidates[i]);
        if (w < best_w) {
            best_w = w;
            best = i;
        }
    }
    return candidates[best];
}

struct KeyHash {
    std::size_t operator()(const std::vector<std::uint32_t>& k) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : k) h = (h ^ x) * 1099511628211ull;
        return h;
    }
};

}  // namespace

WeightSum count_matchings(const PlanarGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n % 2) return 0;
    if (n == 0) return 1;
    std::vector<std::size_t> order = elimination_order(g);
    std::vector<std::uint32_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = static_cast<std::uint32_t>(i);
    // Later neighbours of each position, with weights.
    std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> ahead(n);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        std::uint32_t a = pos[g.edge(e).u], b = pos[g.edge(e).v];
        if (a > b) std::swap(a, b);
        ahead[a].push_back({b, e});
    }
    using Table = std::unordered_map<std::vector<std::uint32_t>, Rational, KeyHash>;
    Table cur;
    cur.emplace(std::vector<std::uint32_t>{}, Rational(1));
    for (std::uint32_t i = 0; i < n; ++i) {
        Table next;
        next.reserve(cur.size() * 2);
        for (auto& [key, w] : cur) {
            if (!key.empty() && key.front() == i) {
                std::vector<std::uint32_t> k2(key.begin() + 1, key.end());
                next[std::move(k2)] += w;
                continue;
            }
            for (auto [j, e] : ahead[i]) {
                if (std::binary_search(key.begin(), key.end(), j)) continue;
                std::vector<std::uint32_t> k2;
                k2.reserve(key.size() + 1);
                auto it = std::lower_bound(key.begin(), key.end(), j);
                k2.insert(k2.end(), key.begin(), it);
                k2.push_back(j);
                k2.insert(k2.end(), it, key.end());
                const Rational& ew = g.edge(e).weight;
                if (ew == 0) continue;
                next[std::move(k2)] += w * ew;
            }
        }
        cur = std::move(next);
        if (cur.empty()) return 0;
    }
    auto it = cur.find({});
    return it == cur.end() ? Rational(0) : it->second;
}

SquarishVerdict squarish(const BigInt& n) {
    SquarishVerdict v;
    if (n < 0) return v;
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    if (s * s == n) {
        v.kind = SquarishVerdict::Kind::Square;
        v.witness = s;
        return v;
    }
    if (n % 2 == 0) {
        BigInt h = n / 2;
        mpz_sqrt(s.get_mpz_t(), h.get_mpz_t());
        if (s * s == h) {
            v.kind = SquarishVerdict::Kind::TwiceSquare;
            v.witness = s;
        }
    }
    return v;
}

std::string describe(const SquarishVerdict& v) {
    switch (v.kind) {
        case SquarishVerdict::Kind::Square: return "Square(" + v.witness.get_str() + ")";
        case SquarishVerdict::Kind::TwiceSquare: return "TwiceSquare(" + v.witness.get_str() + ")";
        case SquarishVerdict::Kind::No: break;
    }
    return "No";
}

PlanarGraph grid_graph(int rows, int cols) {
    std::vector<Vertex> vs;
    std::vector<Edge> es;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) vs.push_back({r * cols + c, {c, r}, {}});
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            std::size_t v = static_cast<std::size_t>(r * cols + c);
            if (c + 1 < cols) es.push_back({static_cast<Id>(es.size()), v, v + 1, 1});
            if (r + 1 < rows) es.push_back({static_cast<Id>(es.size()), v, v + static_cast<std::size_t>(cols), 1});
        }
    return PlanarGraph::from_coordinates(std::move(vs), std::move(es));
}

std::string format_matching(const Matching& m) {
    std::string out;
    for (std::size_t i = 0; i < m.edges.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(m.edges[i]);
    }
    return out;
}

Matching parse_matching(const PlanarGraph& host, const std::string& line) {
    std::istringstream in(line);
    std::vector<Id> ids;
    std::string tok;
    while (in >> tok) {
        if (tok.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorKind::ParseError, "bad edge id '" + tok + "'");
        ids.push_back(std::stoll(tok));
    }
    Matching m = make_matching(host, std::move(ids));
    check_perfect(host, m);
    return m;
}

}  // namespace dimerforge
