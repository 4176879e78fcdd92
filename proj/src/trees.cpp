#include "dimerforge/trees.hpp"

#include <algorithm>
#include <numeric>

namespace dimerforge {

namespace {

struct Dsu {
    std::vector<std::size_t> p;
    explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    std::size_t find(std::size_t x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

RootedForest orient(const PlanarGraph& g, const std::vector<std::size_t>& roots, const std::vector<std::size_t>& edges) {
    RootedForest f;
    f.host = g.fingerprint();
    f.roots = roots;
    std::sort(f.roots.begin(), f.roots.end());
    f.parent_edge.assign(g.vertex_count(), SIZE_MAX);
    std::vector<std::vector<std::size_t>> adj(g.vertex_count());
    for (std::size_t e : edges) {
        adj[g.edge(e).u].push_back(e);
        adj[g.edge(e).v].push_back(e);
    }
    std::vector<char> seen(g.vertex_count(), 0);
    std::vector<std::size_t> queue(f.roots.begin(), f.roots.end());
    for (std::size_t r : queue) seen[r] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        std::size_t v = queue[i];
        for (std::size_t e : adj[v]) {
            std::size_t w = g.other(e, v);
            if (seen[w]) continue;
            seen[w] = 1;
            f.parent_edge[w] = e;
            queue.push_back(w);
        }
    }
    return f;
}

}  // namespace

void for_each_rooted_forest(const PlanarGraph& g, const std::vector<std::size_t>& roots,
                            const std::function<bool(const RootedForest&)>& visit, const std::vector<char>* skip) {
    const std::size_t n = g.vertex_count();
    if (roots.empty()) return;
    std::vector<std::size_t> usable;
    std::size_t active = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (!skip || !(*skip)[v]) ++active;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (skip && ((*skip)[ed.u] || (*skip)[ed.v])) continue;
        usable.push_back(e);
    }
    const std::size_t need = active - roots.size();
    Dsu base(n);
    for (std::size_t r : roots) base.unite(r, roots[0]);
    std::vector<std::size_t> chosen;
    bool stop = false;
    // Components left to join, counted on the contracted graph.
    auto still_connected = [&](const Dsu& d, std::size_t from) {
        Dsu t = d;
        for (std::size_t k = from; k < usable.size(); ++k) t.unite(g.edge(usable[k]).u, g.edge(usable[k]).v);
        std::size_t comps = 0;
        for (std::size_t v = 0; v < n; ++v)
            if ((!skip || !(*skip)[v]) && t.find(v) == v) ++comps;
        return comps == 1;
    };
    std::function<void(std::size_t, Dsu&)> rec = [&](std::size_t k, Dsu& d) {
        if (stop) return;
        if (chosen.size() == need) {
            if (!visit(orient(g, roots, chosen))) stop = true;
            return;
        }
        if (k == usable.size() || usable.size() - k < need - chosen.size()) return;
        const Edge& ed = g.edge(usable[k]);
        if (d.find(ed.u) != d.find(ed.v)) {
            Dsu d2 = d;
            d2.unite(ed.u, ed.v);
            chosen.push_back(usable[k]);
            rec(k + 1, d2);
            chosen.pop_back();
        }
        if (stop) return;
        if (still_connected(d, k + 1)) rec(k + 1, d);
    };
    if (!still_connected(base, 0)) return;
    rec(0, base);
}

std::vector<RootedForest> enumerate_spanning_trees(const PlanarGraph& g, std::size_t root) {
    std::vector<RootedForest> out;
    for_each_rooted_forest(g, {root}, [&](const RootedForest& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

Rational determinant(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && sgn(m[piv][c]) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(m[r][c]) == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

WeightSum count_spanning_trees(const PlanarGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n <= 1) return 1;
    std::vector<std::vector<Rational>> L(n - 1, std::vector<Rational>(n - 1, 0));
    for (const Edge& e : g.edges()) {
        std::size_t a = e.u, b = e.v;
        if (a > 0) L[a - 1][a - 1] += e.weight;
        if (b > 0) L[b - 1][b - 1] += e.weight;
        if (a > 0 && b > 0) {
            L[a - 1][b - 1] -= e.weight;
            L[b - 1][a - 1] -= e.weight;
        }
    }
    return determinant(std::move(L));
}

WeightSum count_rooted_trees(const PlanarGraph& g, std::size_t root, const std::vector<std::vector<std::size_t>>& allowed) {
    const std::size_t n = g.vertex_count();
    if (n <= 1) return 1;
    std::vector<std::size_t> idx(n, SIZE_MAX);
    std::size_t k = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (v != root) idx[v] = k++;
    std::vector<std::vector<Rational>> L(k, std::vector<Rational>(k, 0));
    for (std::size_t v = 0; v < n; ++v) {
        if (v == root) continue;
        const std::vector<std::size_t>& exits = (v < allowed.size() && !allowed[v].empty()) ? allowed[v] : g.rotation(v);
        for (std::size_t e : exits) {
            std::size_t w = g.other(e, v);
            L[idx[v]][idx[v]] += g.edge(e).weight;
            if (w != root) L[idx[v]][idx[w]] -= g.edge(e).weight;
        }
    }
    return determinant(std::move(L));
}

std::uint64_t Rng::splitmix(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) : stream_(seed) {
    std::uint64_t s = seed;
    std::seed_seq seq{static_cast<std::uint32_t>(splitmix(s)), static_cast<std::uint32_t>(splitmix(s)),
                      static_cast<std::uint32_t>(splitmix(s)), static_cast<std::uint32_t>(splitmix(s))};
    engine_.seed(seq);
}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    for (;;) {
        std::uint64_t x = engine_();
        if (x < limit) return x % bound;
    }
}

Rng Rng::split() {
    std::uint64_t child = splitmix(stream_) ^ engine_();
    return Rng(child);
}

RootedForest ust_sample(const PlanarGraph& g, std::size_t root, std::uint64_t seed) {
    Rng rng(seed);
    return ust_sample(g, root, rng);
}

RootedForest ust_sample(const PlanarGraph& g, std::size_t root, Rng& rng) {
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<double>> cumulative(n);
    for (std::size_t v = 0; v < n; ++v) {
        double acc = 0;
        for (std::size_t e : g.rotation(v)) {
            acc += g.edge(e).weight.get_d();
            cumulative[v].push_back(acc);
        }
    }
    std::vector<char> in_tree(n, 0);
    std::vector<std::size_t> next(n, SIZE_MAX);
    in_tree[root] = 1;
    for (std::size_t start = 0; start < n; ++start) {
        std::size_t u = start;
        while (!in_tree[u]) {
            const auto& c = cumulative[u];
            if (c.empty() || c.back() <= 0) throw Error(ErrorKind::Disconnected, "random walk is stuck");
            double x = rng.uniform() * c.back();
            std::size_t k = static_cast<std::size_t>(std::upper_bound(c.begin(), c.end(), x) - c.begin());
            if (k >= c.size()) k = c.size() - 1;
            next[u] = g.rotation(u)[k];
            u = g.other(next[u], u);
        }
        u = start;
        while (!in_tree[u]) {
            in_tree[u] = 1;
            u = g.other(next[u], u);
        }
    }
    RootedForest f;
    f.host = g.fingerprint();
    f.roots = {root};
    f.parent_edge = next;
    f.parent_edge[root] = SIZE_MAX;
    return f;
}

}  // namespace dimerforge
