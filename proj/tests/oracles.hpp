// Independent reference implementations and frozen values for the test suites.
// Nothing here calls into the counting or bijection code under test.
#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// Frozen values, derived by hand or by the throwaway scripts kept out of tree.
inline const std::map<std::pair<int, int>, long> grid_matchings = {
    {{1, 1}, 2},      {{1, 2}, 5},         {{1, 3}, 13},       {{2, 1}, 5},
    {{2, 2}, 36},     {{2, 3}, 281},       {{3, 1}, 13},       {{3, 2}, 281},
    {{3, 3}, 6728},   {{4, 4}, 12988816}};

inline const std::vector<long> aztec_counts = {1, 4, 60, 3328, 678912};

inline constexpr long grid3_spanning_trees = 192;

struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<mpq_class> weights;
};

// Weighted perfect matching sum by branching on the lowest unmatched vertex.
inline mpq_class matching_sum(const SimpleGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);
    for (int i = 0; i < static_cast<int>(g.edges.size()); ++i) {
        adj[g.edges[i].first].push_back({g.edges[i].second, i});
        adj[g.edges[i].second].push_back({g.edges[i].first, i});
    }
    std::vector<char> used(g.n, 0);
    std::function<mpq_class()> rec = [&]() -> mpq_class {
        int v = -1;
        for (int i = 0; i < g.n; ++i)
            if (!used[i]) { v = i; break; }
        if (v < 0) return 1;
        mpq_class total = 0;
        used[v] = 1;
        for (auto [w, e] : adj[v]) {
            if (used[w]) continue;
            used[w] = 1;
            mpq_class w8 = g.weights.empty() ? mpq_class(1) : g.weights[e];
            total += w8 * rec();
            used[w] = 0;
        }
        used[v] = 0;
        return total;
    };
    if (g.n % 2) return 0;
    return rec();
}

// Spanning tree weight sum by brute force over (n-1)-subsets of edges.
inline mpq_class spanning_tree_sum(const SimpleGraph& g) {
    const int m = static_cast<int>(g.edges.size());
    mpq_class total = 0;
    std::vector<int> pick;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(pick.size()) == g.n - 1) {
            std::vector<int> parent(g.n);
            for (int i = 0; i < g.n; ++i) parent[i] = i;
            std::function<int(int)> find = [&](int x) {
                return parent[x] == x ? x : parent[x] = find(parent[x]);
            };
            mpq_class w = 1;
            for (int e : pick) {
                int a = find(g.edges[e].first), b = find(g.edges[e].second);
                if (a == b) return;
                parent[a] = b;
                if (!g.weights.empty()) w *= g.weights[e];
            }
            total += w;
            return;
        }
        for (int e = start; e < m; ++e) {
            pick.push_back(e);
            rec(e + 1);
            pick.pop_back();
        }
    };
    if (g.n == 1) return 1;
    rec(0);
    return total;
}

inline SimpleGraph grid(int rows, int cols) {
    SimpleGraph g;
    g.n = rows * cols;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.edges.push_back({r * cols + c, r * cols + c + 1});
            if (r + 1 < rows) g.edges.push_back({r * cols + c, (r + 1) * cols + c});
        }
    return g;
}

// Exact product formula for the Aztec triangle, evaluated with plain factorials.
inline mpz_class aztec_product(int n) {
    mpq_class v = 1;
    for (int i = 0; i < n * (n - 1) / 2; ++i) v *= 2;
    for (int i = 0; i < n; ++i) {
        mpz_class a, b;
        mpz_fac_ui(a.get_mpz_t(), 4 * i + 2);
        mpz_fac_ui(b.get_mpz_t(), n + 2 * i + 1);
        v *= mpq_class(a, b);
    }
    v.canonicalize();
    return v.get_num();
}

}  // namespace oracle
