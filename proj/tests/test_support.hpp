#pragma once

// Test-side helpers kept independent of the implementation paths they are
// used to check: permutation filtering instead of the backtracking
// enumerator, plain DFS instead of the Kahn acyclicity flag, and direct
// arithmetic instead of the search engines.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "evec/digraph.hpp"
#include "evec/ordering.hpp"

namespace testsup {

// Every acyclic ordering by filtering all n! vertex sequences, in
// lexicographic vertex-sequence order.
inline std::vector<evec::Ranking> brute_force_orderings(const evec::Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    std::vector<evec::Ranking> result;
    do {
        std::vector<int> rank(n);
        for (int pos = 0; pos < n; ++pos) rank[seq[pos]] = pos + 1;
        bool ok = true;
        for (const auto& [u, v] : d.arcs())
            if (rank[u] >= rank[v]) {
                ok = false;
                break;
            }
        if (ok) result.push_back(evec::Ranking{rank});
    } while (std::next_permutation(seq.begin(), seq.end()));
    return result;
}

inline long long brute_force_min_eg(const evec::Digraph& d,
                                    evec::Ranking* argmin = nullptr) {
    const auto e = evec::e_vector(d);
    bool have = false;
    long long best = 0;
    for (const auto& g : brute_force_orderings(d)) {
        long long eg = 0;
        for (int v = 0; v < d.vertex_count(); ++v)
            eg += static_cast<long long>(e[v]) * g.ranks[v];
        if (!have || eg < best) {
            have = true;
            best = eg;
            if (argmin) *argmin = g;
        }
    }
    return best;
}

// Cycle detection by colored DFS, independent of Digraph::is_acyclic.
inline bool dfs_has_cycle(const evec::Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> color(n, 0);  // 0 white, 1 on stack, 2 done
    std::vector<std::pair<int, int>> stack;
    for (int s = 0; s < n; ++s) {
        if (color[s] != 0) continue;
        stack.push_back({s, 0});
        color[s] = 1;
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            const auto& out = d.out_neighbors(v);
            if (next < static_cast<int>(out.size())) {
                int w = out[next++];
                if (color[w] == 1) return true;
                if (color[w] == 0) {
                    color[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

// General random digraph: each ordered pair (u,v), u != v, independently an
// arc. May be cyclic.
inline evec::Digraph random_digraph(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<evec::Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && unit(rng) < p) arcs.emplace_back(u, v);
    return evec::Digraph(n, std::move(arcs));
}

// Uniformly random choice among the available vertices at each step.
inline evec::Ranking random_topological_ordering(const evec::Digraph& d,
                                                 std::mt19937_64& rng) {
    const int n = d.vertex_count();
    std::vector<int> indeg(n, 0);
    for (const auto& [u, v] : d.arcs()) ++indeg[v];
    std::vector<int> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    evec::Ranking g;
    g.ranks.assign(n, 0);
    for (int rank = 1; rank <= n; ++rank) {
        std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
        const std::size_t i = pick(rng);
        const int v = ready[i];
        ready.erase(ready.begin() + static_cast<long>(i));
        g.ranks[v] = rank;
        for (int w : d.out_neighbors(v))
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return g;
}

}  // namespace testsup
