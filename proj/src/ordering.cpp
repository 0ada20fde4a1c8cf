#include "evec/ordering.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "evec/errors.hpp"

namespace evec {

bool Ranking::is_permutation() const {
    const int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int r : ranks) {
        if (r < 1 || r > n || seen[r]) return false;
        seen[r] = 1;
    }
    return true;
}

std::vector<int> Ranking::vertex_sequence() const {
    if (!is_permutation())
        throw input_error("rank vector is not a bijection onto [1..n]");
    std::vector<int> seq(ranks.size());
    for (int v = 0; v < size(); ++v) seq[ranks[v] - 1] = v;
    return seq;
}

Ranking Ranking::identity(int n) {
    Ranking g;
    g.ranks.resize(n);
    std::iota(g.ranks.begin(), g.ranks.end(), 1);
    return g;
}

Ranking Ranking::from_vertex_sequence(std::span<const int> seq) {
    const int n = static_cast<int>(seq.size());
    Ranking g;
    g.ranks.assign(n, 0);
    for (int pos = 0; pos < n; ++pos) {
        int v = seq[pos];
        if (v < 0 || v >= n || g.ranks[v] != 0)
            throw input_error("vertex sequence is not a permutation of 0..n-1");
        g.ranks[v] = pos + 1;
    }
    return g;
}

bool validate_ordering(const Digraph& d, const Ranking& g) {
    if (g.size() != d.vertex_count())
        throw input_error("ordering has length " + std::to_string(g.size()) +
                          ", digraph has " + std::to_string(d.vertex_count()) +
                          " vertices");
    if (!g.is_permutation()) return false;
    for (const auto& [u, v] : d.arcs())
        if (g.ranks[u] >= g.ranks[v]) return false;
    return true;
}

Ranking some_topological_ordering(const Digraph& d) {
    if (!d.is_acyclic())
        throw input_error("digraph has a directed cycle; no acyclic ordering exists");
    const int n = d.vertex_count();
    std::vector<int> indeg(n, 0);
    for (const auto& [u, v] : d.arcs()) ++indeg[v];
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    Ranking g;
    g.ranks.assign(n, 0);
    int next_rank = 1;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        g.ranks[v] = next_rank++;
        for (int w : d.out_neighbors(v))
            if (--indeg[w] == 0) ready.push(w);
    }
    return g;
}

bool for_each_acyclic_ordering(const Digraph& d,
                               const std::function<bool(const Ranking&)>& visit) {
    if (!d.is_acyclic())
        throw input_error("digraph has a directed cycle; no acyclic ordering exists");
    const int n = d.vertex_count();
    std::vector<int> indeg(n, 0);
    for (const auto& [u, v] : d.arcs()) ++indeg[v];
    Ranking g;
    g.ranks.assign(n, 0);

    // Backtracking over available vertices in increasing index order yields
    // lexicographic vertex sequences. rank 0 marks "not placed yet".
    std::function<bool(int)> rec = [&](int depth) -> bool {
        if (depth == n) return visit(g);
        for (int v = 0; v < n; ++v) {
            if (g.ranks[v] != 0 || indeg[v] != 0) continue;
            g.ranks[v] = depth + 1;
            for (int w : d.out_neighbors(v)) --indeg[w];
            bool keep_going = rec(depth + 1);
            for (int w : d.out_neighbors(v)) ++indeg[w];
            g.ranks[v] = 0;
            if (!keep_going) return false;
        }
        return true;
    };
    return rec(0);
}

EnumerationResult enumerate_orderings(const Digraph& d,
                                      std::optional<long long> max_count) {
    if (max_count && *max_count <= 0)
        throw input_error("max_count must be positive");
    EnumerationResult result;
    for_each_acyclic_ordering(d, [&](const Ranking& g) {
        if (max_count &&
            static_cast<long long>(result.orderings.size()) == *max_count) {
            result.truncated = true;
            return false;
        }
        result.orderings.push_back(g);
        return true;
    });
    return result;
}

long long count_acyclic_orderings(const Digraph& d) {
    long long count = 0;
    for_each_acyclic_ordering(d, [&](const Ranking&) {
        ++count;
        return true;
    });
    return count;
}

long long inner_product(std::span<const int> u, std::span<const int> v) {
    if (u.size() != v.size())
        throw input_error("inner product of vectors with different lengths");
    long long sum = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        sum += static_cast<long long>(u[i]) * v[i];
    return sum;
}

long long arc_weight_sum(const Digraph& d, const Ranking& g) {
    if (!validate_ordering(d, g))
        throw input_error("not a valid acyclic ordering of the digraph");
    long long sum = 0;
    for (const auto& [u, v] : d.arcs()) sum += g.ranks[v] - g.ranks[u];
    return sum;
}

Rational Rational::of(long long num, long long den) {
    if (den == 0) throw input_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational average_relational_distance(const Digraph& d, const Ranking& g) {
    if (d.arc_count() == 0)
        throw input_error("average relational distance is undefined without arcs");
    return Rational::of(arc_weight_sum(d, g), d.arc_count());
}

}  // namespace evec
