#include "evec/bounds.hpp"

#include <algorithm>
#include <string>

#include "evec/errors.hpp"

namespace evec {

BoundReport bound_report(const Digraph& d, const Ranking& g) {
    if (!validate_ordering(d, g))
        throw input_error("not a valid acyclic ordering of the digraph");
    const auto e = e_vector(d);
    BoundReport rep;
    rep.eg = inner_product(e, g.ranks);
    rep.ee = inner_product(e, e);
    rep.gap2 = 2 * rep.eg - rep.ee;
    if (rep.gap2 < 0)
        throw property_violation("2<e,g> < <e,e> for a valid acyclic ordering");
    return rep;
}

namespace {

std::vector<int> checked_subset(std::span<const int> s, int n) {
    std::vector<int> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1 || sorted[i] > n)
            throw input_error("subset element " + std::to_string(sorted[i]) +
                              " outside [1.." + std::to_string(n) + "]");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw input_error("subset has a repeated element " +
                              std::to_string(sorted[i]));
    }
    return sorted;
}

}  // namespace

long long insertion_pair_count(std::span<const int> s, int n) {
    if (n < 0) throw input_error("n must be nonnegative");
    const auto sorted = checked_subset(s, n);
    std::vector<char> in_s(n + 1, 0);
    for (int x : sorted) in_s[x] = 1;
    long long k = 0;
    for (int x : sorted)
        for (int t = x + 1; t <= n; ++t)
            if (!in_s[t]) ++k;
    return k;
}

bool insertion_pair_bounds_hold(std::span<const int> s, int n) {
    if (n < 0) throw input_error("n must be nonnegative");
    const auto sorted = checked_subset(s, n);
    const long long m = static_cast<long long>(sorted.size());
    const long long k = insertion_pair_count(sorted, n);

    long long per_element = 0;  // sum of (n - s_i) - (m - i), i 1-based
    long long sum_s = 0;
    for (long long i = 1; i <= m; ++i) {
        per_element += (n - sorted[i - 1]) - (m - i);
        sum_s += sorted[i - 1];
    }
    // m(2n - m + 1) is always even
    const long long cap = m * (2 * n - m + 1) / 2;
    return k <= per_element && sum_s <= cap - k;
}

bool peel_inequality_check(const Digraph& d1, const Ranking& g1, int z) {
    const int n1 = d1.vertex_count();
    if (z < 0 || z >= n1) throw input_error("z out of range");
    if (d1.out_degree(z) != 0)
        throw input_error("z must be maximal (no outgoing arcs)");
    if (!validate_ordering(d1, g1))
        throw input_error("not a valid acyclic ordering of the digraph");
    if (g1.ranks[z] != n1) throw input_error("z must be ranked last");

    std::vector<int> keep;
    keep.reserve(n1 - 1);
    for (int v = 0; v < n1; ++v)
        if (v != z) keep.push_back(v);
    const auto sub = induced_subgraph(d1, keep);
    const auto e = e_vector(sub.graph);

    const long long n = n1 - 1;
    const long long m = d1.in_degree(z);
    long long lhs = 0;
    for (int x : d1.in_neighbors(z))
        lhs += e[sub.old_to_new[x]] - g1.ranks[x];  // ranks are unchanged by the peel
    lhs += n * m;
    return lhs >= m * (m - 1) / 2;
}

namespace {

// Shared depth-first search over rank assignments 1,2,...,n, expanding
// available vertices in increasing index order so that complete orderings
// appear in lexicographic vertex-sequence order. A node is one examined
// placement; the pruned search visits a subset of the exhaustive tree.
class MinEgSearch {
public:
    MinEgSearch(const Digraph& d, bool pruned, std::optional<long long> budget)
        : d_(d),
          n_(d.vertex_count()),
          e_(e_vector(d)),
          pruned_(pruned),
          budget_(budget) {
        ee_ = inner_product(e_, e_);
        indeg_.assign(n_, 0);
        for (const auto& [u, v] : d.arcs()) ++indeg_[v];
        current_.ranks.assign(n_, 0);
    }

    SearchResult run() {
        if (pruned_) {
            // Seed the incumbent with the greedy lex-first ordering: the
            // search then always has an argmin, even under a zero budget,
            // and strict-improvement updates keep the lex-first tie-break.
            best_ = some_topological_ordering(d_);
            best_eg_ = inner_product(e_, best_->ranks);
            if (2 * best_eg_ == ee_) floor_reached_ = true;
        }
        if (!floor_reached_) dfs(0, 0);

        SearchResult result;
        result.min_eg = best_eg_;
        result.argmin = *best_;
        result.explored = explored_;
        result.proven_optimal = !budget_exhausted_;
        return result;
    }

private:
    // Returns false to unwind the whole search.
    bool dfs(int depth, long long partial_eg) {
        if (depth == n_) {
            if (!best_ || partial_eg < best_eg_) {
                best_ = current_;
                best_eg_ = partial_eg;
                if (pruned_ && 2 * best_eg_ == ee_) {
                    floor_reached_ = true;  // provably optimal, stop everywhere
                    return false;
                }
            }
            return true;
        }
        for (int v = 0; v < n_; ++v) {
            if (current_.ranks[v] != 0 || indeg_[v] != 0) continue;
            if (budget_ && explored_ >= *budget_) {
                budget_exhausted_ = true;
                return false;
            }
            ++explored_;
            const long long child_eg =
                partial_eg + static_cast<long long>(e_[v]) * (depth + 1);
            if (pruned_ &&
                child_eg + completion_bound(v, depth + 1) >= best_eg_)
                continue;  // cannot strictly improve the incumbent
            current_.ranks[v] = depth + 1;
            for (int w : d_.out_neighbors(v)) --indeg_[w];
            bool keep_going = dfs(depth + 1, child_eg);
            for (int w : d_.out_neighbors(v)) ++indeg_[w];
            current_.ranks[v] = 0;
            if (!keep_going) return false;
        }
        return true;
    }

    // Minimum completion over the unplaced vertices ignoring arc
    // constraints: pair e-values descending with the remaining ranks
    // ascending (rearrangement inequality).
    long long completion_bound(int placing, int placed_count) {
        scratch_.clear();
        for (int v = 0; v < n_; ++v)
            if (v != placing && current_.ranks[v] == 0) scratch_.push_back(e_[v]);
        std::sort(scratch_.begin(), scratch_.end(), std::greater<int>());
        long long bound = 0;
        long long rank = placed_count + 1;
        for (int ev : scratch_) bound += ev * rank++;
        return bound;
    }

    const Digraph& d_;
    const int n_;
    const std::vector<int> e_;
    const bool pruned_;
    const std::optional<long long> budget_;
    long long ee_ = 0;
    std::vector<int> indeg_;
    Ranking current_;
    std::vector<int> scratch_;
    std::optional<Ranking> best_;
    long long best_eg_ = 0;
    long long explored_ = 0;
    bool budget_exhausted_ = false;
    bool floor_reached_ = false;
};

}  // namespace

SearchResult minimize_eg_exhaustive(const Digraph& d, const SearchOptions& opts) {
    if (!d.is_acyclic())
        throw input_error("minimization requires an acyclic digraph");
    if (d.vertex_count() > opts.exhaustive_cap)
        throw input_error("exhaustive search refused: n=" +
                          std::to_string(d.vertex_count()) + " exceeds cap " +
                          std::to_string(opts.exhaustive_cap));
    return MinEgSearch(d, /*pruned=*/false, /*budget=*/{}).run();
}

SearchResult minimize_eg_bnb(const Digraph& d, const SearchOptions& opts) {
    if (!d.is_acyclic())
        throw input_error("minimization requires an acyclic digraph");
    return MinEgSearch(d, /*pruned=*/true, opts.node_budget).run();
}

}  // namespace evec
