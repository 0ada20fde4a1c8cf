#pragma once

#include <optional>

#include "evec/ordering.hpp"

namespace evec {

// <e,g>, <e,e>, and the integer gap 2<e,g> - <e,e>. For every acyclic
// ordering of an acyclic digraph the gap is nonnegative; it is zero exactly
// on the equality instances certified in dim2.hpp. All arithmetic stays in
// integers: <e,e> is always even, so the floor <e,e>/2 is exact.
struct BoundReport {
    long long eg = 0;
    long long ee = 0;
    long long gap2 = 0;  // 2*eg - ee

    bool attains_floor() const noexcept { return gap2 == 0; }
};

// Throws input_error unless g is a valid acyclic ordering of d, and
// property_violation if the bound itself fails (which would be a bug).
BoundReport bound_report(const Digraph& d, const Ranking& g);

// Number of pairs (s,t) with s in S, t in [1..n] \ S and s < t.
long long insertion_pair_count(std::span<const int> s, int n);

// For S = {s_1 < ... < s_m} with k insertion pairs, both of
//   k <= sum_i [(n - s_i) - (m - i)]
//   sum_i s_i <= m(2n - m + 1)/2 - k
// hold for every subset; this evaluates them directly.
bool insertion_pair_bounds_hold(std::span<const int> s, int n);

// Induction-step inequality behind the lower bound: for a maximal vertex z
// ranked last by g1, with e, g and n taken on the digraph with z removed
// and m = |N^-(z)|,
//   sum_{x in N^-(z)} [e(x) - g(x)] + n*m >= m(m-1)/2.
// Always true in theory; a false return signals a property violation.
bool peel_inequality_check(const Digraph& d1, const Ranking& g1, int z);

struct SearchResult {
    long long min_eg = 0;
    Ranking argmin;          // lexicographically first minimizer (by vertex sequence)
    long long explored = 0;  // branching-tree nodes examined
    bool proven_optimal = false;
};

struct SearchOptions {
    std::optional<long long> node_budget;  // branch-and-bound only
    int exhaustive_cap = 12;               // exhaustive search refuses n above this
};

// Minimum of <e,g> over all acyclic orderings by full enumeration.
// Throws input_error on cyclic input or when n exceeds the cap.
SearchResult minimize_eg_exhaustive(const Digraph& d, const SearchOptions& opts = {});

// Same minimum and argmin as the exhaustive search, found by depth-first
// branch and bound. Prunes with the unconstrained completion bound (largest
// remaining e-value paired with smallest remaining rank, the rearrangement
// minimum) and stops as soon as an ordering attains the floor <e,e>/2,
// which is provably optimal. With a node budget the search may give up and
// report proven_optimal = false.
SearchResult minimize_eg_bnb(const Digraph& d, const SearchOptions& opts = {});

}  // namespace evec
