#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evec/digraph.hpp"

namespace evec {

// Rank bijection g: V -> [1..n]; ranks[v] is the position of vertex v.
// When every arc (u,v) satisfies ranks[u] < ranks[v] it is an acyclic
// (topological) ordering of the digraph.
struct Ranking {
    std::vector<int> ranks;

    int size() const noexcept { return static_cast<int>(ranks.size()); }
    int operator[](int v) const { return ranks[v]; }

    bool is_permutation() const;  // bijection onto {1..n}

    // seq[r-1] = the vertex with rank r. Requires is_permutation().
    std::vector<int> vertex_sequence() const;

    static Ranking identity(int n);
    static Ranking from_vertex_sequence(std::span<const int> seq);

    friend bool operator==(const Ranking&, const Ranking&) = default;
};

// True iff g is a bijection onto [1..n] compatible with every arc of d.
// Throws input_error on length mismatch.
bool validate_ordering(const Digraph& d, const Ranking& g);

// Deterministic topological ordering: among the available vertices always
// pick the smallest index. Equals the lexicographically first element of
// the full enumeration. Throws input_error on cyclic input.
Ranking some_topological_ordering(const Digraph& d);

// Streams every acyclic ordering exactly once, in lexicographic order of
// the vertex sequence, with constant memory per emitted ordering. The
// visitor returns false to stop early; the function returns true iff the
// enumeration ran to completion.
bool for_each_acyclic_ordering(const Digraph& d,
                               const std::function<bool(const Ranking&)>& visit);

struct EnumerationResult {
    std::vector<Ranking> orderings;
    bool truncated = false;  // true iff more orderings exist beyond max_count
};
EnumerationResult enumerate_orderings(const Digraph& d,
                                      std::optional<long long> max_count = {});
long long count_acyclic_orderings(const Digraph& d);

// Canonical Euclidean inner product of two integer vectors.
long long inner_product(std::span<const int> u, std::span<const int> v);

// Total arc weight sum_{(x,y) in A} (g(y) - g(x)). Always equals
// <e_vector(d), g> for a valid ordering g; throws input_error otherwise.
long long arc_weight_sum(const Digraph& d, const Ranking& g);

// Exact rational, normalized so den > 0 and gcd(|num|, den) = 1.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long num, long long den);
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

// arc_weight_sum(d, g) / |A| as an exact rational. Undefined (input_error)
// when the digraph has no arcs.
Rational average_relational_distance(const Digraph& d, const Ranking& g);

}  // namespace evec
