#pragma once

#include <span>
#include <utility>
#include <vector>

namespace evec {

using Arc = std::pair<int, int>;

// Simple digraph on vertices 0..n-1: no self-loops, no duplicate arcs.
// Immutable after construction, so values can be shared freely across
// threads. The arc set is kept sorted; adjacency lists are sorted too.
class Digraph {
public:
    Digraph() = default;  // empty digraph, n = 0
    Digraph(int n, std::vector<Arc> arcs);

    int vertex_count() const noexcept { return n_; }
    int arc_count() const noexcept { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }

    bool has_arc(int u, int v) const;  // O(log m)

    // Sorted lists of arc sources into x / arc targets out of x.
    const std::vector<int>& in_neighbors(int x) const;
    const std::vector<int>& out_neighbors(int x) const;
    int in_degree(int x) const;
    int out_degree(int x) const;

    // Derived once at construction; re-derivable by any topological sort.
    bool is_acyclic() const noexcept { return acyclic_; }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    void check_vertex(int x) const;
    bool compute_acyclic() const;

    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_;
    bool acyclic_ = true;
};

// e(x) = indegree(x) - outdegree(x). Entries always sum to zero, and
// sum e(x)^2 is always even.
std::vector<int> e_vector(const Digraph& d);

// Subgraph induced on a vertex subset, re-indexed densely. Both directions
// of the index map are recorded so per-vertex quantities can be compared
// across the restriction.
struct InducedSubgraph {
    Digraph graph;
    std::vector<int> old_to_new;  // -1 for vertices that were dropped
    std::vector<int> new_to_old;
};
InducedSubgraph induced_subgraph(const Digraph& d, std::span<const int> keep);

// Arc (u,v) present iff a directed path u -> ... -> v exists. Requires an
// acyclic input (the closure of a cyclic digraph is not antisymmetric).
Digraph transitive_closure(const Digraph& d);

// True iff (u,v),(v,w) in A implies (u,w) in A.
bool is_transitive(const Digraph& d);

}  // namespace evec
