#include "evec/digraph.hpp"

#include <algorithm>
#include <string>

#include "evec/errors.hpp"

namespace evec {

namespace {

std::string arc_str(const Arc& a) {
    return "(" + std::to_string(a.first) + "," + std::to_string(a.second) + ")";
}

}  // namespace

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0) throw input_error("vertex count must be nonnegative");
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
        const auto& [u, v] = arcs_[i];
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw input_error("arc " + arc_str(arcs_[i]) + " out of range for n=" +
                              std::to_string(n_));
        if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
        if (i > 0 && arcs_[i] == arcs_[i - 1])
            throw input_error("duplicate arc " + arc_str(arcs_[i]));
    }
    out_.resize(n_);
    in_.resize(n_);
    for (const auto& [u, v] : arcs_) {  // arc order is sorted, so lists end up sorted
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
    acyclic_ = compute_acyclic();
}

void Digraph::check_vertex(int x) const {
    if (x < 0 || x >= n_)
        throw input_error("vertex " + std::to_string(x) + " out of range for n=" +
                          std::to_string(n_));
}

bool Digraph::has_arc(int u, int v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

const std::vector<int>& Digraph::in_neighbors(int x) const {
    check_vertex(x);
    return in_[x];
}

const std::vector<int>& Digraph::out_neighbors(int x) const {
    check_vertex(x);
    return out_[x];
}

int Digraph::in_degree(int x) const { return static_cast<int>(in_neighbors(x).size()); }

int Digraph::out_degree(int x) const { return static_cast<int>(out_neighbors(x).size()); }

bool Digraph::compute_acyclic() const {
    // Kahn peeling: acyclic iff every vertex gets consumed.
    std::vector<int> indeg(n_, 0);
    for (const auto& [u, v] : arcs_) ++indeg[v];
    std::vector<int> ready;
    for (int v = 0; v < n_; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    int consumed = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++consumed;
        for (int w : out_[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return consumed == n_;
}

std::vector<int> e_vector(const Digraph& d) {
    std::vector<int> e(d.vertex_count(), 0);
    for (const auto& [u, v] : d.arcs()) {
        --e[u];
        ++e[v];
    }
    return e;
}

InducedSubgraph induced_subgraph(const Digraph& d, std::span<const int> keep) {
    const int n = d.vertex_count();
    std::vector<int> verts(keep.begin(), keep.end());
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int v : verts)
        if (v < 0 || v >= n)
            throw input_error("induced subgraph: vertex " + std::to_string(v) +
                              " out of range for n=" + std::to_string(n));

    InducedSubgraph result;
    result.new_to_old = verts;
    result.old_to_new.assign(n, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        result.old_to_new[verts[i]] = i;

    std::vector<Arc> arcs;
    for (const auto& [u, v] : d.arcs()) {
        int nu = result.old_to_new[u];
        int nv = result.old_to_new[v];
        if (nu >= 0 && nv >= 0) arcs.emplace_back(nu, nv);
    }
    result.graph = Digraph(static_cast<int>(verts.size()), std::move(arcs));
    return result;
}

Digraph transitive_closure(const Digraph& d) {
    if (!d.is_acyclic())
        throw input_error("transitive closure requires an acyclic digraph");
    const int n = d.vertex_count();
    std::vector<Arc> closure;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int u = 0; u < n; ++u) {
        std::fill(seen.begin(), seen.end(), 0);
        stack.assign(d.out_neighbors(u).begin(), d.out_neighbors(u).end());
        for (int w : stack) seen[w] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : d.out_neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        for (int v = 0; v < n; ++v)
            if (seen[v]) closure.emplace_back(u, v);
    }
    return Digraph(n, std::move(closure));
}

bool is_transitive(const Digraph& d) {
    for (const auto& [u, v] : d.arcs())
        for (int w : d.out_neighbors(v))
            if (!d.has_arc(u, w)) return false;
    return true;
}

}  // namespace evec
