#include "evec/dim2.hpp"

#include <algorithm>
#include <string>

#include "evec/errors.hpp"

namespace evec {

Ranking conjugate_ordering(const Digraph& d, const Ranking& g) {
    if (!validate_ordering(d, g))
        throw input_error("not a valid acyclic ordering of the digraph");
    const auto rep = bound_report(d, g);
    if (rep.gap2 != 0)
        throw input_error("conjugate construction requires 2<e,g> = <e,e> "
                          "(gap2 is " + std::to_string(rep.gap2) + ")");
    const int n = d.vertex_count();
    const auto e = e_vector(d);
    Ranking f;
    f.ranks.resize(n);
    for (int v = 0; v < n; ++v) f.ranks[v] = n + 1 - g.ranks[v] + e[v];
    if (!f.is_permutation())
        throw property_violation("conjugate of an equality ordering is not a "
                                 "bijection onto [1..n]");
    if (!validate_ordering(d, f))
        throw property_violation("conjugate of an equality ordering is not an "
                                 "acyclic ordering");
    return f;
}

Digraph intersection_of_orders(const Ranking& f, const Ranking& g) {
    if (f.size() != g.size())
        throw input_error("orders have different lengths");
    if (!f.is_permutation() || !g.is_permutation())
        throw input_error("orders must be bijections onto [1..n]");
    const int n = f.size();
    std::vector<Arc> arcs;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y && f.ranks[x] < f.ranks[y] && g.ranks[x] < g.ranks[y])
                arcs.emplace_back(x, y);
    return Digraph(n, std::move(arcs));
}

bool realizer_identity_check(const Digraph& d, const Ranking& g1, const Ranking& g2) {
    if (!validate_ordering(d, g1) || !validate_ordering(d, g2))
        throw input_error("not a valid acyclic ordering of the digraph");
    if (!(intersection_of_orders(g1, g2) == d))
        throw input_error("the two orderings do not realize the digraph");
    const int n = d.vertex_count();
    const auto e = e_vector(d);
    for (int x = 0; x < n; ++x)
        if (g1.ranks[x] + g2.ranks[x] != n + 1 + e[x]) return false;
    return true;
}

CertificationOutcome certify_dimension_two(const Digraph& d,
                                           const CertifyOptions& opts) {
    if (!d.is_acyclic())
        throw input_error("certification requires an acyclic digraph");
    const Digraph working = opts.as_is ? d : transitive_closure(d);
    const bool transitive_input = is_transitive(working);

    SearchOptions sopts;
    sopts.node_budget = opts.node_budget;
    const SearchResult sr = minimize_eg_bnb(working, sopts);

    const auto e = e_vector(working);
    const long long ee = inner_product(e, e);

    CertificationOutcome out;
    out.floor = ee / 2;  // exact: <e,e> is even
    out.explored = sr.explored;

    if (!sr.proven_optimal) {
        // Refuse to guess; a non-transitive literal input is not a poset
        // regardless of what the unfinished search would have found.
        out.verdict = transitive_input ? Dim2Verdict::undecided
                                       : Dim2Verdict::not_a_poset;
        return out;
    }

    out.min_eg = sr.min_eg;
    if (2 * sr.min_eg == ee) {
        if (!transitive_input)
            throw property_violation("an ordering attains the floor on a digraph "
                                     "that is not transitively closed");
        Dim2Certificate cert;
        cert.g = sr.argmin;
        cert.f = conjugate_ordering(working, cert.g);  // verifies bijection+ordering
        cert.f_is_bijection = true;
        cert.f_is_acyclic_ordering = true;
        cert.reconstructed = intersection_of_orders(cert.f, cert.g);
        cert.intersection_matches = cert.reconstructed == working;
        if (!cert.intersection_matches)
            throw property_violation("intersection of the certified orderings "
                                     "does not reconstruct the digraph");
        cert.realizer_identity_holds =
            realizer_identity_check(working, cert.f, cert.g);
        if (!cert.realizer_identity_holds)
            throw property_violation("realizer identity f + g = n + 1 + e failed");
        out.verdict = Dim2Verdict::certified_dim2;
        out.certificate = std::move(cert);
    } else {
        out.verdict = transitive_input ? Dim2Verdict::not_dim2
                                       : Dim2Verdict::not_a_poset;
    }
    return out;
}

namespace {

// Does intersection_of_orders(f, g) equal d? Checked arc by arc against the
// adjacency matrix without building the intersection.
bool pair_realizes(const std::vector<char>& adj, int n, const Ranking& f,
                   const Ranking& g) {
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (x == y) continue;
            const bool in_both = f.ranks[x] < f.ranks[y] && g.ranks[x] < g.ranks[y];
            if (in_both != static_cast<bool>(adj[x * n + y])) return false;
        }
    return true;
}

}  // namespace

OracleResult brute_force_dim2_oracle(const Digraph& d, int cap) {
    if (!d.is_acyclic())
        throw input_error("oracle requires an acyclic digraph");
    if (!is_transitive(d))
        throw input_error("oracle requires a transitively closed digraph");
    if (d.vertex_count() > cap)
        throw input_error("oracle refused: n=" + std::to_string(d.vertex_count()) +
                          " exceeds cap " + std::to_string(cap));
    const int n = d.vertex_count();
    std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
    for (const auto& [u, v] : d.arcs()) adj[u * n + v] = 1;

    const auto all = enumerate_orderings(d).orderings;
    OracleResult result;
    // The intersection is symmetric in (f, g), so unordered pairs suffice;
    // i == j covers total orders.
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i; j < all.size(); ++j) {
            ++result.pairs_checked;
            if (pair_realizes(adj, n, all[i], all[j])) {
                result.realizable = true;
                result.witness = {all[i], all[j]};
                return result;
            }
        }
    }
    return result;
}

bool peel_equality_check(const Digraph& d1, const Ranking& g) {
    if (!validate_ordering(d1, g))
        throw input_error("not a valid acyclic ordering of the digraph");
    if (bound_report(d1, g).gap2 != 0)
        throw input_error("peel check requires the equality case (gap2 = 0)");

    Digraph cur = d1;
    Ranking cur_g = g;
    while (cur.vertex_count() > 1) {
        const int n = cur.vertex_count();
        Ranking f;
        try {
            f = conjugate_ordering(cur, cur_g);
        } catch (const property_violation&) {
            return false;
        }

        // z is the top-ranked vertex, automatically maximal.
        int z = -1;
        for (int v = 0; v < n; ++v)
            if (cur_g.ranks[v] == n) z = v;
        const auto& pred = cur.in_neighbors(z);
        const int m = static_cast<int>(pred.size());

        // The conjugate ranks z exactly above its in-neighborhood, which
        // occupies the ranks [1..m].
        if (f.ranks[z] != m + 1) return false;
        {
            std::vector<char> hit(m + 1, 0);
            for (int x : pred) {
                const int r = f.ranks[x];
                if (r < 1 || r > m || hit[r]) return false;
                hit[r] = 1;
            }
        }

        std::vector<int> keep;
        keep.reserve(n - 1);
        for (int v = 0; v < n; ++v)
            if (v != z) keep.push_back(v);
        auto sub = induced_subgraph(cur, keep);

        // z held rank n, so the restricted ranks are a bijection onto [1..n-1].
        Ranking sub_g;
        sub_g.ranks.resize(n - 1);
        for (int i = 0; i < n - 1; ++i)
            sub_g.ranks[i] = cur_g.ranks[sub.new_to_old[i]];

        if (bound_report(sub.graph, sub_g).gap2 != 0) return false;

        Ranking sub_f;
        try {
            sub_f = conjugate_ordering(sub.graph, sub_g);
        } catch (const property_violation&) {
            return false;
        }
        // Conjugates before and after the peel agree on N^-(z) and are
        // shifted by one off it.
        for (int i = 0; i < n - 1; ++i) {
            const int old = sub.new_to_old[i];
            const bool is_pred = std::binary_search(pred.begin(), pred.end(), old);
            const int expected = is_pred ? sub_f.ranks[i] : sub_f.ranks[i] + 1;
            if (f.ranks[old] != expected) return false;
        }

        cur = std::move(sub.graph);
        cur_g = std::move(sub_g);
    }
    return true;
}

}  // namespace evec
